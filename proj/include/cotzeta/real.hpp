#ifndef COTZETA_REAL_HPP
#define COTZETA_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace cotzeta
{

using Integer = mpz_class;
using Rational = mpq_class;

/// Binary floating-point real with an explicit significand width.
///
/// Thin RAII owner of an mpfr_t. Every operation rounds to nearest-even.
/// Binary operations produce a result at the larger of the two operand
/// precisions, so precision propagates through an expression.
class HighPrecReal
{
public:
    static constexpr long min_prec = 16;

    explicit HighPrecReal(long prec = 53);
    HighPrecReal(long value, long prec);
    HighPrecReal(const Integer &value, long prec);
    HighPrecReal(const Rational &value, long prec);
    HighPrecReal(const std::string &decimal, long prec);

    HighPrecReal(const HighPrecReal &other);
    HighPrecReal(HighPrecReal &&other) noexcept;
    HighPrecReal &operator=(const HighPrecReal &other);
    HighPrecReal &operator=(HighPrecReal &&other) noexcept;
    ~HighPrecReal();

    long precision() const
    {
        return static_cast<long>(mpfr_get_prec(m_value));
    }
    // Same value rounded to a new precision.
    HighPrecReal rounded(long prec) const;

    mpfr_srcptr get() const
    {
        return m_value;
    }
    mpfr_ptr get()
    {
        return m_value;
    }

    bool is_zero() const
    {
        return mpfr_zero_p(m_value) != 0;
    }
    bool is_finite() const
    {
        return mpfr_number_p(m_value) != 0;
    }
    int sign() const
    {
        return mpfr_sgn(m_value);
    }
    double to_double() const
    {
        return mpfr_get_d(m_value, MPFR_RNDN);
    }
    // Base-2 exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
    long exponent() const
    {
        return static_cast<long>(mpfr_get_exp(m_value));
    }

    // Scientific notation with `digits` significant decimal digits,
    // e.g. "1.2180415833e-1". Zero prints as "0".
    std::string to_string(int digits) const;
    // Digits implied by the precision: floor(prec * log10 2).
    std::string to_string() const;

    HighPrecReal &operator+=(const HighPrecReal &rhs);
    HighPrecReal &operator-=(const HighPrecReal &rhs);
    HighPrecReal &operator*=(const HighPrecReal &rhs);
    HighPrecReal &operator/=(const HighPrecReal &rhs);

    friend HighPrecReal operator+(HighPrecReal lhs, const HighPrecReal &rhs)
    {
        return lhs += rhs;
    }
    friend HighPrecReal operator-(HighPrecReal lhs, const HighPrecReal &rhs)
    {
        return lhs -= rhs;
    }
    friend HighPrecReal operator*(HighPrecReal lhs, const HighPrecReal &rhs)
    {
        return lhs *= rhs;
    }
    friend HighPrecReal operator/(HighPrecReal lhs, const HighPrecReal &rhs)
    {
        return lhs /= rhs;
    }
    HighPrecReal operator-() const;

    friend bool operator==(const HighPrecReal &x, const HighPrecReal &y)
    {
        return mpfr_equal_p(x.m_value, y.m_value) != 0;
    }
    friend std::partial_ordering operator<=>(const HighPrecReal &x, const HighPrecReal &y);

private:
    void grow_to(long prec);

    mpfr_t m_value;
};

HighPrecReal abs(HighPrecReal x);
HighPrecReal sqrt(const HighPrecReal &x);
HighPrecReal pow(const HighPrecReal &x, long e);
// x * 2^e, exact.
HighPrecReal ldexp(HighPrecReal x, long e);
HighPrecReal pi(long prec);
HighPrecReal sin(const HighPrecReal &x);
HighPrecReal cos(const HighPrecReal &x);
HighPrecReal cot(const HighPrecReal &x);
HighPrecReal max(const HighPrecReal &x, const HighPrecReal &y);

// 2^e at the given precision.
HighPrecReal pow2(long e, long prec);

// Canonical "num/den" (or "num" when den == 1).
std::string to_string(const Rational &q);
// Parses "num", "num/den", with optional sign; throws InputError.
Rational parse_rational(const std::string &text);
// num/den in lowest terms with positive denominator; den == 0 throws InputError.
Rational make_rational(const Integer &num, const Integer &den);

} // namespace cotzeta

#endif
