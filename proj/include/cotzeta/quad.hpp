#ifndef COTZETA_QUAD_HPP
#define COTZETA_QUAD_HPP

#include <cotzeta/real.hpp>

#include <string>
#include <utility>

namespace cotzeta
{

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is always squarefree and >= 2, and sqrt(d) denotes the positive root.
/// Rationals are valid elements (b == 0) and keep their d so that mixed
/// sums stay in one field. Ordering, floor and sign are decided by integer
/// comparisons only; nothing here ever consults a floating approximation.
class QuadElem
{
public:
    // (p + q*sqrt(D)) / r, with square factors of D folded into q.
    static QuadElem make(const Integer &p, const Integer &q, const Integer &r, const Integer &D);
    // a + b*sqrt(d); d must already be squarefree and >= 2.
    static QuadElem from_parts(const Integer &d, Rational a, Rational b);
    static QuadElem rational(const Integer &d, Rational a);

    const Integer &radicand() const
    {
        return m_d;
    }
    const Rational &a() const
    {
        return m_a;
    }
    const Rational &b() const
    {
        return m_b;
    }

    bool is_rational() const
    {
        return m_b == 0;
    }
    bool is_zero() const
    {
        return m_a == 0 && m_b == 0;
    }

    QuadElem conj() const;
    Rational norm() const;
    Rational trace() const;
    // -1, 0 or +1 under the real embedding sqrt(d) > 0.
    int sign() const;
    Integer floor() const;
    // x - floor(x), in [0, 1).
    QuadElem frac() const;
    // min(frac(x), 1 - frac(x)).
    QuadElem dist_nearest_int() const;
    QuadElem inverse() const;
    QuadElem pow(long e) const;
    bool is_same_field(const QuadElem &other) const
    {
        return m_d == other.m_d;
    }

    // Relative error at most 2^(1 - prec). Cancellation between a and
    // b*sqrt(d) is removed by going through the conjugate.
    HighPrecReal to_real(long prec) const;

    // "3 + 2*sqrt(2)", "1/2 - 1/2*sqrt(5)", "0".
    std::string to_string() const;

    QuadElem operator-() const;
    QuadElem &operator+=(const QuadElem &rhs);
    QuadElem &operator-=(const QuadElem &rhs);
    QuadElem &operator*=(const QuadElem &rhs);
    QuadElem &operator/=(const QuadElem &rhs);
    QuadElem &operator+=(const Rational &rhs);
    QuadElem &operator-=(const Rational &rhs);
    QuadElem &operator*=(const Rational &rhs);
    QuadElem &operator/=(const Rational &rhs);

    friend QuadElem operator+(QuadElem x, const QuadElem &y)
    {
        return x += y;
    }
    friend QuadElem operator-(QuadElem x, const QuadElem &y)
    {
        return x -= y;
    }
    friend QuadElem operator*(QuadElem x, const QuadElem &y)
    {
        return x *= y;
    }
    friend QuadElem operator/(QuadElem x, const QuadElem &y)
    {
        return x /= y;
    }
    friend QuadElem operator+(QuadElem x, const Rational &y)
    {
        return x += y;
    }
    friend QuadElem operator-(QuadElem x, const Rational &y)
    {
        return x -= y;
    }
    friend QuadElem operator*(QuadElem x, const Rational &y)
    {
        return x *= y;
    }
    friend QuadElem operator/(QuadElem x, const Rational &y)
    {
        return x /= y;
    }
    friend QuadElem operator+(const Rational &x, QuadElem y)
    {
        return y += x;
    }
    friend QuadElem operator-(const Rational &x, const QuadElem &y)
    {
        return -y + x;
    }
    friend QuadElem operator*(const Rational &x, QuadElem y)
    {
        return y *= x;
    }
    friend QuadElem operator/(const Rational &x, const QuadElem &y)
    {
        return y.inverse() * x;
    }

    friend bool operator==(const QuadElem &x, const QuadElem &y)
    {
        return x.m_d == y.m_d && x.m_a == y.m_a && x.m_b == y.m_b;
    }
    friend bool operator==(const QuadElem &x, const Rational &y)
    {
        return x.m_b == 0 && x.m_a == y;
    }

private:
    QuadElem(Integer d, Rational a, Rational b) : m_d(std::move(d)), m_a(std::move(a)), m_b(std::move(b)) {}
    void require_same_field(const QuadElem &other) const;

    Integer m_d;
    Rational m_a;
    Rational m_b;
};

// Largest s with s*s dividing n, and the squarefree cofactor: n = s^2 * core.
struct SquarefreeSplit {
    Integer square_root;
    Integer core;
};
SquarefreeSplit squarefree_split(const Integer &n);

// floor(q) and ceil(q) for a rational.
Integer floor(const Rational &q);
Integer ceil(const Rational &q);
// q - floor(q).
Rational frac(const Rational &q);

} // namespace cotzeta

#endif
