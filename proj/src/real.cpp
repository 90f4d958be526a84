#include <cotzeta/real.hpp>

#include <cotzeta/errors.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <utility>

namespace cotzeta
{

namespace
{

void check_prec(long prec)
{
    if (prec < HighPrecReal::min_prec || prec > MPFR_PREC_MAX) {
        throw InputError("precision must be at least " + std::to_string(HighPrecReal::min_prec) + " bits");
    }
}

} // namespace

HighPrecReal::HighPrecReal(long prec)
{
    check_prec(prec);
    mpfr_init2(m_value, prec);
    mpfr_set_zero(m_value, 1);
}

HighPrecReal::HighPrecReal(long value, long prec) : HighPrecReal(prec)
{
    mpfr_set_si(m_value, value, MPFR_RNDN);
}

HighPrecReal::HighPrecReal(const Integer &value, long prec) : HighPrecReal(prec)
{
    mpfr_set_z(m_value, value.get_mpz_t(), MPFR_RNDN);
}

HighPrecReal::HighPrecReal(const Rational &value, long prec) : HighPrecReal(prec)
{
    mpfr_set_q(m_value, value.get_mpq_t(), MPFR_RNDN);
}

HighPrecReal::HighPrecReal(const std::string &decimal, long prec) : HighPrecReal(prec)
{
    char *end = nullptr;
    mpfr_strtofr(m_value, decimal.c_str(), &end, 10, MPFR_RNDN);
    if (decimal.empty() || end == nullptr || *end != '\0') {
        throw InputError("not a decimal number: " + decimal);
    }
}

HighPrecReal::HighPrecReal(const HighPrecReal &other)
{
    mpfr_init2(m_value, mpfr_get_prec(other.m_value));
    mpfr_set(m_value, other.m_value, MPFR_RNDN);
}

HighPrecReal::HighPrecReal(HighPrecReal &&other) noexcept
{
    // Leave `other` as a valid minimal-precision zero.
    mpfr_init2(m_value, min_prec);
    mpfr_swap(m_value, other.m_value);
}

HighPrecReal &HighPrecReal::operator=(const HighPrecReal &other)
{
    if (this != &other) {
        mpfr_set_prec(m_value, mpfr_get_prec(other.m_value));
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }
    return *this;
}

HighPrecReal &HighPrecReal::operator=(HighPrecReal &&other) noexcept
{
    mpfr_swap(m_value, other.m_value);
    return *this;
}

HighPrecReal::~HighPrecReal()
{
    mpfr_clear(m_value);
}

HighPrecReal HighPrecReal::rounded(long prec) const
{
    HighPrecReal out(prec);
    mpfr_set(out.m_value, m_value, MPFR_RNDN);
    return out;
}

void HighPrecReal::grow_to(long prec)
{
    if (prec > precision()) {
        mpfr_prec_round(m_value, prec, MPFR_RNDN);
    }
}

std::string HighPrecReal::to_string(int digits) const
{
    if (mpfr_nan_p(m_value)) {
        return "nan";
    }
    if (mpfr_inf_p(m_value)) {
        return sign() > 0 ? "inf" : "-inf";
    }
    if (is_zero()) {
        return "0";
    }
    digits = std::max(digits, 2);
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char *)> raw(
        mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), m_value, MPFR_RNDN), mpfr_free_str);
    std::string mant(raw.get());
    std::string out;
    if (mant.front() == '-') {
        out.push_back('-');
        mant.erase(0, 1);
    }
    // mpfr gives 0.DDDD x 10^exp10; rewrite as D.DDD e(exp10-1).
    while (mant.size() > 1 && mant.back() == '0') {
        mant.pop_back();
    }
    out.push_back(mant.front());
    if (mant.size() > 1) {
        out.push_back('.');
        out.append(mant, 1, std::string::npos);
    }
    const long e = static_cast<long>(exp10) - 1;
    if (e != 0) {
        out += "e" + std::to_string(e);
    }
    return out;
}

std::string HighPrecReal::to_string() const
{
    return to_string(static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30102999566398119521)));
}

HighPrecReal &HighPrecReal::operator+=(const HighPrecReal &rhs)
{
    grow_to(rhs.precision());
    mpfr_add(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

HighPrecReal &HighPrecReal::operator-=(const HighPrecReal &rhs)
{
    grow_to(rhs.precision());
    mpfr_sub(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

HighPrecReal &HighPrecReal::operator*=(const HighPrecReal &rhs)
{
    grow_to(rhs.precision());
    mpfr_mul(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

HighPrecReal &HighPrecReal::operator/=(const HighPrecReal &rhs)
{
    grow_to(rhs.precision());
    mpfr_div(m_value, m_value, rhs.m_value, MPFR_RNDN);
    return *this;
}

HighPrecReal HighPrecReal::operator-() const
{
    HighPrecReal out(*this);
    mpfr_neg(out.m_value, out.m_value, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const HighPrecReal &x, const HighPrecReal &y)
{
    if (mpfr_unordered_p(x.m_value, y.m_value)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(x.m_value, y.m_value);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

HighPrecReal abs(HighPrecReal x)
{
    mpfr_abs(x.get(), x.get(), MPFR_RNDN);
    return x;
}

HighPrecReal sqrt(const HighPrecReal &x)
{
    HighPrecReal out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HighPrecReal pow(const HighPrecReal &x, long e)
{
    HighPrecReal out(x.precision());
    mpfr_pow_si(out.get(), x.get(), e, MPFR_RNDN);
    return out;
}

HighPrecReal ldexp(HighPrecReal x, long e)
{
    if (e >= 0) {
        mpfr_mul_2ui(x.get(), x.get(), static_cast<unsigned long>(e), MPFR_RNDN);
    } else {
        mpfr_div_2ui(x.get(), x.get(), static_cast<unsigned long>(-e), MPFR_RNDN);
    }
    return x;
}

HighPrecReal pi(long prec)
{
    HighPrecReal out(prec);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

HighPrecReal sin(const HighPrecReal &x)
{
    HighPrecReal out(x.precision());
    mpfr_sin(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HighPrecReal cos(const HighPrecReal &x)
{
    HighPrecReal out(x.precision());
    mpfr_cos(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HighPrecReal cot(const HighPrecReal &x)
{
    HighPrecReal out(x.precision());
    mpfr_cot(out.get(), x.get(), MPFR_RNDN);
    return out;
}

HighPrecReal max(const HighPrecReal &x, const HighPrecReal &y)
{
    return x < y ? y : x;
}

HighPrecReal pow2(long e, long prec)
{
    return ldexp(HighPrecReal(1L, prec), e);
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw InputError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string &text)
{
    auto is_int = [](const std::string &s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
            return false;
        }
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](unsigned char ch) { return std::isdigit(ch) != 0; });
    };
    auto to_int = [](std::string s) {
        if (!s.empty() && s[0] == '+') {
            s.erase(0, 1);
        }
        return Integer(s, 10);
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
        throw InputError("not a rational literal: '" + text + "'");
    }
    return make_rational(to_int(num), to_int(den));
}

} // namespace cotzeta
