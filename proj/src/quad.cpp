#include <cotzeta/quad.hpp>

#include <cotzeta/errors.hpp>

#include <utility>

namespace cotzeta
{

SquarefreeSplit squarefree_split(const Integer &n)
{
    if (n <= 0) {
        throw InputError("squarefree_split needs a positive integer");
    }
    Integer rest = n;
    Integer root = 1;
    Integer core = 1;
    auto strip = [&](const Integer &p) {
        unsigned count = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
            rest /= p;
            ++count;
        }
        for (unsigned i = 0; i < count / 2; ++i) {
            root *= p;
        }
        if (count % 2 == 1) {
            core *= p;
        }
    };
    strip(Integer(2));
    for (Integer p = 3; p * p <= rest; p += 2) {
        strip(p);
    }
    // Whatever survives trial division is 1 or a prime.
    core *= rest;
    return {root, core};
}

Integer floor(const Rational &q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational &q)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational frac(const Rational &q)
{
    return q - Rational(floor(q));
}

QuadElem QuadElem::make(const Integer &p, const Integer &q, const Integer &r, const Integer &D)
{
    if (D <= 1) {
        throw InputError("radicand must exceed 1, got " + D.get_str());
    }
    if (mpz_perfect_square_p(D.get_mpz_t()) != 0) {
        throw InputError("radicand must not be a perfect square, got " + D.get_str());
    }
    if (r == 0) {
        throw InputError("denominator r must be nonzero");
    }
    const auto split = squarefree_split(D);
    return QuadElem(split.core, make_rational(p, r), make_rational(q * split.square_root, r));
}

QuadElem QuadElem::from_parts(const Integer &d, Rational a, Rational b)
{
    if (d < 2) {
        throw InputError("radicand must be >= 2, got " + d.get_str());
    }
    if (squarefree_split(d).core != d) {
        throw InputError("radicand must be squarefree, got " + d.get_str());
    }
    a.canonicalize();
    b.canonicalize();
    return QuadElem(d, std::move(a), std::move(b));
}

QuadElem QuadElem::rational(const Integer &d, Rational a)
{
    return from_parts(d, std::move(a), Rational(0));
}

void QuadElem::require_same_field(const QuadElem &other) const
{
    if (m_d != other.m_d) {
        throw InputError("field mismatch: sqrt(" + m_d.get_str() + ") vs sqrt(" + other.m_d.get_str() + ")");
    }
}

QuadElem QuadElem::conj() const
{
    return QuadElem(m_d, m_a, -m_b);
}

Rational QuadElem::norm() const
{
    return m_a * m_a - m_b * m_b * m_d;
}

Rational QuadElem::trace() const
{
    return 2 * m_a;
}

int QuadElem::sign() const
{
    const int sa = sgn(m_a);
    const int sb = sgn(m_b);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: the larger of a^2 and b^2 d wins. They are never
    // equal because d is squarefree and b != 0.
    const Rational lhs = m_a * m_a;
    const Rational rhs = m_b * m_b * m_d;
    return lhs > rhs ? sa : sb;
}

Integer QuadElem::floor() const
{
    if (m_b == 0) {
        return cotzeta::floor(m_a);
    }
    // x = (P + Q sqrt(d)) / R with integers and R > 0.
    Integer R;
    mpz_lcm(R.get_mpz_t(), m_a.get_den_mpz_t(), m_b.get_den_mpz_t());
    const Integer P = m_a.get_num() * (R / m_a.get_den());
    const Integer Q = m_b.get_num() * (R / m_b.get_den());
    Integer s;
    const Integer qqd = Q * Q * m_d;
    mpz_sqrt(s.get_mpz_t(), qqd.get_mpz_t());
    // Q sqrt(d) is irrational, so it lies strictly inside (s, s+1) or (-s-1, -s).
    // Then P + Q sqrt(d) lies strictly inside (L, L+1), and no multiple of R
    // can sit strictly between two consecutive integers.
    const Integer L = Q > 0 ? Integer(P + s) : Integer(P - s - 1);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), L.get_mpz_t(), R.get_mpz_t());
    return out;
}

QuadElem QuadElem::frac() const
{
    return *this - Rational(floor());
}

QuadElem QuadElem::dist_nearest_int() const
{
    QuadElem f = frac();
    QuadElem g = Rational(1) - f;
    return (f - Rational(1, 2)).sign() <= 0 ? f : g;
}

QuadElem QuadElem::inverse() const
{
    const Rational n = norm();
    if (n == 0) {
        throw ArithmeticError("division by zero in Q(sqrt(" + m_d.get_str() + "))");
    }
    return QuadElem(m_d, m_a / n, -m_b / n);
}

QuadElem QuadElem::pow(long e) const
{
    if (e < 0) {
        if (is_zero()) {
            throw ArithmeticError("zero raised to a negative power");
        }
        // Avoid -LONG_MIN overflow by peeling one factor.
        return inverse().pow(-(e + 1)) * inverse();
    }
    QuadElem result(m_d, Rational(1), Rational(0));
    QuadElem base = *this;
    auto n = static_cast<unsigned long>(e);
    while (n != 0) {
        if ((n & 1U) != 0) {
            result *= base;
        }
        n >>= 1U;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

HighPrecReal QuadElem::to_real(long prec) const
{
    const long wp = prec + 16;
    if (m_b == 0) {
        return HighPrecReal(m_a, prec);
    }
    HighPrecReal root = sqrt(HighPrecReal(m_d, wp));
    HighPrecReal irr = HighPrecReal(m_b, wp) * root;
    if (m_a == 0) {
        return irr.rounded(prec);
    }
    if (sgn(m_a) == sgn(m_b)) {
        return (HighPrecReal(m_a, wp) + irr).rounded(prec);
    }
    // a + b sqrt(d) = (a^2 - b^2 d) / (a - b sqrt(d)); no cancellation below.
    const HighPrecReal num(norm(), wp);
    return (num / (HighPrecReal(m_a, wp) - irr)).rounded(prec);
}

std::string QuadElem::to_string() const
{
    if (m_b == 0) {
        return cotzeta::to_string(m_a);
    }
    std::string root = "sqrt(" + m_d.get_str() + ")";
    const Rational mag = abs(m_b);
    std::string irr = mag == 1 ? root : cotzeta::to_string(mag) + "*" + root;
    if (m_a == 0) {
        return (m_b < 0 ? "-" : "") + irr;
    }
    return cotzeta::to_string(m_a) + (m_b < 0 ? " - " : " + ") + irr;
}

QuadElem QuadElem::operator-() const
{
    return QuadElem(m_d, -m_a, -m_b);
}

QuadElem &QuadElem::operator+=(const QuadElem &rhs)
{
    require_same_field(rhs);
    m_a += rhs.m_a;
    m_b += rhs.m_b;
    return *this;
}

QuadElem &QuadElem::operator-=(const QuadElem &rhs)
{
    require_same_field(rhs);
    m_a -= rhs.m_a;
    m_b -= rhs.m_b;
    return *this;
}

QuadElem &QuadElem::operator*=(const QuadElem &rhs)
{
    require_same_field(rhs);
    Rational a = m_a * rhs.m_a + m_b * rhs.m_b * m_d;
    Rational b = m_a * rhs.m_b + m_b * rhs.m_a;
    m_a = std::move(a);
    m_b = std::move(b);
    return *this;
}

QuadElem &QuadElem::operator/=(const QuadElem &rhs)
{
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

QuadElem &QuadElem::operator+=(const Rational &rhs)
{
    m_a += rhs;
    return *this;
}

QuadElem &QuadElem::operator-=(const Rational &rhs)
{
    m_a -= rhs;
    return *this;
}

QuadElem &QuadElem::operator*=(const Rational &rhs)
{
    m_a *= rhs;
    m_b *= rhs;
    return *this;
}

QuadElem &QuadElem::operator/=(const Rational &rhs)
{
    if (rhs == 0) {
        throw ArithmeticError("division by zero");
    }
    m_a /= rhs;
    m_b /= rhs;
    return *this;
}

} // namespace cotzeta
