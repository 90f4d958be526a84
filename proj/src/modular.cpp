#include <cotzeta/modular.hpp>

#include <cotzeta/errors.hpp>

#include <algorithm>
#include <optional>
#include <utility>

namespace cotzeta
{

UniMat::UniMat(Integer a, Integer b, Integer c, Integer d)
    : m_a(std::move(a)), m_b(std::move(b)), m_c(std::move(c)), m_d(std::move(d))
{
    if (det() != 1) {
        throw InputError("matrix " + to_string() + " has determinant " + det().get_str() + ", expected 1");
    }
}

std::string UniMat::to_string() const
{
    return "(" + m_a.get_str() + "," + m_b.get_str() + ";" + m_c.get_str() + "," + m_d.get_str() + ")";
}

UniMat operator*(const UniMat &x, const UniMat &y)
{
    return UniMat(x.m_a * y.m_a + x.m_b * y.m_c, x.m_a * y.m_b + x.m_b * y.m_d, x.m_c * y.m_a + x.m_d * y.m_c,
                  x.m_c * y.m_b + x.m_d * y.m_d);
}

MinPoly minimal_polynomial(const QuadElem &alpha)
{
    if (alpha.is_rational()) {
        throw InputError("alpha = " + alpha.to_string() + " is rational");
    }
    // alpha is a root of x^2 - trace x + norm.
    const Rational tr = alpha.trace();
    const Rational nm = alpha.norm();
    Integer scale;
    mpz_lcm(scale.get_mpz_t(), tr.get_den_mpz_t(), nm.get_den_mpz_t());
    Integer A = scale;
    Integer B = -tr.get_num() * (scale / tr.get_den());
    Integer C = nm.get_num() * (scale / nm.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), C.get_mpz_t());
    A /= g;
    B /= g;
    C /= g;
    Integer disc = B * B - 4 * A * C;
    return {A, B, C, disc};
}

namespace
{

std::optional<PellSolution> pell4_brute(const Integer &disc, unsigned long max_u)
{
    for (unsigned long u = 1; u <= max_u; ++u) {
        const Integer tt = disc * u * u + 4;
        if (mpz_perfect_square_p(tt.get_mpz_t()) != 0) {
            Integer t;
            mpz_sqrt(t.get_mpz_t(), tt.get_mpz_t());
            return PellSolution{t, Integer(u)};
        }
    }
    return std::nullopt;
}

} // namespace

PellSolution pell4(const Integer &disc)
{
    if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t()) != 0) {
        throw InputError("Pell discriminant must be positive and nonsquare, got " + disc.get_str());
    }
    // Below 16 the Legendre criterion does not cover every solution, but the
    // solutions are tiny.
    if (disc < 16) {
        return *pell4_brute(disc, 1000);
    }
    // For disc > 16 every solution has |t/u - sqrt(disc)| < 1/(2u^2), so t/u
    // reduces to a convergent p/q of sqrt(disc) with (t, u) = g (p, q), g in
    // {1, 2}: p^2 - disc q^2 = 4 (g = 1) or = 1 (g = 2).
    Integer a0;
    mpz_sqrt(a0.get_mpz_t(), disc.get_mpz_t());
    Integer m = 0, den = 1, a = a0;
    Integer p_prev = 1, p = a0;
    Integer q_prev = 0, q = 1;
    std::optional<PellSolution> best;
    while (!best || q < best->u) {
        const Integer n = p * p - disc * q * q;
        if (n == 4) {
            best = PellSolution{p, q};
        } else if (n == 1) {
            PellSolution cand{2 * p, 2 * q};
            if (!best || cand.u < best->u) {
                best = cand;
            }
        }
        m = den * a - m;
        den = (disc - m * m) / den;
        a = (a0 + m) / den;
        Integer p_next = a * p + p_prev;
        Integer q_next = a * q + q_prev;
        p_prev = std::exchange(p, std::move(p_next));
        q_prev = std::exchange(q, std::move(q_next));
    }
    return *best;
}

QuadElem moebius(const UniMat &V, const QuadElem &alpha)
{
    const QuadElem den = alpha * Rational(V.c()) + Rational(V.d());
    if (den.is_zero()) {
        throw ArithmeticError("Moebius denominator c*alpha + d vanishes");
    }
    return (alpha * Rational(V.a()) + Rational(V.b())) / den;
}

QuadElem eta_of(const UniMat &V, const QuadElem &alpha)
{
    return alpha * Rational(V.c()) + Rational(V.d());
}

StabilizerResult stabilizer(const QuadElem &alpha)
{
    MinPoly poly = minimal_polynomial(alpha);
    PellSolution sol = pell4(poly.disc);
    // t and Bu have the same parity: t^2 = disc u^2 + 4 = (B^2 - 4AC) u^2 + 4.
    UniMat V((sol.t - poly.B * sol.u) / 2, -poly.C * sol.u, poly.A * sol.u, (sol.t + poly.B * sol.u) / 2);
    QuadElem eta = eta_of(V, alpha);
    return {std::move(V), std::move(eta), std::move(poly), std::move(sol)};
}

bool PairReport::finite_identity_ok() const
{
    for (const char *name : {"det", "c_positive", "eta_positive", "eta_matches"}) {
        const CheckEntry *e = find(name);
        if (e == nullptr || !e->pass) {
            return false;
        }
    }
    return true;
}

bool PairReport::all_ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry &e) { return e.pass; });
}

const CheckEntry *PairReport::find(const std::string &name) const
{
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckEntry &e) { return e.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

PairReport validate_pair(const QuadElem &alpha, const UniMat &V, const QuadElem &eta)
{
    PairReport report;
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    add("det", V.det() == 1, "ad - bc = " + V.det().get_str());
    add("c_positive", V.c() > 0, "c = " + V.c().get_str());
    add("eta_positive", eta.sign() > 0, "eta = " + eta.to_string());
    const bool same_field = eta.is_same_field(alpha);
    const QuadElem expected = eta_of(V, alpha);
    add("eta_matches", same_field && eta == expected, "c*alpha + d = " + expected.to_string());

    if (expected.is_zero()) {
        add("fixed_point", false, "c*alpha + d = 0");
    } else {
        const QuadElem image = moebius(V, alpha);
        add("fixed_point", image == alpha, "V alpha = " + image.to_string());
    }
    const Rational n = eta.norm();
    add("norm_one", n == 1, "eta * conj(eta) = " + to_string(n));
    add("conj_positive", eta.conj().sign() > 0, "conj(eta) = " + eta.conj().to_string());
    add("eta_not_one", !(eta == Rational(1)), "eta != 1");
    return report;
}

} // namespace cotzeta
