#include <cotzeta/oracle.hpp>

#include <cotzeta/closedform.hpp>
#include <cotzeta/errors.hpp>
#include <cotzeta/series.hpp>

#include <string>
#include <vector>

namespace cotzeta
{

namespace
{

void require_m(int m)
{
    if (m < 1) {
        throw InputError("m must be positive, got " + std::to_string(m));
    }
}

Integer ipow(long base, unsigned long e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), e);
    return out;
}

// 1 / (x^e y^f) with signs handled by make_rational.
Rational recip_monomial(long x, unsigned long e, long y, unsigned long f)
{
    return make_rational(1, ipow(x, e) * ipow(y, f));
}

struct PairSetup {
    QuadElem eta;
    Integer K;
};

PairSetup setup(long k, const QuadElem &alpha, const UniMat &V, int m)
{
    require_m(m);
    if (k < 1) {
        throw InputError("k must be positive");
    }
    if (V.c() <= 0) {
        throw InputError("matrix entry c must be positive, got " + V.c().get_str());
    }
    QuadElem eta = eta_of(V, alpha);
    if (eta.is_rational()) {
        throw InputError("eta = c*alpha + d must be irrational, got " + eta.to_string());
    }
    Integer K = (unit_inverse(eta) * Rational(k)).floor();
    return {std::move(eta), std::move(K)};
}

long to_long(const Integer &n, const char *what)
{
    if (!n.fits_slong_p()) {
        throw InputError(std::string(what) + " does not fit in a machine integer");
    }
    return n.get_si();
}

bool divides(const Integer &c, const Integer &n)
{
    return mpz_divisible_p(n.get_mpz_t(), c.get_mpz_t()) != 0;
}

// sum_{w in range} 1 / (x - w), x irrational.
QuadElem reciprocal_sum(const QuadElem &x, const IntRange &range)
{
    QuadElem acc = QuadElem::rational(x.radicand(), 0);
    if (range.empty()) {
        return acc;
    }
    for (Integer w = range.first; w <= range.last; ++w) {
        acc += (x - Rational(w)).inverse();
    }
    return acc;
}

// Sum of n^{-e} over 1 <= n <= limit with c | n.
Rational multiples_power_sum(const Integer &c, long limit, unsigned long e)
{
    Rational acc = 0;
    const long step = to_long(c, "c");
    for (long n = step; n <= limit; n += step) {
        acc += make_rational(1, ipow(n, e));
    }
    return acc;
}

Rational sign_pow(int m)
{
    return (m - 1) % 2 == 0 ? Rational(1) : Rational(-1);
}

} // namespace

QuadElem f_m(long u, long v, const QuadElem &eta, int m)
{
    require_m(m);
    if (u == 0 || v == 0) {
        throw InputError("f_m needs u, v != 0");
    }
    const auto two_m = static_cast<unsigned long>(2 * m);
    // Horner over eta: l = 1 carries the top power eta^{2m-2}.
    QuadElem acc = QuadElem::rational(eta.radicand(), 0);
    for (unsigned long l = 1; l < two_m; ++l) {
        acc = acc * eta + recip_monomial(u, two_m - l, v, l);
    }
    return acc;
}

QuadElem f_m_quotient(long u, long v, const QuadElem &eta, int m)
{
    require_m(m);
    if (u == 0 || v == 0) {
        throw InputError("f_m needs u, v != 0");
    }
    const auto e = static_cast<unsigned long>(2 * m - 1);
    const Rational ue(ipow(u, e));
    const Rational ve(ipow(v, e));
    const QuadElem num = (-(eta.pow(static_cast<long>(e)) * ve)) + ue;
    const QuadElem den = (Rational(u) - eta * Rational(v)) * (ue * ve);
    return num / den;
}

IntRange integer_range(const Rational &lo, const Rational &hi)
{
    return {ceil(lo), floor(hi)};
}

Integer cutoff_K(long k, const QuadElem &alpha, const UniMat &V)
{
    return setup(k, alpha, V, 1).K;
}

QuadElem S_exact(long k, const QuadElem &alpha, const UniMat &V, int m)
{
    const auto [eta, Kbig] = setup(k, alpha, V, m);
    const long K = to_long(Kbig, "K");
    const auto two_m = static_cast<unsigned long>(2 * m);
    // f_m(u, v) = sum_l eta^{2m-1-l} u^{l-2m} v^{-l}: collect the rational
    // coefficient of each power of eta over all admissible (u, v) first.
    std::vector<Rational> by_power(two_m - 1, Rational(0));
    for (long u = -k; u <= k; ++u) {
        if (u == 0) {
            continue;
        }
        for (long v = -K; v <= K; ++v) {
            if (v == 0 || !divides(V.c(), Integer(u) - V.d() * v)) {
                continue;
            }
            for (unsigned long l = 1; l < two_m; ++l) {
                by_power[two_m - 1 - l] += recip_monomial(u, two_m - l, v, l);
            }
        }
    }
    QuadElem acc = QuadElem::rational(eta.radicand(), 0);
    for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
        acc = acc * eta + *it;
    }
    return acc * Rational(-V.c());
}

QuadElem T1_exact(long k, const QuadElem &alpha, const UniMat &V, int m)
{
    const auto [eta, Kbig] = setup(k, alpha, V, m);
    const long K = to_long(Kbig, "K");
    const auto e = static_cast<unsigned long>(2 * m - 1);
    QuadElem acc = QuadElem::rational(alpha.radicand(), 0);
    for (long v = 1; v <= K; ++v) {
        const Integer dv = V.d() * v;
        const IntRange range = integer_range(make_rational(-(k + dv), V.c()), make_rational(k - dv, V.c()));
        acc += reciprocal_sum(alpha * Rational(v), range) / Rational(ipow(v, e));
    }
    return acc;
}

QuadElem T2_exact(long k, const QuadElem &alpha, const UniMat &V, int m)
{
    const auto [eta, K] = setup(k, alpha, V, m);
    const QuadElem image = moebius(V, alpha);
    const auto e = static_cast<unsigned long>(2 * m - 1);
    QuadElem acc = QuadElem::rational(alpha.radicand(), 0);
    for (long u = 1; u <= k; ++u) {
        const Integer au = V.a() * u;
        const IntRange range = integer_range(make_rational(-(K - au), V.c()), make_rational(K + au, V.c()));
        acc += reciprocal_sum(image * Rational(u), range) / Rational(ipow(u, e));
    }
    return acc;
}

QuadElem U_exact(long k, const QuadElem &alpha, const UniMat &V, int m)
{
    const auto [eta, Kbig] = setup(k, alpha, V, m);
    const long K = to_long(Kbig, "K");
    const auto two_m = static_cast<unsigned long>(2 * m);
    // With gcd(c, d) = 1 the character sum over j mod c collapses both
    // exponential sums onto multiples of c.
    const Rational two_c(2 * V.c());
    const QuadElem first = unit_inverse(eta) * (two_c * multiples_power_sum(V.c(), K, two_m));
    const QuadElem second = eta.pow(2L * m - 1) * (two_c * multiples_power_sum(V.c(), k, two_m));
    return -(first + second);
}

DeformReport check_second_deformation(long k, const QuadElem &alpha, const UniMat &V, int m)
{
    const auto [eta, K] = setup(k, alpha, V, m);
    QuadElem S = S_exact(k, alpha, V, m);
    QuadElem T1 = T1_exact(k, alpha, V, m);
    QuadElem T2 = T2_exact(k, alpha, V, m);
    QuadElem U = U_exact(k, alpha, V, m);
    const QuadElem rhs = T1 * Rational(2) - eta.pow(2L * m - 2) * T2 * Rational(2) + U;
    const bool holds = S == rhs;
    return {k, m, std::move(S), std::move(T1), std::move(T2), std::move(U), holds, std::nullopt};
}

FirstDeformationCheck check_first_deformation(long k, const QuadElem &alpha, const UniMat &V, int m, long prec)
{
    const auto [eta, Kbig] = setup(k, alpha, V, m);
    const long K = to_long(Kbig, "K");
    const long c = to_long(V.c(), "c");
    const long wp = prec + 32;
    const HighPrecReal eta_r = eta.to_real(wp);

    HighPrecReal re(wp);
    HighPrecReal im(wp);
    for (int l = 1; l <= 2 * m - 1; ++l) {
        HighPrecReal inner_re(wp);
        HighPrecReal inner_im(wp);
        if (K >= 1) {
            for (long j = 0; j < c; ++j) {
                const ComplexReal x = A_nq(k, 2 * m - l, make_rational(j, V.c()), wp);
                const ComplexReal y = A_nq(K, l, make_rational(-V.d() * j, V.c()), wp);
                inner_re += x.re * y.re - x.im * y.im;
                inner_im += x.re * y.im + x.im * y.re;
            }
        }
        const HighPrecReal w = pow(eta_r, 2L * m - 1 - l);
        re -= w * inner_re;
        im -= w * inner_im;
    }
    HighPrecReal lhs = S_exact(k, alpha, V, m).to_real(wp);
    const HighPrecReal dr = lhs - re;
    HighPrecReal residual = sqrt(dr * dr + im * im);
    return {residual.rounded(prec), lhs.rounded(prec), re.rounded(prec), im.rounded(prec)};
}

HighPrecReal theorem1_residual(long k, const QuadElem &alpha, const UniMat &V, int m, long prec)
{
    const auto [eta, Kbig] = setup(k, alpha, V, m);
    if (m < 2) {
        throw InputError("theorem1_residual needs m >= 2");
    }
    if (eta.sign() <= 0) {
        throw InputError("eta = c*alpha + d must be positive, got " + eta.to_string());
    }
    const QuadElem image = moebius(V, alpha);
    if (image.is_rational()) {
        throw InputError("V alpha must be irrational");
    }
    const long K = to_long(Kbig, "K");
    const long wp = prec + 32;

    HighPrecReal lhs(wp);
    if (K >= 1) {
        lhs = xi_partial(K, m, alpha, wp).value;
    }
    lhs -= eta.pow(2L * m - 2).to_real(wp) * xi_partial(k, m, image, wp).value;
    lhs += correction_term(k, alpha, V, eta, m).to_real(wp);

    const Rational scale = sign_pow(m) * Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * m - 1));
    const PiValue rhs{theorem1_sum(V, eta, m) * scale, 2L * m - 1};
    return (lhs - rhs.to_real(wp)).rounded(prec);
}

HighPrecReal first_deformation_gap(long k, const QuadElem &alpha, const UniMat &V, int m, long prec)
{
    const auto [eta, K] = setup(k, alpha, V, m);
    const auto sums = bernoulli_pair_sums(V, m);
    QuadElem acc = QuadElem::rational(eta.radicand(), 0);
    for (int l = 1; l <= 2 * m - 1; ++l) {
        acc = acc * eta + sums[static_cast<std::size_t>(l)];
    }
    const Rational scale = sign_pow(m) * Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * m));
    const PiValue limit{acc * scale, 2L * m};
    const long wp = prec + 32;
    return (S_exact(k, alpha, V, m).to_real(wp) - limit.to_real(wp)).rounded(prec);
}

} // namespace cotzeta
