#include <cotzeta/series.hpp>

#include <cotzeta/bernoulli.hpp>
#include <cotzeta/closedform.hpp>
#include <cotzeta/errors.hpp>

#include <algorithm>
#include <string>

namespace cotzeta
{

namespace
{

long ceil_log2(long k)
{
    long bits = 0;
    while ((1L << bits) < k) {
        ++bits;
    }
    return bits;
}

void require_m(int m)
{
    if (m < 1) {
        throw InputError("m must be positive");
    }
}

} // namespace

QuadElem frac_n_alpha(long n, const QuadElem &alpha)
{
    QuadElem f = (alpha * Rational(n)).frac();
    if (f.is_zero()) {
        throw PoleError("cot(pi n alpha) has a pole: n alpha is an integer for n = " + std::to_string(n));
    }
    return f;
}

HighPrecReal cot_pi_frac(const QuadElem &f, long prec)
{
    if (f.sign() <= 0 || (f - Rational(1)).sign() >= 0) {
        throw InputError("cot_pi_frac needs 0 < f < 1, got " + f.to_string());
    }
    const int side = (f - Rational(1, 2)).sign();
    if (side == 0) {
        return HighPrecReal(prec);
    }
    // cot(pi f) = -cot(pi (1 - f)); always evaluate on (0, 1/2).
    const QuadElem g = side < 0 ? f : Rational(1) - f;
    const long floor_log2 = g.to_real(53).exponent() - 1;
    const long wp = prec + 2 * std::max(0L, -floor_log2) + 32;
    HighPrecReal out = cot(pi(wp) * g.to_real(wp));
    if (side > 0) {
        out = -out;
    }
    return out.rounded(prec);
}

long series_working_prec(long k, long prec)
{
    return prec + 2 * ceil_log2(k) + 32;
}

SeriesResult xi_partial(long k, int m, const QuadElem &alpha, long prec)
{
    require_m(m);
    if (k < 1) {
        throw InputError("k must be positive");
    }
    if (alpha.is_rational()) {
        throw PoleError("alpha = " + alpha.to_string() + " is rational");
    }
    const long wp = series_working_prec(k, prec);
    const auto power = static_cast<unsigned long>(2 * m - 1);
    HighPrecReal acc(wp);
    HighPrecReal term(wp);
    for (long n = 1; n <= k; ++n) {
        term = cot_pi_frac(frac_n_alpha(n, alpha), wp);
        for (unsigned long i = 0; i < power; ++i) {
            mpfr_div_si(term.get(), term.get(), n, MPFR_RNDN);
        }
        acc += term;
    }
    return {k, m, acc.rounded(prec), prec, alpha.to_string()};
}

ComplexReal A_nq(long n, int q, const Rational &x, long prec)
{
    if (n < 1 || q < 1) {
        throw InputError("A_nq needs n, q >= 1");
    }
    if (q == 1 && x.get_den() == 1) {
        return {HighPrecReal(prec), HighPrecReal(prec)};
    }
    const long wp = prec + 2 * ceil_log2(n) + 32;
    const HighPrecReal two_pi = ldexp(pi(wp), 1);
    HighPrecReal acc(wp);
    HighPrecReal term(wp);
    for (long u = 1; u <= n; ++u) {
        const Rational phase = frac(x * u);
        const HighPrecReal theta = two_pi * HighPrecReal(phase, wp);
        term = q % 2 == 0 ? cos(theta) : sin(theta);
        for (int i = 0; i < q; ++i) {
            mpfr_div_si(term.get(), term.get(), u, MPFR_RNDN);
        }
        acc += term;
    }
    acc = ldexp(acc, 1).rounded(prec);
    if (q % 2 == 0) {
        return {acc, HighPrecReal(prec)};
    }
    return {HighPrecReal(prec), acc};
}

ComplexReal ALimit::to_complex(long prec) const
{
    const long wp = prec + 16;
    const HighPrecReal scale = pow(pi(wp), pi_power);
    return {(HighPrecReal(re, wp) * scale).rounded(prec), (HighPrecReal(im, wp) * scale).rounded(prec)};
}

ALimit A_limit(int q, const Rational &x)
{
    if (q < 1) {
        throw InputError("q must be positive");
    }
    if (q == 1 && x.get_den() == 1) {
        throw InputError("A_limit excludes q = 1 with integral x (the finite sums vanish)");
    }
    const auto uq = static_cast<unsigned long>(q);
    // -B_q({x}) 2^q / q! times i^q.
    Rational value = -bern_poly_eval(uq, frac(x)) * Rational(Integer(1) << uq) / Rational(factorial(uq));
    switch (q % 4) {
    case 0:
        return {value, 0, q};
    case 1:
        return {0, value, q};
    case 2:
        return {-value, 0, q};
    default:
        return {0, -value, q};
    }
}

std::vector<ConvergenceRow> convergence_table(const QuadElem &alpha, int m, const std::vector<long> &ks, long prec)
{
    std::vector<ConvergenceRow> rows;
    if (ks.empty()) {
        return rows;
    }
    const HighPrecReal exact = ba_value(alpha, m).to_real(prec + 16);
    rows.reserve(ks.size());
    for (long k : ks) {
        SeriesResult r = xi_partial(k, m, alpha, prec);
        HighPrecReal err = abs(r.value - exact).rounded(prec);
        rows.push_back({k, std::move(r.value), std::move(err)});
    }
    return rows;
}

} // namespace cotzeta
