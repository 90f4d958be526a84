#ifndef COTZETA_SERIES_HPP
#define COTZETA_SERIES_HPP

#include <cotzeta/quad.hpp>

#include <string>
#include <vector>

namespace cotzeta
{

struct SeriesResult {
    long k;
    int m;
    HighPrecReal value;
    long prec;
    std::string alpha_descriptor;
};

struct ComplexReal {
    HighPrecReal re;
    HighPrecReal im;
};

// {n alpha}, exact. Throws PoleError when n alpha is an integer.
QuadElem frac_n_alpha(long n, const QuadElem &alpha);

// cot(pi f) for 0 < f < 1 (exact bounds). Relative error <= 2^(2 - prec).
HighPrecReal cot_pi_frac(const QuadElem &f, long prec);

// Working precision used by xi_partial: prec + 2 ceil(log2 k) + 32.
long series_working_prec(long k, long prec);

/// xi_k(2m-1, alpha) = sum_{n=1}^{k} cot(pi n alpha) / n^{2m-1}.
///
/// Each {n alpha} is reduced exactly before conversion, terms are added
/// in ascending n at series_working_prec(k, prec), and the sum is rounded
/// to prec once at the end.
SeriesResult xi_partial(long k, int m, const QuadElem &alpha, long prec);

/// A_{n,q}(x) = sum_{0<|u|<=n} e(ux) u^{-q}, with e(ux) = e({ux}) reduced
/// exactly. For q even the sum is real, for q odd purely imaginary.
ComplexReal A_nq(long n, int q, const Rational &x, long prec);

/// lim_{n -> inf} A_{n,q}(x) = -B_q({x}) (2 pi i)^q / q!, as
/// (re + i im) * pi^pi_power with rational re, im.
struct ALimit {
    Rational re;
    Rational im;
    long pi_power;

    ComplexReal to_complex(long prec) const;
};

ALimit A_limit(int q, const Rational &x);

struct ConvergenceRow {
    long k;
    HighPrecReal xi;
    HighPrecReal abs_err;
};

// One row per entry of ks, in order; errors against ba_value(alpha, m).
std::vector<ConvergenceRow> convergence_table(const QuadElem &alpha, int m, const std::vector<long> &ks, long prec);

} // namespace cotzeta

#endif
