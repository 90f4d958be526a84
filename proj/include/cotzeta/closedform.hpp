#ifndef COTZETA_CLOSEDFORM_HPP
#define COTZETA_CLOSEDFORM_HPP

#include <cotzeta/modular.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace cotzeta
{

/// Exact value coeff * pi^pi_power with coeff in Q(sqrt(d)).
struct PiValue {
    QuadElem coeff;
    long pi_power;

    HighPrecReal to_real(long prec) const;
    friend bool operator==(const PiValue &, const PiValue &) = default;
};

/// Coefficients c_l = B_l B_{2m-l} / (l! (2m-l)!), l = 0..2m, of the
/// reciprocity polynomial
///   (-1)^{m-1} (2 pi)^{2m-1} sum_l c_l alpha^{2m-l-1}
/// relating xi(2m-1, alpha) and alpha^{2m-2} xi(2m-1, 1/alpha).
struct LerchPoly {
    int m;
    std::vector<Rational> coeffs;
};

// (x_j, y_j) = (1 - {dj/c}, {j/c}) for j = 0..c-1.
std::vector<std::pair<Rational, Rational>> xj_yj(const UniMat &V);

// R_l = sum_j B_l(x_j) B_{2m-l}(y_j) / (l! (2m-l)!) for l = 0..2m.
std::vector<Rational> bernoulli_pair_sums(const UniMat &V, int m);

// sum_{l=0}^{2m} R_l eta^{2m-l-1}, exact.
QuadElem theorem1_sum(const UniMat &V, const QuadElem &eta, int m);

/// Closed form of xi(2m-1, alpha) for real quadratic alpha:
///   (-1)^{m-1} (2 pi)^{2m-1} / (1 - eta^{2m-2}) * theorem1_sum(V, eta, m).
/// Without V the pair comes from stabilizer(alpha). A supplied V must pass
/// every validate_pair check.
PiValue ba_value(const QuadElem &alpha, int m, const std::optional<UniMat> &V = std::nullopt);

// 1 - {(K - ak)/c} - {k/eta}/c with K = floor(k/eta). Throws InternalError
// if it is not strictly positive.
QuadElem correction_denominator(long k, const UniMat &V, const QuadElem &eta);

// eta^{2m-2} / (pi k^{2m-1} correction_denominator(k, V, eta)).
PiValue correction_term(long k, const QuadElem &alpha, const UniMat &V, const QuadElem &eta, int m);

LerchPoly lerch_rhs(int m);
PiValue lerch_exact(const LerchPoly &L, const QuadElem &alpha);
HighPrecReal lerch_eval(const LerchPoly &L, const QuadElem &alpha, long prec);
HighPrecReal lerch_eval(const LerchPoly &L, const HighPrecReal &alpha, long prec);

// eta^{-1}, through the conjugate when the norm is 1.
QuadElem unit_inverse(const QuadElem &eta);

} // namespace cotzeta

#endif
