#ifndef COTZETA_ORACLE_HPP
#define COTZETA_ORACLE_HPP

#include <cotzeta/modular.hpp>

#include <optional>

namespace cotzeta
{

/// Exact brute-force sums over Q(sqrt(d)) for the finite identity.
///
/// Throughout, eta = c alpha + d for V = (a b; c d) with c > 0, and
/// K = floor(k / eta). The inner sums T1 and T2 run over integer w in
/// closed real intervals; integer_range() maps those endpoints.

// sum_{l=1}^{2m-1} eta^{2m-1-l} u^{l-2m} v^{-l}.
QuadElem f_m(long u, long v, const QuadElem &eta, int m);
// (u^{2m-1} - eta^{2m-1} v^{2m-1}) / (u^{2m-1} v^{2m-1} (u - eta v)).
QuadElem f_m_quotient(long u, long v, const QuadElem &eta, int m);

// Integers w with lo <= w <= hi: [ceil(lo), floor(hi)]; may be empty.
struct IntRange {
    Integer first;
    Integer last;
    bool empty() const
    {
        return first > last;
    }
};
IntRange integer_range(const Rational &lo, const Rational &hi);

// floor(k / eta) for eta = eta_of(V, alpha); validates c > 0, eta irrational.
Integer cutoff_K(long k, const QuadElem &alpha, const UniMat &V);

// -sum_{0<|u|<=k, 0<|v|<=K, c | u - dv} c f_m(u, v).
QuadElem S_exact(long k, const QuadElem &alpha, const UniMat &V, int m);
// sum_{v=1}^{K} v^{1-2m} sum_{-(k+dv)/c <= w <= (k-dv)/c} 1/(alpha v - w).
QuadElem T1_exact(long k, const QuadElem &alpha, const UniMat &V, int m);
// sum_{u=1}^{k} u^{1-2m} sum_{-(K-au)/c <= w <= (K+au)/c} 1/(V(alpha) u - w).
QuadElem T2_exact(long k, const QuadElem &alpha, const UniMat &V, int m);
// -(2c/eta) sum_{c|v<=K} v^{-2m} - 2c eta^{2m-1} sum_{c|u<=k} u^{-2m}.
QuadElem U_exact(long k, const QuadElem &alpha, const UniMat &V, int m);

struct DeformReport {
    long k;
    int m;
    QuadElem S;
    QuadElem T1;
    QuadElem T2;
    QuadElem U;
    // S == 2 T1 - 2 eta^{2m-2} T2 + U, decided exactly.
    bool second_deformation_holds;
    std::optional<HighPrecReal> first_deformation_residual;
};

DeformReport check_second_deformation(long k, const QuadElem &alpha, const UniMat &V, int m);

struct FirstDeformationCheck {
    HighPrecReal residual; // |S - rhs|, complex modulus
    HighPrecReal lhs;      // S as a real
    HighPrecReal rhs_re;
    HighPrecReal rhs_im;
};

/// S_m(k) against
///   -sum_{l=1}^{2m-1} eta^{2m-1-l} sum_{j mod c} A_{k,2m-l}(j/c) A_{K,l}(-dj/c),
/// evaluated numerically at prec (+ guard bits).
FirstDeformationCheck check_first_deformation(long k, const QuadElem &alpha, const UniMat &V, int m, long prec);

/// [xi_K(2m-1, alpha) - eta^{2m-2} xi_k(2m-1, V alpha) + correction]
///   - (-1)^{m-1} (2 pi)^{2m-1} theorem1_sum(V, eta, m).
HighPrecReal theorem1_residual(long k, const QuadElem &alpha, const UniMat &V, int m, long prec);

/// S_m(k) - (-1)^{m-1} (2 pi)^{2m} sum_{l=1}^{2m-1} R_l eta^{2m-1-l}, the
/// distance of the exact sum from its limit through the first deformation.
HighPrecReal first_deformation_gap(long k, const QuadElem &alpha, const UniMat &V, int m, long prec);

} // namespace cotzeta

#endif
