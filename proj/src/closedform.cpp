#include <cotzeta/closedform.hpp>

#include <cotzeta/bernoulli.hpp>
#include <cotzeta/errors.hpp>

#include <string>

namespace cotzeta
{

namespace
{

void require_m(int m, int lowest)
{
    if (m < lowest) {
        throw InputError("m must be >= " + std::to_string(lowest) + ", got " + std::to_string(m));
    }
}

long small_c(const UniMat &V)
{
    if (V.c() <= 0) {
        throw InputError("matrix entry c must be positive, got " + V.c().get_str());
    }
    if (!V.c().fits_slong_p()) {
        throw InputError("matrix entry c is too large");
    }
    return V.c().get_si();
}

Rational sign_pow(int m)
{
    return (m - 1) % 2 == 0 ? Rational(1) : Rational(-1);
}

} // namespace

HighPrecReal PiValue::to_real(long prec) const
{
    const long wp = prec + 16;
    HighPrecReal out = coeff.to_real(wp) * pow(pi(wp), pi_power);
    return out.rounded(prec);
}

std::vector<std::pair<Rational, Rational>> xj_yj(const UniMat &V)
{
    const long c = small_c(V);
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(static_cast<std::size_t>(c));
    for (long j = 0; j < c; ++j) {
        Rational x = 1 - frac(make_rational(V.d() * j, V.c()));
        Rational y = frac(make_rational(Integer(j), V.c()));
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

std::vector<Rational> bernoulli_pair_sums(const UniMat &V, int m)
{
    require_m(m, 1);
    const auto points = xj_yj(V);
    const auto &table = bernoulli_table();
    const auto two_m = static_cast<std::size_t>(2 * m);
    const BernoulliTable local(two_m > table.max_n() ? two_m : 0);
    const BernoulliTable &bt = two_m > table.max_n() ? local : table;

    std::vector<Rational> sums(two_m + 1);
    for (std::size_t l = 0; l <= two_m; ++l) {
        Rational acc = 0;
        for (const auto &[x, y] : points) {
            acc += bt.eval(l, x) * bt.eval(two_m - l, y);
        }
        sums[l] = acc / Rational(factorial(l) * factorial(two_m - l));
    }
    return sums;
}

QuadElem unit_inverse(const QuadElem &eta)
{
    if (eta.is_zero()) {
        throw ArithmeticError("eta = 0 has no inverse");
    }
    return eta.norm() == 1 ? eta.conj() : eta.inverse();
}

QuadElem theorem1_sum(const UniMat &V, const QuadElem &eta, int m)
{
    if (eta.is_zero()) {
        throw ArithmeticError("eta = 0");
    }
    const auto sums = bernoulli_pair_sums(V, m);
    // Horner in eta from the l = 0 end gives sum_{l<2m} R_l eta^{2m-1-l};
    // the l = 2m term carries eta^{-1}.
    QuadElem acc = QuadElem::rational(eta.radicand(), 0);
    for (int l = 0; l < 2 * m; ++l) {
        acc = acc * eta + sums[static_cast<std::size_t>(l)];
    }
    return acc + unit_inverse(eta) * sums.back();
}

PiValue ba_value(const QuadElem &alpha, int m, const std::optional<UniMat> &V)
{
    require_m(m, 2);
    if (alpha.is_rational()) {
        throw InputError("alpha = " + alpha.to_string() + " is rational");
    }
    UniMat mat = UniMat::identity();
    QuadElem eta = alpha;
    if (V) {
        mat = *V;
        eta = eta_of(mat, alpha);
        const PairReport report = validate_pair(alpha, mat, eta);
        if (!report.all_ok()) {
            std::string failed;
            for (const auto &check : report.checks) {
                if (!check.pass) {
                    failed += (failed.empty() ? "" : ", ") + check.name;
                }
            }
            throw InputError("matrix " + mat.to_string() + " is not a valid unit pair for alpha: " + failed);
        }
    } else {
        auto st = stabilizer(alpha);
        mat = st.V;
        eta = st.eta;
    }
    const QuadElem denom = Rational(1) - eta.pow(2L * m - 2);
    if (denom.is_zero()) {
        throw DegenerateUnitError("eta^(2m-2) = 1");
    }
    Rational scale = sign_pow(m) * Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * m - 1));
    QuadElem coeff = theorem1_sum(mat, eta, m) * scale / denom;
    return {std::move(coeff), 2L * m - 1};
}

QuadElem correction_denominator(long k, const UniMat &V, const QuadElem &eta)
{
    small_c(V);
    if (eta.is_rational()) {
        throw InputError("eta must be irrational, got " + eta.to_string());
    }
    if (k < 1) {
        throw InputError("k must be positive");
    }
    const QuadElem k_over_eta = unit_inverse(eta) * Rational(k);
    const Integer K = k_over_eta.floor();
    const Rational shift = frac(make_rational(K - V.a() * k, V.c()));
    QuadElem D = (Rational(1) - shift) - k_over_eta.frac() / Rational(V.c());
    if (D.sign() <= 0) {
        throw InternalError("correction denominator non-positive at k = " + std::to_string(k) + ": " +
                            D.to_string());
    }
    return D;
}

PiValue correction_term(long k, const QuadElem &alpha, const UniMat &V, const QuadElem &eta, int m)
{
    require_m(m, 1);
    if (!eta.is_same_field(alpha) || !(eta == eta_of(V, alpha))) {
        throw InputError("eta is not c*alpha + d for the given matrix");
    }
    const QuadElem D = correction_denominator(k, V, eta);
    Integer kpow;
    mpz_pow_ui(kpow.get_mpz_t(), Integer(k).get_mpz_t(), static_cast<unsigned long>(2 * m - 1));
    QuadElem coeff = eta.pow(2L * m - 2) / (D * Rational(kpow));
    return {std::move(coeff), -1};
}

LerchPoly lerch_rhs(int m)
{
    require_m(m, 2);
    const auto two_m = static_cast<std::size_t>(2 * m);
    LerchPoly L{m, {}};
    L.coeffs.reserve(two_m + 1);
    for (std::size_t l = 0; l <= two_m; ++l) {
        L.coeffs.push_back(bern_number(l) * bern_number(two_m - l) / Rational(factorial(l) * factorial(two_m - l)));
    }
    return L;
}

PiValue lerch_exact(const LerchPoly &L, const QuadElem &alpha)
{
    if (alpha.is_zero()) {
        throw ArithmeticError("alpha = 0");
    }
    QuadElem acc = QuadElem::rational(alpha.radicand(), 0);
    const auto two_m = static_cast<std::size_t>(2 * L.m);
    for (std::size_t l = 0; l < two_m; ++l) {
        acc = acc * alpha + L.coeffs[l];
    }
    acc += alpha.inverse() * L.coeffs[two_m];
    Rational scale = sign_pow(L.m) * Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * L.m - 1));
    return {acc * scale, 2L * L.m - 1};
}

HighPrecReal lerch_eval(const LerchPoly &L, const QuadElem &alpha, long prec)
{
    return lerch_exact(L, alpha).to_real(prec);
}

HighPrecReal lerch_eval(const LerchPoly &L, const HighPrecReal &alpha, long prec)
{
    if (alpha.is_zero()) {
        throw ArithmeticError("alpha = 0");
    }
    const long wp = prec + 32;
    const HighPrecReal x = alpha.rounded(wp);
    HighPrecReal acc(wp);
    const auto two_m = static_cast<std::size_t>(2 * L.m);
    for (std::size_t l = 0; l < two_m; ++l) {
        acc = acc * x + HighPrecReal(L.coeffs[l], wp);
    }
    acc += HighPrecReal(L.coeffs[two_m], wp) / x;
    HighPrecReal scale = pow(ldexp(pi(wp), 1), 2L * L.m - 1);
    if (L.m % 2 == 0) {
        scale = -scale;
    }
    return (acc * scale).rounded(prec);
}

} // namespace cotzeta
