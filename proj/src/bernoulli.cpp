#include <cotzeta/bernoulli.hpp>

#include <cotzeta/errors.hpp>

#include <string>

namespace cotzeta
{

Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BernoulliTable::BernoulliTable(std::size_t max_n)
{
    m_numbers.reserve(max_n + 1);
    m_numbers.emplace_back(1);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
    for (std::size_t n = 1; n <= max_n; ++n) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (m_numbers[j] != 0) {
                acc += Rational(binomial(n + 1, j)) * m_numbers[j];
            }
        }
        Rational bn = -acc / Rational(Integer(static_cast<unsigned long>(n + 1)));
        bn.canonicalize();
        m_numbers.push_back(bn);
    }

    // B_n(x) = sum_j C(n, j) B_j x^{n-j}; store constant term first.
    m_polys.resize(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto &coeffs = m_polys[n];
        coeffs.assign(n + 1, Rational(0));
        for (std::size_t j = 0; j <= n; ++j) {
            coeffs[n - j] = Rational(binomial(n, j)) * m_numbers[j];
        }
    }
}

const Rational &BernoulliTable::number(std::size_t n) const
{
    if (n > max_n()) {
        throw InputError("Bernoulli index " + std::to_string(n) + " exceeds table size " +
                         std::to_string(max_n()));
    }
    return m_numbers[n];
}

const std::vector<Rational> &BernoulliTable::poly(std::size_t n) const
{
    if (n > max_n()) {
        throw InputError("Bernoulli index " + std::to_string(n) + " exceeds table size " +
                         std::to_string(max_n()));
    }
    return m_polys[n];
}

Rational BernoulliTable::eval(std::size_t n, const Rational &x) const
{
    const auto &coeffs = poly(n);
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

const BernoulliTable &bernoulli_table()
{
    static const BernoulliTable table;
    return table;
}

Rational bern_number(std::size_t n)
{
    if (n <= bernoulli_table().max_n()) {
        return bernoulli_table().number(n);
    }
    return BernoulliTable(n).number(n);
}

std::vector<Rational> bern_poly(std::size_t n)
{
    if (n <= bernoulli_table().max_n()) {
        return bernoulli_table().poly(n);
    }
    return BernoulliTable(n).poly(n);
}

Rational bern_poly_eval(std::size_t n, const Rational &x)
{
    if (n <= bernoulli_table().max_n()) {
        return bernoulli_table().eval(n, x);
    }
    return BernoulliTable(n).eval(n, x);
}

} // namespace cotzeta
