#ifndef COTZETA_BERNOULLI_HPP
#define COTZETA_BERNOULLI_HPP

#include <cotzeta/real.hpp>

#include <cstddef>
#include <vector>

namespace cotzeta
{

/// Bernoulli numbers B_0..B_N and the coefficient lists of B_n(x), n <= N.
///
/// Conventions follow the generating function t e^{tx} / (e^t - 1), so
/// B_1 = B_1(0) = -1/2. Built once, read-only afterwards.
class BernoulliTable
{
public:
    static constexpr std::size_t default_max = 64;

    explicit BernoulliTable(std::size_t max_n = default_max);

    std::size_t max_n() const
    {
        return m_numbers.size() - 1;
    }
    const Rational &number(std::size_t n) const;
    // Constant term first; degree n, leading coefficient 1.
    const std::vector<Rational> &poly(std::size_t n) const;
    Rational eval(std::size_t n, const Rational &x) const;

private:
    std::vector<Rational> m_numbers;
    std::vector<std::vector<Rational>> m_polys;
};

// Shared table up to BernoulliTable::default_max.
const BernoulliTable &bernoulli_table();

// These fall back to a freshly built table when n exceeds the shared one.
Rational bern_number(std::size_t n);
std::vector<Rational> bern_poly(std::size_t n);
Rational bern_poly_eval(std::size_t n, const Rational &x);

// Binomial coefficient and factorial as exact integers.
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

} // namespace cotzeta

#endif
