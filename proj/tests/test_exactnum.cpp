#include "test_support.hpp"

#include <cotzeta/errors.hpp>
#include <cotzeta/quad.hpp>

#include <doctest.h>

#include <random>

using namespace cotzeta;
using namespace cotzeta::testing;

TEST_CASE("quad_make normalizes the radicand")
{
    const QuadElem r2 = QuadElem::make(0, 1, 1, 2);
    CHECK(r2.radicand() == 2);
    CHECK(r2.a() == 0);
    CHECK(r2.b() == 1);

    const QuadElem golden = QuadElem::make(1, 1, 2, 5);
    CHECK(golden.radicand() == 5);
    CHECK(golden.a() == rat(1, 2));
    CHECK(golden.b() == rat(1, 2));

    // sqrt(8) = 2 sqrt(2)
    const QuadElem r8 = QuadElem::make(0, 1, 1, 8);
    CHECK(r8.radicand() == 2);
    CHECK(r8.a() == 0);
    CHECK(r8.b() == 2);

    // 72 = 6^2 * 2, and a negative denominator moves its sign up.
    const QuadElem x = QuadElem::make(3, 1, -6, 72);
    CHECK(x.radicand() == 2);
    CHECK(x.a() == rat(-1, 2));
    CHECK(x.b() == -1);
}

TEST_CASE("quad_make rejects bad input")
{
    CHECK_THROWS_AS(QuadElem::make(0, 1, 1, 1), InputError);
    CHECK_THROWS_AS(QuadElem::make(0, 1, 1, 0), InputError);
    CHECK_THROWS_AS(QuadElem::make(0, 1, 1, -3), InputError);
    CHECK_THROWS_AS(QuadElem::make(0, 1, 1, 9), InputError);
    CHECK_THROWS_AS(QuadElem::make(1, 1, 0, 2), InputError);
    CHECK_THROWS_AS(QuadElem::from_parts(12, 0, 1), InputError);
}

TEST_CASE("squarefree_split against a brute-force divisor scan")
{
    for (long n = 1; n <= 400; ++n) {
        long best = 1;
        for (long s = 1; s * s <= n; ++s) {
            if (n % (s * s) == 0) {
                best = s;
            }
        }
        const auto split = squarefree_split(n);
        CHECK(split.square_root == best);
        CHECK(split.core == n / (best * best));
    }
}

TEST_CASE("field arithmetic examples")
{
    const QuadElem one_plus = quad(1, 1, 1, 2);
    CHECK(one_plus * one_plus == quad(3, 2, 1, 2));
    CHECK(quad(3, 2, 1, 2) * quad(3, -2, 1, 2) == QuadElem::rational(2, 1));
    const QuadElem inv = QuadElem::rational(2, 1) / quad(3, 2, 1, 2);
    CHECK(inv == quad(3, -2, 1, 2));
    CHECK(inv * quad(3, 2, 1, 2) == QuadElem::rational(2, 1));
    CHECK(quad(1, 1, 1, 2) - quad(1, 1, 1, 2) == QuadElem::rational(2, 0));
}

TEST_CASE("field arithmetic errors")
{
    CHECK_THROWS_AS(sqrt_of(2) + sqrt_of(3), InputError);
    CHECK_THROWS_AS(sqrt_of(2) * sqrt_of(5), InputError);
    CHECK_THROWS_AS(sqrt_of(2) / QuadElem::rational(2, 0), ArithmeticError);
    CHECK_THROWS_AS(sqrt_of(2) / Rational(0), ArithmeticError);
}

TEST_CASE("conjugate and norm")
{
    CHECK(quad(3, 2, 1, 2).conj() == quad(3, -2, 1, 2));
    CHECK(quad(3, 2, 1, 2).norm() == 1);
    CHECK(quad(3, 1, 2, 5).norm() == 1);
    CHECK(quad(1, 1, 2, 5).norm() == -1);
}

TEST_CASE("exact sign")
{
    CHECK(quad(3, -2, 1, 2).sign() == 1);
    CHECK(quad(2, -2, 1, 2).sign() == -1);
    CHECK(QuadElem::rational(2, 0).sign() == 0);
    CHECK(quad(-3, 2, 1, 2).sign() == -1);
    CHECK(quad(-2, 2, 1, 2).sign() == 1);
    // 1393^2 - 2 * 985^2 = -1: a very close call.
    CHECK(QuadElem::from_parts(2, 1393, -985).sign() == -1);
    CHECK(QuadElem::from_parts(2, -1393, 985).sign() == 1);
}

TEST_CASE("floor and frac")
{
    CHECK(sqrt_of(2).frac() == quad(-1, 1, 1, 2));
    CHECK(quad(3, 2, 1, 2).floor() == 5);
    CHECK((-sqrt_of(2)).floor() == -2);
    CHECK(quad(1, 1, 2, 5).floor() == 1);
    CHECK(QuadElem::rational(2, rat(-7, 3)).floor() == -3);
    CHECK(QuadElem::rational(2, rat(-7, 3)).frac() == QuadElem::rational(2, rat(2, 3)));
    CHECK(QuadElem::from_parts(2, rat(1393, 7), rat(-985, 7)).floor() == -1);
}

TEST_CASE("rational floor and ceil")
{
    CHECK(floor(rat(7, 2)) == 3);
    CHECK(ceil(rat(7, 2)) == 4);
    CHECK(floor(rat(-7, 2)) == -4);
    CHECK(ceil(rat(-7, 2)) == -3);
    CHECK(floor(rat(4)) == 4);
    CHECK(ceil(rat(-4)) == -4);
    CHECK(frac(rat(-1, 3)) == rat(2, 3));
}

TEST_CASE("powers")
{
    const QuadElem eta = quad(3, 2, 1, 2);
    CHECK(eta.pow(0) == QuadElem::rational(2, 1));
    // Repeated multiplication oracle.
    CHECK(eta.pow(2) == eta * eta);
    CHECK(eta.pow(2) == quad(17, 12, 1, 2));
    CHECK(eta.pow(-1) == quad(3, -2, 1, 2));
    QuadElem acc = QuadElem::rational(2, 1);
    for (int e = 1; e <= 13; ++e) {
        acc *= eta;
        CHECK(eta.pow(e) == acc);
        CHECK(eta.pow(-e) * acc == QuadElem::rational(2, 1));
    }
    CHECK_THROWS_AS(QuadElem::rational(2, 0).pow(-1), ArithmeticError);
    CHECK(QuadElem::rational(2, 0).pow(3).is_zero());
}

TEST_CASE("to_real against an integer square root")
{
    // floor(sqrt(2) * 2^63) = isqrt(2 * 2^126).
    Integer big = Integer(2) << 126;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
    const HighPrecReal oracle = ldexp(HighPrecReal(root, 128), -63);
    const HighPrecReal value = sqrt_of(2).to_real(64);
    CHECK(value.precision() == 64);
    CHECK(abs(value - oracle) <= pow2(-63, 128) * oracle);
    CHECK(value.to_string(12) == "1.41421356237");
}

TEST_CASE("to_real keeps relative accuracy under cancellation")
{
    // 985 sqrt(2) - 1393 = 1 / (1393 + 985 sqrt(2)), about 3.6e-4.
    const QuadElem tiny = QuadElem::from_parts(2, -1393, 985);
    const HighPrecReal via_inverse = HighPrecReal(1L, 400) / QuadElem::from_parts(2, 1393, 985).to_real(400);
    const HighPrecReal value = tiny.to_real(64);
    CHECK(abs(value - via_inverse) <= pow2(-63, 400) * via_inverse);
}

TEST_CASE("distance to the nearest integer")
{
    CHECK(sqrt_of(2).dist_nearest_int() == quad(-1, 1, 1, 2));
    CHECK(quad(3, 2, 1, 2).dist_nearest_int() == Rational(6) - quad(3, 2, 1, 2));
    CHECK(QuadElem::rational(2, rat(1, 2)).dist_nearest_int() == QuadElem::rational(2, rat(1, 2)));
}

TEST_CASE("to_string forms")
{
    CHECK(quad(3, 2, 1, 2).to_string() == "3 + 2*sqrt(2)");
    CHECK(quad(1, -1, 2, 5).to_string() == "1/2 - 1/2*sqrt(5)");
    CHECK(sqrt_of(2).to_string() == "sqrt(2)");
    CHECK((-sqrt_of(3)).to_string() == "-sqrt(3)");
    CHECK(QuadElem::rational(2, 0).to_string() == "0");
}

TEST_CASE("rational literals")
{
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(parse_rational("+5/-10") == rat(-1, 2));
    CHECK(to_string(rat(-2, 4)) == "-1/2");
    CHECK(to_string(rat(6, 3)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("HighPrecReal formatting and precision propagation")
{
    CHECK(HighPrecReal(0L, 64).to_string() == "0");
    CHECK(HighPrecReal(rat(-1, 8), 64).to_string(10) == "-1.25e-1");
    CHECK(HighPrecReal(1234L, 64).to_string(10) == "1.234e3");
    const HighPrecReal x(1L, 64);
    const HighPrecReal y(1L, 200);
    CHECK((x + y).precision() == 200);
    CHECK(HighPrecReal(std::string("0.125"), 64) == HighPrecReal(rat(1, 8), 64));
    CHECK_THROWS_AS(HighPrecReal(std::string("0.1x"), 64), InputError);
    CHECK_THROWS_AS(HighPrecReal(8), InputError);
}

TEST_CASE("property: canonical form, field axioms, conjugation, floor")
{
    std::mt19937_64 rng(20261018);
    for (long d : {2L, 5L}) {
        for (int trial = 0; trial < 300; ++trial) {
            const QuadElem x = random_quad(rng, d);
            const QuadElem y = random_quad(rng, d);
            const QuadElem z = random_quad(rng, d);

            const QuadElem sum = x * y + z;
            for (const Rational *q : {&sum.a(), &sum.b()}) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
                CHECK(g == 1);
                CHECK(q->get_den() > 0);
            }

            CHECK((x + y) + z == x + (y + z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x * y).norm() == x.norm() * y.norm());
            if (!y.is_zero()) {
                CHECK((x / y) * y == x);
            }

            const QuadElem f = x.frac();
            CHECK(QuadElem::rational(d, Rational(x.floor())) + f == x);
            CHECK(f.sign() >= 0);
            CHECK((f - Rational(1)).sign() < 0);

            // Sign agrees with a 128-bit evaluation when that is unambiguous.
            const HighPrecReal r = x.to_real(128);
            if (abs(r) > pow2(-100, 128)) {
                CHECK(x.sign() == r.sign());
            }
        }
    }
}
