#include "doctest.h"

#include <random>

#include "arason/exact_arith.hpp"

using namespace arason;

namespace {

std::vector<std::uint64_t> trial_division(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_square_rat(Rat const& r)
{
    if (r.sign() < 0)
        return false;
    mpz_class n = r.numerator(), d = r.denominator();
    return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

}  // namespace

TEST_CASE("factorize examples")
{
    CHECK(factorize(std::uint64_t{1}).empty());
    CHECK(factorize(std::uint64_t{12}) == std::vector<std::uint64_t>{2, 2, 3});
    CHECK(factorize(std::uint64_t{9991}) == std::vector<std::uint64_t>{97, 103});
}

TEST_CASE("factorize matches trial division")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n = rng() % 2000000 + 1;
        CHECK(factorize(n) == trial_division(n));
    }
}

TEST_CASE("factorize large semiprime")
{
    std::uint64_t p = 1000000007, q = 998244353;
    auto f = factorize(mpz_class(std::to_string(p)) * mpz_class(std::to_string(q)));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == mpz_class(std::to_string(q)));
    CHECK(f[1] == mpz_class(std::to_string(p)));
}

TEST_CASE("primality")
{
    CHECK(is_prime(std::uint64_t{2}));
    CHECK_FALSE(is_prime(std::uint64_t{1}));
    CHECK_FALSE(is_prime(std::uint64_t{561}));
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
    for (std::uint64_t n = 1; n < 3000; ++n)
        CHECK(is_prime(n) == (trial_division(n).size() == 1));
}

TEST_CASE("legendre by Euler criterion")
{
    for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
        for (std::int64_t a = -40; a <= 40; ++a) {
            std::int64_t r = ((a % (std::int64_t)p) + p) % p;
            int expected = 0;
            if (r != 0) {
                expected = -1;
                for (std::uint64_t x = 1; x < p; ++x)
                    if ((x * x) % p == (std::uint64_t)r)
                        expected = 1;
            }
            CHECK(legendre(a, p) == expected);
        }
    }
}

TEST_CASE("square class examples")
{
    CHECK(square_class(Rat(4, 9)).is_one());
    auto c = square_class(Rat(-18));
    CHECK(c.sign() == -1);
    CHECK(c.primes() == std::vector<std::uint64_t>{2});
    CHECK(square_class(Rat(45, 7)).primes() == std::vector<std::uint64_t>{5, 7});
    CHECK(square_class(Rat(45, 7)).sign() == 1);
    CHECK_THROWS_AS(square_class(Rat(0)), PreconditionError);
}

TEST_CASE("square class: r / rep is a square")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        long n = (long)(rng() % 200000) - 100000;
        long d = (long)(rng() % 5000) + 1;
        if (n == 0)
            continue;
        Rat r(n, d);
        auto c = square_class(r);
        CHECK(is_square_rat(r / c.as_rat()));
    }
}

TEST_CASE("square class product")
{
    CHECK((SquareClass::of(-2) * SquareClass::of(-2)).is_one());
    CHECK(SquareClass::of(3) * SquareClass::of(5) == SquareClass::of(15));
    CHECK(SquareClass::of(-6) * SquareClass::of(15) == SquareClass::of(-10));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 500; ++i) {
        long a = (long)(rng() % 2001) - 1000, b = (long)(rng() % 2001) - 1000;
        if (a == 0 || b == 0)
            continue;
        CHECK(SquareClass::of(a) * SquareClass::of(b) == SquareClass::of(a * b));
    }
}

TEST_CASE("rat parse")
{
    CHECK(Rat::parse("-3/6") == Rat(-1, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("abc"));
}
