#include <doctest.h>

#include <random>

#include "classnum/arith.hpp"

using namespace classnum;
using arith::Int;

TEST_CASE("is_prime on known values") {
    CHECK(arith::is_prime(2));
    CHECK(arith::is_prime(233));
    CHECK_FALSE(arith::is_prime(41241));  // 3 * 59 * 233
    CHECK_FALSE(arith::is_prime(0));
    CHECK_FALSE(arith::is_prime(1));
    CHECK(arith::is_prime(Int("79241")));
    CHECK(arith::is_prime(Int("4673706701")));
    CHECK_FALSE(arith::is_prime(Int("2019499")));  // 89 * 22691
    CHECK(arith::is_prime(Int("5123189985484229035947419")));
    // Carmichael numbers and strong-pseudoprime bait
    CHECK_FALSE(arith::is_prime(561));
    CHECK_FALSE(arith::is_prime(Int("3215031751")));
    CHECK(arith::is_prime(Int("18446744073709551557")));  // largest prime < 2^64
    CHECK(arith::is_prime(Int("618970019642690137449562111")));  // 2^89 - 1
    CHECK_FALSE(arith::is_prime(Int("618970019642690137449562113")));
}

TEST_CASE("is_prime matches trial division up to 20000") {
    auto trial = [](unsigned long n) {
        if (n < 2) return false;
        for (unsigned long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (unsigned long n = 0; n < 20000; ++n)
        CHECK(arith::is_prime(Int(n)) == trial(n));
}

TEST_CASE("factorize small and table values") {
    auto f58 = arith::factorize(58);
    REQUIRE(f58.factors.size() == 2);
    CHECK(f58.factors[0] == std::pair<Int, unsigned>{2, 1});
    CHECK(f58.factors[1] == std::pair<Int, unsigned>{29, 1});

    CHECK(arith::factorize(1).factors.empty());

    auto f = arith::factorize(Int("79241"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == 79241);
    CHECK(f.factors[0].second == 1);
}

TEST_CASE("factorize round-trips on random inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Int n;
        std::uint64_t raw = rng() % (std::uint64_t(1) << 48);
        if (raw < 2) raw = 2;
        n = Int(std::to_string(raw));
        auto f = arith::factorize(n);
        Int prod = 1;
        for (const auto& [p, e] : f.factors) {
            CHECK(arith::is_prime(p));
            Int powed;
            mpz_pow_ui(powed.get_mpz_t(), p.get_mpz_t(), e);
            prod *= powed;
        }
        CHECK(prod == n);
        // ascending, distinct primes
        for (std::size_t k = 1; k < f.factors.size(); ++k)
            CHECK(f.factors[k - 1].first < f.factors[k].first);
    }
}

TEST_CASE("factorize respects the budget") {
    // RSA-240 leading digits: far beyond any budget
    Int hard("124620366781718784065835044608106590434820374651678805754818788883289666801188210855036039570272508747509864768438458621054865537970253930571891217684318286362846948405301614416430468066875699415246993185704183030512549594371372159029236099");
    CHECK_THROWS_AS(arith::factorize(hard, {std::chrono::milliseconds(50)}),
                    error::factorization_timeout);
    auto part = arith::factorize_partial(hard, {std::chrono::milliseconds(50)});
    CHECK_FALSE(part.complete);
    Int prod = part.cofactor;
    for (const auto& [p, e] : part.primes) {
        Int powed;
        mpz_pow_ui(powed.get_mpz_t(), p.get_mpz_t(), e);
        prod *= powed;
    }
    CHECK(prod == hard);
}

TEST_CASE("pow_mod") {
    CHECK(arith::pow_mod(2, 3, 7) == 1);
    CHECK(arith::pow_mod(3, 0, 11) == 1);
    CHECK(arith::pow_mod(2, 58, 59) == 1);
}

TEST_CASE("multiplicative_order") {
    CHECK(arith::multiplicative_order(1, 7) == 1);
    CHECK(arith::multiplicative_order(2, 7) == 3);
    // Brute-force scan: 3^65 = 1 mod 131 and no smaller exponent works.
    CHECK(arith::multiplicative_order(3, 131) == 65);
    CHECK_THROWS_AS(arith::multiplicative_order(6, 21), error::not_coprime);
}

TEST_CASE("multiplicative_order brute-force agreement") {
    for (unsigned long m = 3; m < 60; ++m)
        for (unsigned long a = 1; a < m; ++a) {
            Int g;
            Int ai(a), mi(m);
            mpz_gcd(g.get_mpz_t(), ai.get_mpz_t(), mi.get_mpz_t());
            if (g != 1) continue;
            unsigned long e = 1;
            unsigned long x = a % m;
            while (x != 1) {
                x = (x * a) % m;
                ++e;
            }
            CHECK(arith::multiplicative_order(ai, mi) == e);
        }
}

TEST_CASE("euler_phi") {
    CHECK(arith::euler_phi(arith::factorize(55)) == 40);
    CHECK(arith::euler_phi(arith::factorize(1)) == 1);
    CHECK(arith::euler_phi(arith::factorize(305)) == 240);
    // multiplicativity on coprime pairs
    for (unsigned long a = 2; a < 40; ++a)
        for (unsigned long b = 2; b < 40; ++b) {
            Int g, ai(a), bi(b);
            mpz_gcd(g.get_mpz_t(), ai.get_mpz_t(), bi.get_mpz_t());
            if (g != 1) continue;
            CHECK(arith::euler_phi(arith::factorize(ai * bi)) ==
                  arith::euler_phi(arith::factorize(ai)) *
                      arith::euler_phi(arith::factorize(bi)));
        }
}

TEST_CASE("geometric_sum_mod") {
    CHECK(arith::geometric_sum_mod(1, 58, 3) == 1);
    CHECK(arith::geometric_sum_mod(2, 3, 7) == 0);
    CHECK(arith::geometric_sum_mod(58, 2, 59) == 0);
}

TEST_CASE("geometric_sum_mod exhaustive against direct summation") {
    for (unsigned long m = 2; m < 50; ++m)
        for (unsigned long alpha = 0; alpha < m; ++alpha)
            for (unsigned long g = 1; g < 25; ++g) {
                unsigned long direct = 0, power = 1 % m;
                for (unsigned long i = 0; i < g; ++i) {
                    direct = (direct + power) % m;
                    power = (power * alpha) % m;
                }
                CHECK(arith::geometric_sum_mod(Int(alpha), Int(g), Int(m)) ==
                      direct);
            }
}

TEST_CASE("p_adic_valuation") {
    CHECK(arith::p_adic_valuation(40, 5) == 1);
    CHECK(arith::p_adic_valuation(7, 3) == 0);
    CHECK(arith::p_adic_valuation(240, 5) == 1);
    CHECK(arith::p_adic_valuation(Int("2429536481"), 7) == 0);
    CHECK(arith::p_adic_valuation(81, 3) == 4);
}
