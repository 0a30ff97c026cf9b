#include "classnum/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace classnum::arith {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t low64(const Int& n) {
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    if (mpz_size(n.get_mpz_t()) > 1 && sizeof(mp_limb_t) == 4)
        lo |= static_cast<std::uint64_t>(mpz_getlimbn(n.get_mpz_t(), 1)) << 32;
    return lo;
}

// One Miller-Rabin round; n odd, n > 3, 2 <= a <= n-2.
bool miller_rabin_round(const Int& n, const Int& a, const Int& d, unsigned long r) {
    Int x = pow_mod(a, d, n);
    Int n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n1) return true;
    }
    return false;
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of n or 0 on
// a failed cycle for this parameter choice. n odd composite, not a prime power
// handled by caller recursion anyway.
Int brent_rho(const Int& n, unsigned long c, unsigned long x0,
              Clock::time_point deadline) {
    Int x(x0 % 7 + 2), y, d(1), q(1), ys, addend(c);
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (d == 1) {
        y = x;
        for (unsigned long i = 0; i < r; ++i) x = (x * x + addend) % n;
        unsigned long k = 0;
        while (k < r && d == 1) {
            if (Clock::now() > deadline)
                throw error::factorization_timeout("factorization budget exhausted");
            ys = x;
            unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                x = (x * x + addend) % n;
                Int diff = y - x;
                q = (q * abs(diff)) % n;
            }
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
        }
        r *= 2;
    }
    if (d == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + addend) % n;
            Int diff = abs(y - ys);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (d == 1);
    }
    if (d == n) return 0;
    return d;
}

void split(const Int& n, std::map<Int, unsigned>& acc, Clock::time_point deadline) {
    if (n == 1) return;
    if (is_prime(n)) {
        acc[n] += 1;
        return;
    }
    // deterministic restart schedule seeded from n
    std::uint64_t seed = low64(n);
    for (unsigned long attempt = 0;; ++attempt) {
        if (Clock::now() > deadline)
            throw error::factorization_timeout("factorization budget exhausted");
        std::uint64_t h = splitmix64(seed + attempt);
        Int d = brent_rho(n, 1 + h % 97, static_cast<unsigned long>(h >> 32), deadline);
        if (d != 0) {
            split(d, acc, deadline);
            split(n / d, acc, deadline);
            return;
        }
    }
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned long tiny[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                         23, 29, 31, 37, 41, 43, 47};
    for (unsigned long p : tiny) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // deterministic witness set for n < 2^64 (Sinclair/Jaeschke bases)
        static const unsigned long bases[] = {2,  3,  5,  7,  11, 13,
                                              17, 19, 23, 29, 31, 37};
        for (unsigned long b : bases) {
            Int a(b);
            if (a >= n - 1) continue;
            if (!miller_rabin_round(n, a, d, r)) return false;
        }
        return true;
    }
    // 64 rounds, bases derived deterministically from n
    std::uint64_t seed = low64(n);
    for (unsigned round = 0; round < 64; ++round) {
        std::uint64_t h = splitmix64(seed ^ (0x5851f42d4c957f2dULL * (round + 1)));
        Int a;
        mpz_set_ui(a.get_mpz_t(), static_cast<unsigned long>(h >> 32));
        mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), 32);
        mpz_add_ui(a.get_mpz_t(), a.get_mpz_t(),
                   static_cast<unsigned long>(h & 0xffffffffULL));
        a = 2 + a % (n - 4);
        if (!miller_rabin_round(n, a, d, r)) return false;
    }
    return true;
}

PartialFactorization factorize_partial(const Int& n, FactorBudget budget) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    auto deadline = Clock::now() + budget.limit;
    std::map<Int, unsigned> acc;
    Int rest = n;
    for (std::uint32_t p : small_primes()) {
        if (rest == 1) break;
        if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            acc[Int(p)] += 1;
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    PartialFactorization out;
    out.cofactor = 1;
    out.complete = true;
    if (rest > 1) {
        try {
            split(rest, acc, deadline);
        } catch (const error::factorization_timeout&) {
            out.complete = false;
        }
    }
    if (!out.complete) {
        // keep the primes already isolated; everything else is the cofactor
        Int done = 1;
        for (const auto& [p, e] : acc) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            done *= pe;
        }
        out.cofactor = n / done;
    }
    out.primes.assign(acc.begin(), acc.end());
    return out;
}

Factorization factorize(const Int& n, FactorBudget budget) {
    PartialFactorization part = factorize_partial(n, budget);
    if (!part.complete)
        throw error::factorization_timeout("factorize: budget exhausted for n = " +
                                           n.get_str());
    return Factorization{n, std::move(part.primes)};
}

Int pow_mod(const Int& base, const Int& exp, const Int& modulus) {
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    if (modulus < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int multiplicative_order(const Int& a, const Int& m, FactorBudget budget) {
    if (m < 2) throw std::invalid_argument("multiplicative_order: m must be >= 2");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1)
        throw error::not_coprime("multiplicative_order: gcd(a, m) != 1");
    Int phi = euler_phi(factorize(m, budget));
    Int e = phi;
    Factorization pf = factorize(phi, budget);
    for (const auto& [p, k] : pf.factors) {
        for (unsigned i = 0; i < k; ++i) {
            Int cand = e / p;
            if (!mpz_divisible_p(e.get_mpz_t(), p.get_mpz_t())) break;
            if (pow_mod(a, cand, m) == 1)
                e = cand;
            else
                break;
        }
    }
    return e;
}

Int euler_phi(const Factorization& f) {
    Int phi = 1;
    for (const auto& [p, e] : f.factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
        phi *= (p - 1) * pe;
    }
    return phi;
}

namespace {
// returns (sum_{i<g} a^i mod m, a^g mod m)
std::pair<Int, Int> geo_pair(const Int& a, const Int& g, const Int& m) {
    if (g == 0) return {Int(0), Int(1)};
    if (g == 1) return {Int(1) % m, a % m};
    Int half = g / 2;
    auto [s, p] = geo_pair(a, half, m);
    Int s2 = (s + s * p) % m;  // S(2k) = S(k) * (1 + a^k)
    Int p2 = (p * p) % m;
    if (mpz_odd_p(g.get_mpz_t())) {
        s2 = (s2 + p2) % m;
        p2 = (p2 * a) % m;
    }
    return {s2, p2};
}
}  // namespace

Int geometric_sum_mod(const Int& alpha, const Int& g, const Int& m) {
    if (g < 1) throw std::invalid_argument("geometric_sum_mod: g must be >= 1");
    if (m < 2) throw std::invalid_argument("geometric_sum_mod: m must be >= 2");
    Int a = alpha % m;
    if (a < 0) a += m;
    if (a == 1) return g % m;
    Int am1 = a - 1;
    Int gcd, inv;
    mpz_gcd(gcd.get_mpz_t(), am1.get_mpz_t(), m.get_mpz_t());
    if (gcd == 1) {
        mpz_invert(inv.get_mpz_t(), am1.get_mpz_t(), m.get_mpz_t());
        Int num = pow_mod(a, g, m) - 1;
        Int r = (num * inv) % m;
        if (r < 0) r += m;
        return r;
    }
    return geo_pair(a, g, m).first;
}

unsigned long p_adic_valuation(const Int& n, const Int& p) {
    if (n < 1) throw std::invalid_argument("p_adic_valuation: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p must be prime");
    Int rest;
    return static_cast<unsigned long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace classnum::arith
