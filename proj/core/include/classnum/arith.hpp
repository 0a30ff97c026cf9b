#pragma once

#include <chrono>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "classnum/errors.hpp"

namespace classnum::arith {

using Int = mpz_class;

/// An integer together with its prime factorization, primes strictly
/// increasing. value == product of prime^exponent; 1 has an empty list.
struct Factorization {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;

    bool operator==(const Factorization&) const = default;
};

struct FactorBudget {
    std::chrono::milliseconds limit{2000};
};

/// Result of a budgeted factorization attempt. `primes` holds the part that
/// was split completely; `cofactor` > 1 is the unfactored remainder.
struct PartialFactorization {
    std::vector<std::pair<Int, unsigned>> primes;
    Int cofactor;  // 1 when complete
    bool complete;
};

/// Miller-Rabin. Deterministic for n < 2^64 (fixed 12-base witness set);
/// above that, 64 rounds with bases derived from the input, so the answer
/// is reproducible and the error probability is below 4^-64 = 2^-128.
bool is_prime(const Int& n);

/// Trial division to 10^6, then Brent's cycle-finding rho with a restart
/// schedule derived from n. Throws factorization_timeout when the budget
/// runs out; partial results are never returned from this entry point.
Factorization factorize(const Int& n, FactorBudget budget = {});

/// Same engine as factorize() but reports what it found instead of throwing.
PartialFactorization factorize_partial(const Int& n, FactorBudget budget = {});

/// base^exp mod modulus by square-and-multiply (exp >= 0, modulus >= 2).
Int pow_mod(const Int& base, const Int& exp, const Int& modulus);

/// Smallest e >= 1 with a^e = 1 mod m. Throws not_coprime if gcd(a,m) != 1.
Int multiplicative_order(const Int& a, const Int& m, FactorBudget budget = {});

/// phi from a factorization: product of (p-1) * p^(e-1).
Int euler_phi(const Factorization& f);

/// sum_{i=0}^{g-1} alpha^i mod m without materializing the sum. Closed form
/// via the modular inverse of alpha-1 when it exists, otherwise a binary
/// (sum, power) recursion; alpha = 1 mod m collapses to g mod m.
Int geometric_sum_mod(const Int& alpha, const Int& g, const Int& m);

/// Largest k with p^k | n (n >= 1, p prime).
unsigned long p_adic_valuation(const Int& n, const Int& p);

}  // namespace classnum::arith
