#pragma once

#include <optional>
#include <vector>

#include "classnum/arith.hpp"

namespace classnum::cyclotomic {

using arith::Int;

struct CongruenceCheck {
    Int q;
    Int q_mod_p;
    bool pass;  // q = 1 mod p
};

/// The (p, a, b) construction: t1 = (a^p + b^p)/(a + b), n = p*t1, with the
/// hypothesis checks and the divisibility prediction p | h_n.
struct CycloInstance {
    Int p;
    Int a;
    Int b;
    Int t1;
    Int n;
    arith::Factorization t1_factors;   // the factored part (see complete flag)
    bool t1_fully_factored = true;
    std::optional<Int> phi_n;          // unset when t1 resisted factorization
    std::optional<unsigned long> p_valuation_of_phi;
    std::vector<CongruenceCheck> congruence_checks;
    bool n_odd = true;                 // checked, not assumed
    bool principal_pth_power = true;   // all ramification preconditions held
};

/// Builds and fully verifies an instance. Throws hypothesis_violation when a
/// hypothesis on (p, a, b) fails, lemma_violation if a factor of t1 is not
/// 1 mod p (that must never fire; it would falsify the lemma).
CycloInstance build_instance(const Int& p, const Int& a, const Int& b,
                             arith::FactorBudget budget = {});

/// Per-prime verdicts q = 1 mod p for the factors of t1.
std::vector<CongruenceCheck> check_lemma_congruence(const arith::Factorization& t1_factors,
                                                    const Int& p);

struct RamificationRow {
    Int count;   // number of primes above q
    Int f;       // inertial degree
    Int e;       // ramification index
    Int degree;  // field degree; count * f * e == degree always
};

/// Decomposition bookkeeping of q in Q(xi_q), Q(xi_p), Q(xi_pq).
/// Requires q = 1 mod p (throws congruence_not_satisfied).
struct RamificationProfile {
    RamificationRow in_q_xi_q;
    RamificationRow in_q_xi_p;
    RamificationRow in_q_xi_pq;
};

RamificationProfile ramification_profile(const Int& p, const Int& q);

/// True iff the supplied class number (or relative class number) is
/// divisible by p, i.e. the prediction holds against table data.
bool verify_prediction(const CycloInstance& inst, const Int& hn_or_hn_minus);

}  // namespace classnum::cyclotomic
