#include "classnum/cyclotomic.hpp"

namespace classnum::cyclotomic {

std::vector<CongruenceCheck> check_lemma_congruence(
    const arith::Factorization& t1_factors, const Int& p) {
    std::vector<CongruenceCheck> out;
    for (const auto& [q, e] : t1_factors.factors) {
        Int r = q % p;
        out.push_back({q, r, r == 1});
    }
    return out;
}

CycloInstance build_instance(const Int& p, const Int& a, const Int& b,
                             arith::FactorBudget budget) {
    if (p <= 3 || !arith::is_prime(p))
        throw error::hypothesis_violation("build_instance: p must be a prime > 3");
    if (a == 0 || b == 0)
        throw error::hypothesis_violation("build_instance: a, b must be nonzero");
    if (a + b == 0)
        throw error::hypothesis_violation("build_instance: a + b must be nonzero");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1)
        throw error::hypothesis_violation("build_instance: a, b must be coprime");
    if (mpz_divisible_p(Int(a * b * (a + b)).get_mpz_t(), p.get_mpz_t()))
        throw error::hypothesis_violation(
            "build_instance: ab(a+b) = 0 mod p is excluded");

    CycloInstance inst;
    inst.p = p;
    inst.a = a;
    inst.b = b;

    unsigned long pe = mpz_get_ui(p.get_mpz_t());
    Int ap, bp;
    mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), pe);
    mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), pe);
    Int num = ap + bp;
    Int den = a + b;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("build_instance: (a+b) does not divide a^p+b^p");
    inst.t1 = num / den;
    if (inst.t1 <= 1)
        throw error::hypothesis_violation("build_instance: t1 must exceed 1");
    inst.n = p * inst.t1;
    inst.n_odd = mpz_odd_p(inst.n.get_mpz_t());

    arith::PartialFactorization part = arith::factorize_partial(inst.t1, budget);
    inst.t1_fully_factored = part.complete;
    inst.t1_factors = arith::Factorization{inst.t1, part.primes};

    inst.congruence_checks = check_lemma_congruence(inst.t1_factors, p);
    for (const CongruenceCheck& c : inst.congruence_checks)
        if (!c.pass)
            throw error::lemma_violation("build_instance: prime " + c.q.get_str() +
                                         " of t1 is not 1 mod " + p.get_str());
    inst.principal_pth_power = inst.t1_fully_factored;

    if (inst.t1_fully_factored) {
        Int phi = (p - 1) * arith::euler_phi(inst.t1_factors);
        inst.phi_n = phi;
        inst.p_valuation_of_phi = arith::p_adic_valuation(phi, p);
        if (*inst.p_valuation_of_phi < 1)
            throw error::lemma_violation(
                "build_instance: p-valuation of phi(n) must be >= 1");
    }
    return inst;
}

RamificationProfile ramification_profile(const Int& p, const Int& q) {
    if (!arith::is_prime(p) || !arith::is_prime(q))
        throw std::invalid_argument("ramification_profile: p, q must be prime");
    if (q % p != 1)
        throw error::congruence_not_satisfied("ramification_profile: q != 1 mod p");

    RamificationProfile out;
    out.in_q_xi_q = {1, 1, q - 1, q - 1};
    out.in_q_xi_p = {p - 1, 1, 1, p - 1};
    out.in_q_xi_pq = {p - 1, 1, q - 1, (p - 1) * (q - 1)};
    for (const RamificationRow* row :
         {&out.in_q_xi_q, &out.in_q_xi_p, &out.in_q_xi_pq})
        if (row->count * row->f * row->e != row->degree)
            throw std::logic_error("ramification_profile: degree identity failed");
    return out;
}

bool verify_prediction(const CycloInstance& inst, const Int& hn_or_hn_minus) {
    if (hn_or_hn_minus < 1)
        throw std::invalid_argument("verify_prediction: class number must be >= 1");
    return mpz_divisible_p(hn_or_hn_minus.get_mpz_t(), inst.p.get_mpz_t());
}

}  // namespace classnum::cyclotomic
