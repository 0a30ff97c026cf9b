#include "classnum/galois_sim.hpp"

namespace classnum::galois_sim {

namespace {

void check_instance(const ActionInstance& inst) {
    if (inst.g < 1) throw std::invalid_argument("ActionInstance: g must be >= 1");
    if (inst.hi < 2) throw std::invalid_argument("ActionInstance: hi must be prime");
    if (inst.alpha < 1 || inst.alpha >= inst.hi)
        throw std::invalid_argument("ActionInstance: alpha must be in [1, hi-1]");
    if (!is_feasible(inst))
        throw std::invalid_argument("ActionInstance: norm relation fails");
}

}  // namespace

bool is_feasible(const ActionInstance& inst) {
    std::uint64_t s = 0, pw = 1;
    for (std::uint64_t i = 0; i < inst.g; ++i) {
        s = (s + pw) % inst.hi;
        pw = (pw * inst.alpha) % inst.hi;
    }
    return s == 0;
}

std::vector<std::uint64_t> feasible_alphas(std::uint64_t g, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t alpha = 1; alpha < hi; ++alpha)
        if (is_feasible({g, hi, alpha})) out.push_back(alpha);
    return out;
}

std::vector<std::uint64_t> orbit_classes(const ActionInstance& inst) {
    check_instance(inst);
    std::vector<std::uint64_t> out(inst.g);
    std::uint64_t pw = 1;
    for (std::uint64_t i = 0; i < inst.g; ++i) {
        out[i] = pw;
        pw = (pw * inst.alpha) % inst.hi;
    }
    return out;
}

ProofCase case_of(const ActionInstance& inst) {
    check_instance(inst);
    if (inst.alpha == 1) return ProofCase::DegreeCase;
    if (inst.g % 2 == 1) return ProofCase::VandiverOddCase;
    if (inst.alpha == inst.hi - 1) return ProofCase::MinusOneCase;
    return ProofCase::VandiverEvenCase;
}

std::uint64_t norm_to_quadratic(const ActionInstance& inst) {
    if (inst.g % 2 != 0)
        throw error::degree_odd("norm_to_quadratic: g must be even");
    check_instance(inst);
    std::uint64_t alpha2 = (inst.alpha * inst.alpha) % inst.hi;
    std::uint64_t s = 0, pw = 1;
    for (std::uint64_t i = 0; i < inst.g / 2; ++i) {
        s = (s + pw) % inst.hi;
        pw = (pw * alpha2) % inst.hi;
    }
    return s;
}

}  // namespace classnum::galois_sim
