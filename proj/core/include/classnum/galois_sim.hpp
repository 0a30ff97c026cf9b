#pragma once

#include <cstdint>
#include <vector>

#include "classnum/errors.hpp"

namespace classnum::galois_sim {

/// A cyclic-component action: the generator of the Galois group raises the
/// class of a generating ideal to the power alpha. Valid instances satisfy
/// sum_{i<g} alpha^i = 0 mod hi (the norm relation).
struct ActionInstance {
    std::uint64_t g;      // degree: generator has order g
    std::uint64_t hi;     // prime order of the cyclic subgroup
    std::uint64_t alpha;  // in [1, hi-1]
};

enum class ProofCase { DegreeCase, VandiverOddCase, VandiverEvenCase, MinusOneCase };

/// All alpha in [1, hi-1] whose geometric sum vanishes mod hi, found by
/// direct summation. Deliberately no closed forms: this is the brute-force
/// oracle the classifier is checked against.
std::vector<std::uint64_t> feasible_alphas(std::uint64_t g, std::uint64_t hi);

/// [alpha^0, ..., alpha^(g-1)] mod hi: the class of sigma^i(s) as a power
/// of the class of s.
std::vector<std::uint64_t> orbit_classes(const ActionInstance& inst);

/// Which branch of the case split the instance lands in. The four cases
/// partition the feasible set.
ProofCase case_of(const ActionInstance& inst);

/// Exponent of the norm to the quadratic subfield: sum_{i<g/2} alpha^(2i)
/// mod hi. Nonzero certifies that the norm ideal is not principal.
/// Throws degree_odd when g is odd.
std::uint64_t norm_to_quadratic(const ActionInstance& inst);

/// Norm-relation check used by the ops above to reject invalid instances.
bool is_feasible(const ActionInstance& inst);

}  // namespace classnum::galois_sim
