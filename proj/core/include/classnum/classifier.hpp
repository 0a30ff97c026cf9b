#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "classnum/arith.hpp"
#include "classnum/bounds.hpp"

namespace classnum::classifier {

using arith::Int;

enum class ComponentStructure { Cyclic, NonCyclic, Unknown };
enum class QuadStatus { Confirmed, Unverifiable, Refuted };

struct QuadSubfield {
    Int discriminant;               // signed fundamental discriminant of L2
    std::optional<Int> class_number;  // h(L2) when known
};

struct IntermediateField {
    unsigned degree;  // d with d | g, 2 < d < g, gcd(d, g/d) = 1
    Int abs_discriminant;
};

/// A cyclic extension of Q described by the data the theorems consume.
struct ExtensionProfile {
    arith::Factorization degree;        // g
    arith::Factorization class_number;  // h
    std::map<Int, ComponentStructure> component_structure;
    std::optional<QuadSubfield> quad_subfield;  // only meaningful for even g
    std::vector<IntermediateField> intermediate_fields;
};

struct Refinement {
    unsigned d;
    std::set<Int> restricted_witnesses;
};

/// The admissible theorem cases for one prime factor of h.
struct Verdict {
    Int prime;
    bool applicable = true;  // false: component known non-cyclic, hypothesis fails
    bool divides_degree = false;           // case 1: g = 0 mod hi
    std::set<Int> witnesses;               // case 2a: odd primes gj | g, hi = 1 mod gj
    std::optional<QuadStatus> quadratic;   // case 2b, present iff g is even
    bool contradiction = false;            // no case stands
    bool inferred_noncyclic = false;       // contradiction with Unknown structure
    std::optional<Refinement> refinement;
    std::optional<bool> mod_g_advisory;    // full refinement: the stronger mod-g claim

    bool has_admissible_case() const {
        return divides_degree || !witnesses.empty() ||
               (quadratic && *quadratic != QuadStatus::Refuted);
    }
};

/// The base case split for one prime hi | h. Requires the 2-adic
/// valuation of g to be at most 1 and hi | h; Unknown components are
/// classified as if cyclic, and a contradiction then flips to an inference
/// of non-cyclicity (the a-contrario reading the tables themselves use).
Verdict classify_prime(const ExtensionProfile& profile, const Int& hi);

/// Every prime of h with Unknown component whose verdict is a contradiction.
std::set<Int> infer_noncyclic(const ExtensionProfile& profile);

/// Bound refinement: when hi exceeds the certified class-number bound of an
/// intermediate field L_d, the witness set shrinks to odd primes of g/d and
/// cases 1 and 2b drop. Throws bound_not_exceeded if no field qualifies.
Verdict apply_bound_refinement(const ExtensionProfile& profile, const Int& hi);

/// Full refinement: when hi exceeds the bounds of every L_{g/gj^cj}, hi = 1 mod
/// every odd prime of g. The enforced conclusion is mod rad_odd(g); the
/// stronger mod-g claim is reported as an advisory flag only.
Verdict apply_full_refinement(const ExtensionProfile& profile, const Int& hi);

/// Odd-degree specialization: the quadratic case is structurally
/// absent. For prime g this reduces to hi = g or hi = 1 mod g.
Verdict classify_odd_degree(const ExtensionProfile& profile, const Int& hi);

/// Odd prime divisors of a factored integer.
std::vector<Int> odd_prime_divisors(const arith::Factorization& f);

}  // namespace classnum::classifier
