#pragma once

#include "classnum/arith.hpp"

namespace classnum::bounds {

using arith::Int;

/// Degree, complex-embedding pair count, absolute discriminant.
/// r1 = degree - 2*r2 must be >= 0.
struct FieldShape {
    unsigned degree;
    unsigned r2;
    Int abs_discriminant;
};

struct BoundReport {
    double minkowski_bound;     // certified upper bound
    double class_number_bound;  // certified upper bound, B*(2 ln B)^n
    bool applicable;            // B > 17 certified from below
};

struct QuadBound {
    double value;            // certified upper bound
    bool precondition_met;   // imaginary bound is only stated for D2 > 3000
};

/// Upper bound on (4/pi)^r2 * n!/n^n * sqrt(D), relative slack <= 1e-9.
double minkowski_bound(const FieldShape& shape);

/// Lower bound on the same quantity (used for conservative applicability).
double minkowski_bound_lower(const FieldShape& shape);

/// h < B * (2 log B)^n when B > 17. Natural logarithm; see log_base_note().
BoundReport class_number_upper_bound(const FieldShape& shape);

/// Real: h(L2) < sqrt(D2). Imaginary: h(L2) < sqrt(D2) * (ln D2)^2, stated
/// only for D2 > 3000; below that the same formula is returned flagged.
QuadBound quadratic_class_bound(const Int& d2, bool imaginary);

/// Discriminant of the quadratic subfield of the p-th cyclotomic field:
/// +p for p = 1 mod 4, -p for p = 3 mod 4. Throws not_odd_prime.
Int quadratic_subfield_discriminant(const Int& p);

/// The one place the "Log" reading is pinned down: natural logarithm.
inline constexpr const char* log_base_note() { return "natural"; }

}  // namespace classnum::bounds
