#include "classnum/bounds.hpp"

#include <mpfr.h>

namespace classnum::bounds {

namespace {

constexpr mpfr_prec_t kPrec = 96;

void check_shape(const FieldShape& s) {
    if (s.degree == 0) throw std::invalid_argument("FieldShape: degree must be >= 1");
    if (2u * s.r2 > s.degree)
        throw std::invalid_argument("FieldShape: n - 2*r2 must be >= 0");
    if (s.abs_discriminant < 1)
        throw std::invalid_argument("FieldShape: discriminant must be >= 1");
}

// B = (4/pi)^r2 * n!/n^n * sqrt(D), every operation rounded toward `dir`
// (MPFR_RNDU gives a certified upper bound, MPFR_RNDD a lower one).
double minkowski_directed(const FieldShape& s, mpfr_rnd_t dir) {
    mpfr_rnd_t anti = (dir == MPFR_RNDU) ? MPFR_RNDD : MPFR_RNDU;
    mpfr_t pi, t, fac, npow, sq, b;
    mpfr_inits2(kPrec, pi, t, fac, npow, sq, b, nullptr);

    // (4/pi)^r2: round pi the other way so the quotient rounds toward dir
    mpfr_const_pi(pi, anti);
    mpfr_ui_div(t, 4, pi, dir);
    mpfr_pow_ui(t, t, s.r2, dir);

    mpfr_fac_ui(fac, s.degree, dir);
    mpfr_set_ui(npow, s.degree, anti);
    mpfr_pow_ui(npow, npow, s.degree, anti);
    mpfr_div(fac, fac, npow, dir);

    mpfr_set_z(sq, s.abs_discriminant.get_mpz_t(), dir);
    mpfr_sqrt(sq, sq, dir);

    mpfr_mul(b, t, fac, dir);
    mpfr_mul(b, b, sq, dir);

    double out = mpfr_get_d(b, dir);
    mpfr_clears(pi, t, fac, npow, sq, b, nullptr);
    return out;
}

}  // namespace

double minkowski_bound(const FieldShape& shape) {
    check_shape(shape);
    return minkowski_directed(shape, MPFR_RNDU);
}

double minkowski_bound_lower(const FieldShape& shape) {
    check_shape(shape);
    return minkowski_directed(shape, MPFR_RNDD);
}

BoundReport class_number_upper_bound(const FieldShape& shape) {
    check_shape(shape);
    BoundReport rep{};
    rep.minkowski_bound = minkowski_bound(shape);
    rep.applicable = minkowski_bound_lower(shape) > 17.0;

    mpfr_t b, lg, h;
    mpfr_inits2(kPrec, b, lg, h, nullptr);
    mpfr_set_d(b, rep.minkowski_bound, MPFR_RNDU);
    mpfr_log(lg, b, MPFR_RNDU);  // ln is increasing, so upper in -> upper out
    mpfr_mul_ui(lg, lg, 2, MPFR_RNDU);
    if (mpfr_sgn(lg) < 0) mpfr_set_ui(lg, 0, MPFR_RNDU);  // B < 1: clamp
    mpfr_pow_ui(lg, lg, shape.degree, MPFR_RNDU);
    mpfr_mul(h, b, lg, MPFR_RNDU);
    rep.class_number_bound = mpfr_get_d(h, MPFR_RNDU);
    mpfr_clears(b, lg, h, nullptr);
    return rep;
}

QuadBound quadratic_class_bound(const Int& d2, bool imaginary) {
    if (imaginary && d2 < 3)
        throw std::invalid_argument("quadratic_class_bound: imaginary needs D2 >= 3");
    if (!imaginary && d2 < 5)
        throw std::invalid_argument("quadratic_class_bound: real needs D2 >= 5");

    mpfr_t sq, lg, v;
    mpfr_inits2(kPrec, sq, lg, v, nullptr);
    mpfr_set_z(sq, d2.get_mpz_t(), MPFR_RNDU);
    mpfr_log(lg, sq, MPFR_RNDU);
    mpfr_sqrt(sq, sq, MPFR_RNDU);

    QuadBound out{};
    if (imaginary) {
        mpfr_sqr(lg, lg, MPFR_RNDU);
        mpfr_mul(v, sq, lg, MPFR_RNDU);
        out.value = mpfr_get_d(v, MPFR_RNDU);
        out.precondition_met = d2 > 3000;
    } else {
        out.value = mpfr_get_d(sq, MPFR_RNDU);
        out.precondition_met = true;
    }
    mpfr_clears(sq, lg, v, nullptr);
    return out;
}

Int quadratic_subfield_discriminant(const Int& p) {
    if (p == 2 || !arith::is_prime(p))
        throw error::not_odd_prime("quadratic_subfield_discriminant: p must be an odd prime");
    return (p % 4 == 1) ? p : -p;
}

}  // namespace classnum::bounds
