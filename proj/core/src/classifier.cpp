#include "classnum/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace classnum::classifier {

namespace {

unsigned two_adic_valuation(const Int& g) {
    if (g == 0) return 0;
    return static_cast<unsigned>(mpz_scan1(g.get_mpz_t(), 0));
}

// Effective structure after the nu_i = 1 upgrade: when hi divides h exactly
// once, the component has order hi and is cyclic.
ComponentStructure effective_structure(const ExtensionProfile& p, const Int& hi) {
    ComponentStructure st = ComponentStructure::Unknown;
    if (auto it = p.component_structure.find(hi); it != p.component_structure.end())
        st = it->second;
    if (st == ComponentStructure::Unknown) {
        for (const auto& [q, e] : p.class_number.factors)
            if (q == hi && e == 1) return ComponentStructure::Cyclic;
    }
    return st;
}

void check_profile(const ExtensionProfile& profile, const Int& hi) {
    const Int& g = profile.degree.value;
    if (two_adic_valuation(g) > 1)
        throw error::degree_violates_gamma(
            "classify: 4 | g violates the gamma <= 1 hypothesis (g = " + g.get_str() +
            ")");
    if (!mpz_divisible_p(profile.class_number.value.get_mpz_t(), hi.get_mpz_t()))
        throw error::prime_not_factor("classify: " + hi.get_str() +
                                      " does not divide h = " +
                                      profile.class_number.value.get_str());
    if (profile.quad_subfield && mpz_odd_p(g.get_mpz_t()))
        throw std::invalid_argument("profile: quad subfield given but g is odd");
}

void finalize(Verdict& v, ComponentStructure st) {
    v.contradiction = !v.has_admissible_case();
    v.inferred_noncyclic = v.contradiction && st == ComponentStructure::Unknown;
}

// Certified upper bound on h(L_d). Odd-degree cyclic fields are totally
// real (r2 = 0 exactly); for even d the signature is unknown, so take the
// maximizing r2 for the bound while requiring applicability at r2 = 0.
double intermediate_class_bound(const IntermediateField& f, bool& applicable) {
    unsigned r2 = (f.degree % 2 == 0) ? f.degree / 2 : 0;
    bounds::BoundReport up =
        bounds::class_number_upper_bound({f.degree, r2, f.abs_discriminant});
    bounds::BoundReport low =
        bounds::class_number_upper_bound({f.degree, 0, f.abs_discriminant});
    applicable = low.applicable;
    return up.class_number_bound;
}

}  // namespace

std::vector<Int> odd_prime_divisors(const arith::Factorization& f) {
    std::vector<Int> out;
    for (const auto& [p, e] : f.factors)
        if (p != 2) out.push_back(p);
    return out;
}

Verdict classify_prime(const ExtensionProfile& profile, const Int& hi) {
    check_profile(profile, hi);
    const Int& g = profile.degree.value;

    Verdict v;
    v.prime = hi;

    ComponentStructure st = effective_structure(profile, hi);
    if (st == ComponentStructure::NonCyclic) {
        v.applicable = false;
        return v;
    }

    // case 1
    v.divides_degree = mpz_divisible_p(g.get_mpz_t(), hi.get_mpz_t());

    // case 2a: odd prime divisors gj of g with hi = 1 mod gj
    for (const Int& gj : odd_prime_divisors(profile.degree))
        if ((hi - 1) % gj == 0) v.witnesses.insert(gj);

    // case 2b: only exists for even g
    if (mpz_even_p(g.get_mpz_t())) {
        if (profile.quad_subfield && profile.quad_subfield->class_number) {
            const Int& h2 = *profile.quad_subfield->class_number;
            v.quadratic = mpz_divisible_p(h2.get_mpz_t(), hi.get_mpz_t())
                              ? QuadStatus::Confirmed
                              : QuadStatus::Refuted;
        } else {
            v.quadratic = QuadStatus::Unverifiable;
        }
    }

    finalize(v, st);
    return v;
}

std::set<Int> infer_noncyclic(const ExtensionProfile& profile) {
    std::set<Int> out;
    for (const auto& [hi, e] : profile.class_number.factors) {
        if (effective_structure(profile, hi) != ComponentStructure::Unknown) continue;
        Verdict v = classify_prime(profile, hi);
        if (v.inferred_noncyclic) out.insert(hi);
    }
    return out;
}

Verdict apply_bound_refinement(const ExtensionProfile& profile, const Int& hi) {
    if (profile.intermediate_fields.empty())
        throw error::no_intermediate_field_data(
            "apply_bound_refinement: profile has no intermediate fields");
    const Int& g = profile.degree.value;

    Verdict base = classify_prime(profile, hi);
    if (!base.applicable) return base;

    const IntermediateField* best = nullptr;
    std::set<Int> best_witnesses;
    for (const IntermediateField& f : profile.intermediate_fields) {
        Int d(f.degree);
        if (d <= 2 || d >= g || !mpz_divisible_p(g.get_mpz_t(), d.get_mpz_t()))
            throw error::invalid_intermediate_field(
                "apply_bound_refinement: d must satisfy 2 < d < g, d | g");
        Int delta = g / d;
        Int gc;
        mpz_gcd(gc.get_mpz_t(), d.get_mpz_t(), delta.get_mpz_t());
        if (gc != 1)
            throw error::invalid_intermediate_field(
                "apply_bound_refinement: gcd(d, g/d) must be 1");

        bool applicable = false;
        double bound = intermediate_class_bound(f, applicable);
        if (!applicable) continue;
        if (mpz_cmp_d(hi.get_mpz_t(), bound) <= 0) continue;

        std::set<Int> w;
        for (const Int& gj : odd_prime_divisors(arith::factorize(delta)))
            if ((hi - 1) % gj == 0) w.insert(gj);
        if (!best || w.size() < best_witnesses.size() ||
            (w.size() == best_witnesses.size() && f.degree > best->degree)) {
            best = &f;
            best_witnesses = std::move(w);
        }
    }
    if (!best)
        throw error::bound_not_exceeded(
            "apply_bound_refinement: hi exceeds no certified intermediate bound");

    Verdict v = base;
    v.divides_degree = false;   // the proof rules case 1 out above the bound
    v.quadratic.reset();        // and case 2b likewise
    v.witnesses = best_witnesses;
    v.refinement = Refinement{best->degree, best_witnesses};
    finalize(v, effective_structure(profile, hi));
    return v;
}

Verdict apply_full_refinement(const ExtensionProfile& profile, const Int& hi) {
    const Int& g = profile.degree.value;
    Verdict base = classify_prime(profile, hi);
    if (!base.applicable) return base;

    // every d_j = g / gj^cj for the odd prime powers of g must be present;
    // d_j = 1 is the rationals, whose class number 1 is always exceeded
    std::vector<const IntermediateField*> fields;
    bool any_odd = false;
    for (const auto& [gj, cj] : profile.degree.factors) {
        if (gj == 2) continue;
        any_odd = true;
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), gj.get_mpz_t(), cj);
        Int dj = g / pe;
        if (dj == 1) continue;
        const IntermediateField* found = nullptr;
        for (const IntermediateField& f : profile.intermediate_fields)
            if (Int(f.degree) == dj) found = &f;
        if (!found)
            throw error::incomplete_intermediate_data(
                "apply_full_refinement: missing intermediate field of degree " +
                dj.get_str());
        fields.push_back(found);
    }
    if (!any_odd)
        throw error::incomplete_intermediate_data(
            "apply_full_refinement: g has no odd prime divisors");

    for (const IntermediateField* f : fields) {
        bool applicable = false;
        double bound = intermediate_class_bound(*f, applicable);
        if (!applicable || mpz_cmp_d(hi.get_mpz_t(), bound) <= 0)
            throw error::bound_not_exceeded(
                "apply_full_refinement: hi does not exceed the bound of L_" +
                std::to_string(f->degree));
    }

    // enforced conclusion: hi = 1 mod every odd prime of g
    Verdict v = base;
    v.divides_degree = false;
    v.quadratic.reset();
    v.witnesses.clear();
    bool all = true;
    for (const Int& gj : odd_prime_divisors(profile.degree)) {
        if ((hi - 1) % gj == 0)
            v.witnesses.insert(gj);
        else
            all = false;
    }
    if (!all) v.witnesses.clear();
    v.mod_g_advisory = (hi - 1) % g == 0;
    finalize(v, effective_structure(profile, hi));
    return v;
}

Verdict classify_odd_degree(const ExtensionProfile& profile, const Int& hi) {
    if (mpz_even_p(profile.degree.value.get_mpz_t()))
        throw error::degree_not_odd("classify_odd_degree: g must be odd");
    return classify_prime(profile, hi);
}

}  // namespace classnum::classifier
