#include <doctest.h>

#include "classnum/classifier.hpp"

using namespace classnum;
using arith::Int;
using classifier::ComponentStructure;
using classifier::ExtensionProfile;
using classifier::QuadStatus;
using classifier::Verdict;

namespace {

ExtensionProfile make_profile(unsigned long g, const Int& h) {
    ExtensionProfile p;
    p.degree = arith::factorize(Int(g));
    p.class_number = arith::factorize(h);
    return p;
}

}  // namespace

TEST_CASE("n = 59 row: h = 3 * 59 * 233, g = 58") {
    ExtensionProfile p = make_profile(58, Int(3) * 59 * 233);

    SUBCASE("hi = 59: witness {29}, no degree case, quadratic unverifiable") {
        Verdict v = classifier::classify_prime(p, 59);
        CHECK(v.applicable);
        CHECK_FALSE(v.divides_degree);
        CHECK(v.witnesses == std::set<Int>{29});
        REQUIRE(v.quadratic.has_value());
        CHECK(*v.quadratic == QuadStatus::Unverifiable);
        CHECK_FALSE(v.contradiction);
    }

    SUBCASE("hi = 3 with h(L2) = 3: quadratic confirmed, nothing else") {
        p.quad_subfield = classifier::QuadSubfield{Int(-59), Int(3)};
        Verdict v = classifier::classify_prime(p, 3);
        CHECK_FALSE(v.divides_degree);
        CHECK(v.witnesses.empty());
        REQUIRE(v.quadratic.has_value());
        CHECK(*v.quadratic == QuadStatus::Confirmed);
        CHECK_FALSE(v.contradiction);
    }

    SUBCASE("hi = 233 with h(L2) = 3: quadratic refuted, witness {29} remains") {
        p.quad_subfield = classifier::QuadSubfield{Int(-59), Int(3)};
        Verdict v = classifier::classify_prime(p, 233);
        CHECK(v.witnesses == std::set<Int>{29});
        CHECK(*v.quadratic == QuadStatus::Refuted);
        CHECK_FALSE(v.contradiction);
    }
}

TEST_CASE("n = 71 row: hi = 7 divides g = 70") {
    ExtensionProfile p = make_profile(70, Int(7) * 7 * 79241);
    Verdict v = classifier::classify_prime(p, 7);
    CHECK(v.divides_degree);
    CHECK(v.witnesses.empty());  // 7 != 1 mod 5, 7 != 1 mod 7
    CHECK(*v.quadratic == QuadStatus::Unverifiable);
}

TEST_CASE("known non-cyclic component is inapplicable") {
    ExtensionProfile p = make_profile(3, Int(4));
    p.component_structure[2] = ComponentStructure::NonCyclic;
    Verdict v = classifier::classify_prime(p, 2);
    CHECK_FALSE(v.applicable);
    CHECK_FALSE(v.has_admissible_case());
    CHECK_FALSE(v.inferred_noncyclic);
}

TEST_CASE("gamma constraint: 4 | g is rejected") {
    ExtensionProfile p = make_profile(12, Int(5));
    CHECK_THROWS_AS(classifier::classify_prime(p, 5), error::degree_violates_gamma);
}

TEST_CASE("hi must divide h") {
    ExtensionProfile p = make_profile(6, Int(5));
    CHECK_THROWS_AS(classifier::classify_prime(p, 7), error::prime_not_factor);
}

TEST_CASE("infer_noncyclic") {
    SUBCASE("p = 263 profile: g = 2*131, 3^4 | h-, h(L2) = 13 forces G(3) non-cyclic") {
        ExtensionProfile p = make_profile(262, Int(81));
        p.quad_subfield = classifier::QuadSubfield{Int(-263), Int(13)};
        CHECK(classifier::infer_noncyclic(p) == std::set<Int>{3});
        Verdict v = classifier::classify_prime(p, 3);
        CHECK(v.contradiction);
        CHECK(v.inferred_noncyclic);
    }

    SUBCASE("n = 59 profile: all primes admissible, nothing inferred") {
        ExtensionProfile p = make_profile(58, Int(3) * 59 * 233);
        p.quad_subfield = classifier::QuadSubfield{Int(-59), Int(3)};
        CHECK(classifier::infer_noncyclic(p).empty());
    }

    SUBCASE("trivial class group") {
        ExtensionProfile p = make_profile(58, Int(1));
        CHECK(classifier::infer_noncyclic(p).empty());
    }

    SUBCASE("declared-cyclic components never flip to inferred") {
        ExtensionProfile p = make_profile(262, Int(81));
        p.quad_subfield = classifier::QuadSubfield{Int(-263), Int(13)};
        p.component_structure[3] = ComponentStructure::Cyclic;
        CHECK(classifier::infer_noncyclic(p).empty());
        Verdict v = classifier::classify_prime(p, 3);
        CHECK(v.contradiction);
        CHECK_FALSE(v.inferred_noncyclic);
    }
}

TEST_CASE("exponent-1 components auto-upgrade to cyclic") {
    // hi || h: the component has order hi, hence is cyclic; a contradiction
    // is then a hard contradiction, not a non-cyclicity inference.
    ExtensionProfile p = make_profile(5, Int(2));
    Verdict v = classifier::classify_odd_degree(p, 2);
    CHECK(v.contradiction);
    CHECK_FALSE(v.inferred_noncyclic);

    // with exponent >= 2 the same data infers non-cyclicity
    ExtensionProfile p4 = make_profile(5, Int(16));
    Verdict v4 = classifier::classify_odd_degree(p4, 2);
    CHECK(v4.contradiction);
    CHECK(v4.inferred_noncyclic);
    CHECK(classifier::infer_noncyclic(p4) == std::set<Int>{2});
}

TEST_CASE("odd-degree specialization") {
    SUBCASE("g = 3, h = 7: witness {3}") {
        ExtensionProfile p = make_profile(3, Int(7));
        Verdict v = classifier::classify_odd_degree(p, 7);
        CHECK(v.witnesses == std::set<Int>{3});
        CHECK_FALSE(v.divides_degree);
        CHECK_FALSE(v.quadratic.has_value());
    }
    SUBCASE("g = 3, h = 3: degree case, hi = g") {
        ExtensionProfile p = make_profile(3, Int(3));
        Verdict v = classifier::classify_odd_degree(p, 3);
        CHECK(v.divides_degree);
        CHECK(v.witnesses.empty());
    }
    SUBCASE("even degree is rejected") {
        ExtensionProfile p = make_profile(6, Int(3));
        CHECK_THROWS_AS(classifier::classify_odd_degree(p, 3), error::degree_not_odd);
    }
}

TEST_CASE("bound refinement (single subfield)") {
    // g = 15 = 3*5, cubic subfield with discriminant 10^6:
    // B = (3!/27)*1000 ~ 222 > 17, H ~ 2.8e5 << 10^12.
    ExtensionProfile p = make_profile(15, Int(1));
    p.intermediate_fields.push_back({3, Int(1000000)});

    SUBCASE("hi = 1 mod 5 only: witnesses restricted to {5}") {
        Int hi("1000000000061");
        p.class_number = arith::factorize(hi);
        Verdict v = classifier::apply_bound_refinement(p, hi);
        REQUIRE(v.refinement.has_value());
        CHECK(v.refinement->d == 3);
        CHECK(v.witnesses == std::set<Int>{5});
        CHECK_FALSE(v.divides_degree);
        CHECK_FALSE(v.quadratic.has_value());
        CHECK_FALSE(v.contradiction);
    }

    SUBCASE("hi = 1 mod 3 only: contradiction (3 does not divide g/d = 5)") {
        Int hi("1000000000039");
        p.class_number = arith::factorize(hi);
        Verdict v = classifier::apply_bound_refinement(p, hi);
        CHECK(v.witnesses.empty());
        CHECK(v.contradiction);
    }

    SUBCASE("hi below the bound: BoundNotExceeded") {
        p.class_number = arith::factorize(Int(7));
        CHECK_THROWS_AS(classifier::apply_bound_refinement(p, 7),
                        error::bound_not_exceeded);
    }

    SUBCASE("no intermediate data") {
        p.intermediate_fields.clear();
        p.class_number = arith::factorize(Int(7));
        CHECK_THROWS_AS(classifier::apply_bound_refinement(p, 7),
                        error::no_intermediate_field_data);
    }

    SUBCASE("invalid d rejected") {
        p.intermediate_fields = {{5, Int(1000000)}, {2, Int(40)}};
        Int hi("1000000000061");
        p.class_number = arith::factorize(hi);
        CHECK_THROWS_AS(classifier::apply_bound_refinement(p, hi),
                        error::invalid_intermediate_field);
    }
}

TEST_CASE("full refinement") {
    SUBCASE("g = 15, hi = 1 mod 15: both witnesses, advisory holds") {
        ExtensionProfile p = make_profile(15, Int(1));
        p.intermediate_fields.push_back({3, Int(1000000)});
        p.intermediate_fields.push_back({5, Int(100000000)});
        Int hi("1000000000471");
        p.class_number = arith::factorize(hi);
        Verdict v = classifier::apply_full_refinement(p, hi);
        CHECK(v.witnesses == std::set<Int>{3, 5});
        REQUIRE(v.mod_g_advisory.has_value());
        CHECK(*v.mod_g_advisory);
        CHECK_FALSE(v.contradiction);
    }

    SUBCASE("g = 9, hi = 13: radical conclusion holds, mod-g advisory fails") {
        // d_j = 9/9 = 1 is the rationals: trivially exceeded, no field data
        // needed. 13 = 1 mod 3 but 13 = 4 mod 9.
        ExtensionProfile p = make_profile(9, Int(13));
        Verdict v = classifier::apply_full_refinement(p, 13);
        CHECK(v.witnesses == std::set<Int>{3});
        REQUIRE(v.mod_g_advisory.has_value());
        CHECK_FALSE(*v.mod_g_advisory);
        CHECK_FALSE(v.contradiction);
    }

    SUBCASE("bounds not exceeded") {
        ExtensionProfile p = make_profile(15, Int(7));
        p.intermediate_fields.push_back({3, Int(1000000)});
        p.intermediate_fields.push_back({5, Int(100000000)});
        CHECK_THROWS_AS(classifier::apply_full_refinement(p, 7),
                        error::bound_not_exceeded);
    }

    SUBCASE("missing subfield data") {
        ExtensionProfile p = make_profile(15, Int(1));
        p.intermediate_fields.push_back({3, Int(1000000)});
        Int hi("1000000000471");
        p.class_number = arith::factorize(hi);
        CHECK_THROWS_AS(classifier::apply_full_refinement(p, hi),
                        error::incomplete_intermediate_data);
    }
}

TEST_CASE("refinement monotonicity: refined witnesses are a subset of base witnesses") {
    ExtensionProfile p = make_profile(15, Int(1));
    p.intermediate_fields.push_back({3, Int(1000000)});
    Int hi("1000000000471");  // 1 mod 3 and mod 5
    p.class_number = arith::factorize(hi);
    Verdict base = classifier::classify_prime(p, hi);
    Verdict refined = classifier::apply_bound_refinement(p, hi);
    for (const Int& w : refined.witnesses) CHECK(base.witnesses.count(w) == 1);
    CHECK(refined.witnesses == std::set<Int>{5});
}
