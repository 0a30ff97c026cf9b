// classnum: verifier CLI for arithmetic constraints on class-number factors
// of cyclic extensions of Q.
//
// Exit codes: 0 success/agreement, 1 contradiction or corpus disagreement,
// 2 usage/input error, 3 resource error (factorization budget exhausted).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classnum/arith.hpp"
#include "classnum/bounds.hpp"
#include "classnum/classifier.hpp"
#include "classnum/corpus.hpp"
#include "classnum/cyclotomic.hpp"
#include "classnum/errors.hpp"
#include "classnum/galois_sim.hpp"

namespace {

using classnum::arith::Int;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kContradiction = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

classnum::arith::FactorBudget budget_from_env() {
    classnum::arith::FactorBudget b;
    if (const char* ms = std::getenv("CLASSNUM_FACTOR_BUDGET_MS")) {
        char* end = nullptr;
        long v = std::strtol(ms, &end, 10);
        if (end && *end == '\0' && v > 0) b.limit = std::chrono::milliseconds(v);
    }
    return b;
}

Int parse_big(const std::string& s, const std::string& what) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(what, "'" + s + "' is not an integer");
    }
}

const char* quad_status_name(classnum::classifier::QuadStatus s) {
    switch (s) {
        case classnum::classifier::QuadStatus::Confirmed: return "confirmed";
        case classnum::classifier::QuadStatus::Unverifiable: return "unverifiable";
        case classnum::classifier::QuadStatus::Refuted: return "refuted";
    }
    return "?";
}

json verdict_json(const classnum::classifier::Verdict& v) {
    json j;
    j["prime"] = v.prime.get_str();
    j["applicable"] = v.applicable;
    j["labels"] = classnum::corpus::labels_of(v);
    j["divides_degree"] = v.divides_degree;
    j["witnesses"] = json::array();
    for (const Int& w : v.witnesses) j["witnesses"].push_back(w.get_str());
    if (v.quadratic) j["quadratic"] = quad_status_name(*v.quadratic);
    j["contradiction"] = v.contradiction;
    j["inferred_noncyclic"] = v.inferred_noncyclic;
    if (v.refinement) {
        json r;
        r["d"] = v.refinement->d;
        r["restricted_witnesses"] = json::array();
        for (const Int& w : v.refinement->restricted_witnesses)
            r["restricted_witnesses"].push_back(w.get_str());
        j["refinement"] = std::move(r);
    }
    if (v.mod_g_advisory) j["mod_g_advisory"] = *v.mod_g_advisory;
    return j;
}

void print_verdict(const classnum::classifier::Verdict& v) {
    std::cout << "prime " << v.prime.get_str() << ": ";
    if (!v.applicable) {
        std::cout << "inapplicable (component known non-cyclic)\n";
        return;
    }
    auto labels = classnum::corpus::labels_of(v);
    std::string joined;
    for (const std::string& l : labels) {
        if (!joined.empty()) joined += "+";
        joined += l;
    }
    std::cout << joined;
    if (!v.witnesses.empty()) {
        std::cout << "  witnesses:";
        for (const Int& w : v.witnesses) std::cout << ' ' << w.get_str();
    }
    if (v.quadratic) std::cout << "  quadratic=" << quad_status_name(*v.quadratic);
    if (v.refinement) {
        std::cout << "  refined@d=" << v.refinement->d << " witnesses:";
        for (const Int& w : v.refinement->restricted_witnesses)
            std::cout << ' ' << w.get_str();
    }
    if (v.mod_g_advisory)
        std::cout << "  mod-g-advisory=" << (*v.mod_g_advisory ? "holds" : "fails");
    std::cout << '\n';
}

struct ClassifyOpts {
    std::string degree;
    std::string class_factors;
    std::string cyclic;
    std::string noncyclic;
    std::string quad_disc;
    std::string quad_h;
    std::vector<std::string> subfields;
    bool refine = false;
    bool refine_full = false;
    bool machine = false;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int run_classify(const ClassifyOpts& o) {
    auto budget = budget_from_env();
    classnum::classifier::ExtensionProfile profile;
    profile.degree = classnum::arith::factorize(parse_big(o.degree, "--degree"), budget);

    std::map<Int, unsigned> merged;
    Int h = 1;
    for (const std::string& tok : split_commas(o.class_factors)) {
        auto f = classnum::corpus::parse_factor_expr(tok);
        Int powed;
        mpz_pow_ui(powed.get_mpz_t(), f.value.get_mpz_t(), f.exponent);
        h *= powed;
        if (f.asserted_prime) {
            merged[f.value] += f.exponent;
        } else {
            for (const auto& [q, k] : classnum::arith::factorize(f.value, budget).factors)
                merged[q] += k * f.exponent;
        }
    }
    profile.class_number.value = h;
    for (const auto& [q, k] : merged) profile.class_number.factors.emplace_back(q, k);

    for (const std::string& p : split_commas(o.cyclic))
        profile.component_structure[parse_big(p, "--cyclic")] =
            classnum::classifier::ComponentStructure::Cyclic;
    for (const std::string& p : split_commas(o.noncyclic))
        profile.component_structure[parse_big(p, "--noncyclic")] =
            classnum::classifier::ComponentStructure::NonCyclic;

    if (!o.quad_disc.empty()) {
        classnum::classifier::QuadSubfield q;
        q.discriminant = parse_big(o.quad_disc, "--quad-disc");
        if (!o.quad_h.empty()) q.class_number = parse_big(o.quad_h, "--quad-h");
        profile.quad_subfield = q;
    }
    for (const std::string& sf : o.subfields) {
        auto colon = sf.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--subfield", "expected d:DISC, got '" + sf + "'");
        classnum::classifier::IntermediateField f;
        f.degree = static_cast<unsigned>(
            parse_big(sf.substr(0, colon), "--subfield").get_ui());
        f.abs_discriminant = parse_big(sf.substr(colon + 1), "--subfield");
        profile.intermediate_fields.push_back(f);
    }

    json out = json::array();
    bool any_contradiction = false;
    for (const auto& [p, k] : profile.class_number.factors) {
        classnum::classifier::Verdict v;
        if (o.refine_full)
            v = classnum::classifier::apply_full_refinement(profile, p);
        else if (o.refine)
            v = classnum::classifier::apply_bound_refinement(profile, p);
        else
            v = classnum::classifier::classify_prime(profile, p);
        if (v.contradiction) any_contradiction = true;
        if (o.machine)
            out.push_back(verdict_json(v));
        else
            print_verdict(v);
    }
    if (o.machine) std::cout << out.dump(2) << '\n';
    return any_contradiction ? kContradiction : kOk;
}

int run_feasible(std::uint64_t g, std::uint64_t hi, bool machine) {
    auto alphas = classnum::galois_sim::feasible_alphas(g, hi);
    if (machine) {
        json j;
        j["g"] = g;
        j["hi"] = hi;
        j["feasible"] = json::array();
        for (std::uint64_t a : alphas) {
            json item;
            item["alpha"] = a;
            switch (classnum::galois_sim::case_of({g, hi, a})) {
                case classnum::galois_sim::ProofCase::DegreeCase:
                    item["case"] = "degree"; break;
                case classnum::galois_sim::ProofCase::VandiverOddCase:
                    item["case"] = "vandiver_odd"; break;
                case classnum::galois_sim::ProofCase::VandiverEvenCase:
                    item["case"] = "vandiver_even"; break;
                case classnum::galois_sim::ProofCase::MinusOneCase:
                    item["case"] = "minus_one"; break;
            }
            j["feasible"].push_back(std::move(item));
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "g=" << g << " hi=" << hi << " feasible alphas:";
        for (std::uint64_t a : alphas) std::cout << ' ' << a;
        std::cout << '\n';
    }
    return alphas.empty() ? kContradiction : kOk;
}

int run_cyclo(const std::string& p, const std::string& a, const std::string& b,
              bool machine) {
    auto inst = classnum::cyclotomic::build_instance(
        parse_big(p, "--p"), parse_big(a, "--a"), parse_big(b, "--b"),
        budget_from_env());
    if (machine) {
        json j;
        j["p"] = inst.p.get_str();
        j["a"] = inst.a.get_str();
        j["b"] = inst.b.get_str();
        j["t1"] = inst.t1.get_str();
        j["n"] = inst.n.get_str();
        j["t1_fully_factored"] = inst.t1_fully_factored;
        j["t1_factors"] = json::array();
        for (const auto& [q, k] : inst.t1_factors.factors) {
            json f;
            f["prime"] = q.get_str();
            f["exponent"] = k;
            j["t1_factors"].push_back(std::move(f));
        }
        if (inst.phi_n) j["phi_n"] = inst.phi_n->get_str();
        if (inst.p_valuation_of_phi) j["p_valuation_of_phi"] = *inst.p_valuation_of_phi;
        j["congruence_checks"] = json::array();
        for (const auto& c : inst.congruence_checks) {
            json item;
            item["q"] = c.q.get_str();
            item["q_mod_p"] = c.q_mod_p.get_str();
            item["pass"] = c.pass;
            j["congruence_checks"].push_back(std::move(item));
        }
        j["prediction"] = "p divides h(" + inst.n.get_str() + ")";
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "t1 = (" << inst.a.get_str() << "^" << inst.p.get_str() << " + "
                  << inst.b.get_str() << "^" << inst.p.get_str() << ")/("
                  << inst.a.get_str() << " + " << inst.b.get_str()
                  << ") = " << inst.t1.get_str() << '\n';
        std::cout << "n = p*t1 = " << inst.n.get_str() << '\n';
        std::cout << "t1 factors:";
        for (const auto& [q, k] : inst.t1_factors.factors) {
            std::cout << ' ' << q.get_str();
            if (k > 1) std::cout << '^' << k;
        }
        if (!inst.t1_fully_factored) std::cout << " (partial)";
        std::cout << '\n';
        for (const auto& c : inst.congruence_checks)
            std::cout << "  " << c.q.get_str() << " mod " << inst.p.get_str() << " = "
                      << c.q_mod_p.get_str() << (c.pass ? "  ok" : "  FAIL") << '\n';
        if (inst.phi_n) std::cout << "phi(n) = " << inst.phi_n->get_str() << '\n';
        std::cout << "prediction: " << inst.p.get_str() << " | h("
                  << inst.n.get_str() << ")\n";
    }
    return kOk;
}

int run_verify_corpus(const std::string& path, bool machine) {
    std::vector<classnum::corpus::CorpusEntry> entries;
    if (path.empty()) {
        entries = classnum::corpus::embedded_corpus();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open corpus file: " << path << '\n';
            return kUsage;
        }
        entries = classnum::corpus::load_corpus(in);
    }
    auto report = classnum::corpus::replay(entries);
    std::cout << (machine ? classnum::corpus::emit_report_machine(report)
                          : classnum::corpus::emit_report_text(report));
    return report.disagreements == 0 ? kOk : kContradiction;
}

int run_bounds(unsigned degree, unsigned r2, const std::string& disc, bool machine) {
    classnum::bounds::FieldShape shape{degree, r2, parse_big(disc, "--disc")};
    auto rep = classnum::bounds::class_number_upper_bound(shape);
    if (machine) {
        json j;
        j["degree"] = degree;
        j["r2"] = r2;
        j["abs_discriminant"] = shape.abs_discriminant.get_str();
        j["minkowski_bound"] = rep.minkowski_bound;
        j["class_number_bound"] = rep.class_number_bound;
        j["applicable"] = rep.applicable;
        j["log_base"] = classnum::bounds::log_base_note();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "minkowski bound  <= " << rep.minkowski_bound << '\n'
                  << "class number     <  " << rep.class_number_bound
                  << (rep.applicable ? "" : "  (not certified: bound <= 17)") << '\n';
    }
    return kOk;
}

int run_factor(const std::string& n_str, bool machine) {
    Int n = parse_big(n_str, "N");
    auto f = classnum::arith::factorize(n, budget_from_env());
    if (machine) {
        json j;
        j["n"] = n.get_str();
        j["factors"] = json::array();
        for (const auto& [p, k] : f.factors) {
            json item;
            item["prime"] = p.get_str();
            item["exponent"] = k;
            j["factors"].push_back(std::move(item));
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << n.get_str() << " =";
        bool first = true;
        for (const auto& [p, k] : f.factors) {
            std::cout << (first ? " " : " * ") << p.get_str();
            if (k > 1) std::cout << '^' << k;
            first = false;
        }
        if (f.factors.empty()) std::cout << " 1";
        std::cout << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verifier for arithmetic constraints on class-number factors of "
                 "cyclic extensions of Q"};
    app.require_subcommand(1);

    ClassifyOpts co;
    auto* classify = app.add_subcommand(
        "classify", "Admissible-case verdict for each prime factor of h");
    classify->add_option("--degree", co.degree, "Extension degree g")->required();
    classify->add_option("--class-factors", co.class_factors,
                         "Comma-separated factor expressions of h")->required();
    classify->add_option("--cyclic", co.cyclic, "Primes with known cyclic component");
    classify->add_option("--noncyclic", co.noncyclic,
                         "Primes with known non-cyclic component");
    classify->add_option("--quad-disc", co.quad_disc,
                         "Discriminant of the quadratic subfield");
    classify->add_option("--quad-h", co.quad_h, "Class number of the quadratic subfield");
    classify->add_option("--subfield", co.subfields,
                         "Intermediate field as d:ABS_DISC (repeatable)");
    classify->add_flag("--refine", co.refine, "Apply the single-subfield bound refinement");
    classify->add_flag("--refine-full", co.refine_full,
                       "Apply the all-subfields refinement");
    classify->add_flag("--machine", co.machine, "JSON output");

    std::uint64_t fg = 0, fhi = 0;
    bool fmachine = false;
    auto* feasible = app.add_subcommand(
        "feasible", "Brute-force feasible generator exponents for (g, hi)");
    feasible->add_option("--g", fg, "Degree g")->required();
    feasible->add_option("--hi", fhi, "Prime hi")->required();
    feasible->add_flag("--machine", fmachine, "JSON output");

    std::string cp, ca, cb;
    bool cmachine = false;
    auto* cyclo = app.add_subcommand(
        "cyclo", "Cyclotomic divisibility construction from (p, a, b)");
    cyclo->add_option("--p", cp, "Odd prime p")->required();
    cyclo->add_option("--a", ca, "Integer a")->required();
    cyclo->add_option("--b", cb, "Integer b")->required();
    cyclo->add_flag("--machine", cmachine, "JSON output");

    std::string corpus_path;
    bool vmachine = false;
    auto* verify = app.add_subcommand(
        "verify-corpus", "Replay the verification corpus (embedded when PATH omitted)");
    verify->add_option("path", corpus_path, "Corpus file");
    verify->add_flag("--machine", vmachine, "JSON output");

    unsigned bdeg = 0, br2 = 0;
    std::string bdisc;
    bool bmachine = false;
    auto* bnd = app.add_subcommand("bounds", "Certified class-number bounds");
    bnd->add_option("--degree", bdeg, "Field degree")->required();
    bnd->add_option("--r2", br2, "Complex-embedding pairs")->required();
    bnd->add_option("--disc", bdisc, "Absolute discriminant")->required();
    bnd->add_flag("--machine", bmachine, "JSON output");

    std::string fn;
    bool famachine = false;
    auto* factor = app.add_subcommand("factor", "Factor an integer");
    factor->add_option("n", fn, "Integer to factor")->required();
    factor->add_flag("--machine", famachine, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (classify->parsed()) return run_classify(co);
        if (feasible->parsed()) return run_feasible(fg, fhi, fmachine);
        if (cyclo->parsed()) return run_cyclo(cp, ca, cb, cmachine);
        if (verify->parsed()) return run_verify_corpus(corpus_path, vmachine);
        if (bnd->parsed()) return run_bounds(bdeg, br2, bdisc, bmachine);
        if (factor->parsed()) return run_factor(fn, famachine);
    } catch (const classnum::error::factorization_timeout& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kResource;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
