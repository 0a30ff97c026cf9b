#include "classnum/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "classnum/errors.hpp"

namespace classnum::corpus {

namespace {

using json = nlohmann::json;

struct KindName {
    EntryKind kind;
    const char* name;
};

constexpr KindName kKinds[] = {
    {EntryKind::CyclotomicMinus, "cyclotomic_minus"},
    {EntryKind::RealCyclotomicConjectured, "real_cyclotomic_conjectured"},
    {EntryKind::CubicTotallyReal, "cubic_totally_real"},
    {EntryKind::RealCyclicConductor, "real_cyclic_conductor"},
    {EntryKind::QuinticNote, "quintic_note"},
    {EntryKind::DecimicImaginary, "decimic_imaginary"},
    {EntryKind::CycloConstruction, "cyclo_construction"},
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Int parse_int(const std::string& s, const std::string& what) {
    if (s.empty() || (!std::isdigit(static_cast<unsigned char>(s[0])) && s[0] != '-'))
        throw error::expression_error("bad integer in " + what + ": '" + s + "'");
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw error::expression_error("bad integer in " + what + ": '" + s + "'");
    }
}

// TERM := INT [ '^' INT ]; accumulates into value.
void apply_term(const std::string& term, Int& value, const std::string& ctx,
                Int* base_out = nullptr, unsigned long* exp_out = nullptr) {
    auto parts = split(term, '^');
    if (parts.size() > 2)
        throw error::expression_error("bad term '" + term + "' in " + ctx);
    Int base = parse_int(parts[0], ctx);
    unsigned long exp = 1;
    if (parts.size() == 2) {
        Int e = parse_int(parts[1], ctx);
        if (e <= 0 || !e.fits_ulong_p())
            throw error::expression_error("bad exponent in '" + term + "'");
        exp = e.get_ui();
    }
    Int powed;
    mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), exp);
    value *= powed;
    if (base_out) *base_out = base;
    if (exp_out) *exp_out = exp;
}

std::map<Int, std::set<std::string>> parse_expect(const std::string& s) {
    std::map<Int, std::set<std::string>> out;
    for (const std::string& part : split(s, ';')) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw error::schema_error("bad expect clause '" + part + "'");
        Int prime = parse_int(part.substr(0, colon), "expect");
        std::set<std::string> labels;
        for (const std::string& lab : split(part.substr(colon + 1), '+'))
            labels.insert(lab);
        if (!out.emplace(prime, std::move(labels)).second)
            throw error::schema_error("duplicate expect prime in '" + s + "'");
    }
    return out;
}

CorpusEntry parse_entry(const std::string& line, arith::FactorBudget budget) {
    CorpusEntry e;
    e.kind = EntryKind::CyclotomicMinus;
    e.conductor = 0;
    e.degree = 0;
    e.cc_p = e.cc_a = e.cc_b = 0;

    std::string body = line.substr(5);  // after "entry"
    // prov="..." may contain spaces: peel it off first.
    auto prov_pos = body.find(" prov=\"");
    if (prov_pos != std::string::npos) {
        auto close = body.rfind('"');
        if (close <= prov_pos + 7)
            throw error::schema_error("unterminated prov string: " + line);
        e.provenance = body.substr(prov_pos + 7, close - prov_pos - 7);
        body = body.substr(0, prov_pos);
    }

    std::istringstream iss(body);
    std::string tok;
    while (iss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw error::schema_error("malformed field '" + tok + "' in: " + line);
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key == "id") {
            e.id = val;
        } else if (key == "kind") {
            e.kind = kind_from_string(val);
        } else if (key == "n") {
            e.conductor = parse_int(val, "n");
        } else if (key == "g") {
            e.degree = parse_int(val, "g").get_ui();
        } else if (key == "factors") {
            for (const std::string& f : split(val, ','))
                e.class_factors.push_back(parse_factor_expr(f));
        } else if (key == "structure") {
            for (const std::string& part : split(val, ',')) {
                auto colon = part.find(':');
                if (colon == std::string::npos)
                    throw error::schema_error("bad structure clause '" + part + "'");
                Int p = parse_int(part.substr(0, colon), "structure");
                std::string st = part.substr(colon + 1);
                if (st == "noncyclic")
                    e.structure[p] = classifier::ComponentStructure::NonCyclic;
                else if (st == "cyclic")
                    e.structure[p] = classifier::ComponentStructure::Cyclic;
                else
                    throw error::schema_error("bad structure value '" + st + "'");
            }
        } else if (key == "quad") {
            auto colon = val.find(':');
            if (colon == std::string::npos)
                throw error::schema_error("bad quad clause '" + val + "'");
            classifier::QuadSubfield q;
            q.discriminant = parse_int(val.substr(0, colon), "quad");
            std::string h = val.substr(colon + 1);
            if (h != "?") q.class_number = parse_int(h, "quad");
            e.quad = q;
        } else if (key == "flags") {
            for (const std::string& f : split(val, ',')) {
                e.flags.push_back(f);
                if (f.rfind("p=", 0) == 0) e.cc_p = parse_int(f.substr(2), "flags");
                if (f.rfind("a=", 0) == 0) e.cc_a = parse_int(f.substr(2), "flags");
                if (f.rfind("b=", 0) == 0) e.cc_b = parse_int(f.substr(2), "flags");
            }
        } else if (key == "expect") {
            e.expected = parse_expect(val);
        } else {
            throw error::schema_error("unknown field '" + key + "' in: " + line);
        }
    }

    if (e.id.empty()) throw error::schema_error("entry without id: " + line);
    if (e.degree == 0) throw error::schema_error("entry without degree: " + e.id);
    if (e.class_factors.empty())
        throw error::schema_error("entry without factors: " + e.id);

    // Transcription guard: everything asserted prime must actually be prime.
    for (const FactorExpr& f : e.class_factors) {
        if (f.asserted_prime && !arith::is_prime(f.value))
            throw error::primality_mismatch("entry " + e.id + ": factor '" + f.text +
                                            "' = " + f.value.get_str() +
                                            " is not prime");
        if (!f.asserted_prime) (void)arith::factorize(f.value, budget);
    }
    return e;
}

bool has_flag(const CorpusEntry& e, const char* flag) {
    return std::find(e.flags.begin(), e.flags.end(), flag) != e.flags.end();
}

std::string join_labels(const std::set<std::string>& labels) {
    std::string out;
    for (const std::string& l : labels) {
        if (!out.empty()) out += '+';
        out += l;
    }
    return out.empty() ? "none" : out;
}

void add_result(ReplayReport& rep, const CorpusEntry& e, const Int& prime,
                std::set<std::string> actual, std::string note = {}) {
    ReplayResult r;
    r.entry_id = e.id;
    r.prime = prime;
    if (auto it = e.expected.find(prime); it != e.expected.end())
        r.expected = it->second;
    r.actual = std::move(actual);
    r.agree = r.expected == r.actual;
    r.note = std::move(note);
    if (!r.agree && r.note.empty())
        r.note = "expected " + join_labels(r.expected) + ", got " +
                 join_labels(r.actual);
    if (!r.agree) ++rep.disagreements;
    rep.results.push_back(std::move(r));
}

void replay_cyclo(ReplayReport& rep, const CorpusEntry& e) {
    Int h = 1;
    for (const FactorExpr& f : e.class_factors) {
        Int powed;
        mpz_pow_ui(powed.get_mpz_t(), f.value.get_mpz_t(), f.exponent);
        h *= powed;
    }
    std::set<std::string> actual;
    std::string note;
    try {
        cyclotomic::CycloInstance inst =
            cyclotomic::build_instance(e.cc_p, e.cc_a, e.cc_b);
        if (inst.n != e.conductor) {
            actual = {"contradiction"};
            note = "constructed conductor " + inst.n.get_str() +
                   " != tabulated " + e.conductor.get_str();
        } else if (cyclotomic::verify_prediction(inst, h)) {
            actual = {"prediction"};
        } else {
            actual = {"contradiction"};
            note = "p does not divide the tabulated class number";
        }
    } catch (const error::hypothesis_violation& ex) {
        actual = {"contradiction"};
        note = ex.what();
    }
    add_result(rep, e, e.cc_p, std::move(actual), std::move(note));
}

void replay_classification(ReplayReport& rep, const CorpusEntry& e) {
    classifier::ExtensionProfile profile = profile_of(e);

    std::set<Int> suspects;
    for (const FactorExpr& f : e.class_factors)
        if (f.suspect)
            for (const auto& [p, k] : arith::factorize(f.value).factors)
                suspects.insert(p);

    std::set<Int> seen;
    for (const auto& [p, k] : profile.class_number.factors) {
        seen.insert(p);
        if (suspects.count(p)) {
            add_result(rep, e, p, {"suspect"},
                       "consistency only: from a factor suspected of misprint");
            continue;
        }
        std::set<std::string> actual;
        try {
            actual = labels_of(classifier::classify_prime(profile, p));
        } catch (const error::degree_violates_gamma&) {
            actual = {"gamma_violation"};
        }
        add_result(rep, e, p, std::move(actual));
    }
    for (const auto& [p, labels] : e.expected)
        if (!seen.count(p))
            add_result(rep, e, p, {}, "expected prime absent from factorization");
}

}  // namespace

const char* to_string(EntryKind kind) {
    for (const KindName& k : kKinds)
        if (k.kind == kind) return k.name;
    return "unknown";
}

EntryKind kind_from_string(const std::string& s) {
    for (const KindName& k : kKinds)
        if (s == k.name) return k.kind;
    throw error::schema_error("unknown entry kind '" + s + "'");
}

FactorExpr parse_factor_expr(const std::string& token) {
    FactorExpr out;
    out.text = token;
    std::string s = token;
    if (s.empty()) throw error::expression_error("empty factor expression");

    if (s.back() == '?' || s.back() == '!') {
        out.asserted_prime = false;
        out.suspect = (s.back() == '!');
        s.pop_back();
    }

    bool plus1 = false;
    if (!s.empty() && s.front() == '(') {
        // (PRODUCT+1)^k
        auto close = s.find(')');
        if (close == std::string::npos || close + 1 >= s.size() || s[close + 1] != '^')
            throw error::expression_error("bad parenthesized factor '" + token + "'");
        Int e = parse_int(s.substr(close + 2), token);
        if (e <= 0 || !e.fits_ulong_p())
            throw error::expression_error("bad outer exponent in '" + token + "'");
        out.exponent = static_cast<unsigned>(e.get_ui());
        s = s.substr(1, close - 1);
        if (s.size() < 2 || s.substr(s.size() - 2) != "+1")
            throw error::expression_error("parenthesized factor must end in +1: '" +
                                           token + "'");
        plus1 = true;
        s = s.substr(0, s.size() - 2);
    } else if (s.size() >= 2 && s.substr(s.size() - 2) == "+1") {
        plus1 = true;
        s = s.substr(0, s.size() - 2);
    }

    auto terms = split(s, '.');
    Int value = 1;
    Int last_base;
    unsigned long last_exp = 1;
    for (const std::string& t : terms) apply_term(t, value, token, &last_base, &last_exp);

    if (!plus1 && terms.size() == 1 && last_exp > 1) {
        // A bare prime power like 3^4: base with multiplicity.
        out.value = last_base;
        out.exponent = static_cast<unsigned>(last_exp);
    } else {
        if (plus1) value += 1;
        out.value = value;
    }
    if (out.value < 2)
        throw error::expression_error("factor value below 2 in '" + token + "'");
    return out;
}

std::vector<CorpusEntry> load_corpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    bool saw_schema = false;
    std::set<std::string> ids;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("schema ", 0) == 0) {
            if (line != "schema 1")
                throw error::schema_error("unsupported schema version: " + line);
            saw_schema = true;
            continue;
        }
        if (line.rfind("entry ", 0) != 0)
            throw error::schema_error("unrecognized line: " + line);
        if (!saw_schema)
            throw error::schema_error("entry before schema declaration");
        CorpusEntry e = parse_entry(line, {});
        if (!ids.insert(e.id).second)
            throw error::schema_error("duplicate entry id " + e.id);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CorpusEntry> embedded_corpus() {
    std::istringstream in(embedded_corpus_text());
    return load_corpus(in);
}

classifier::ExtensionProfile profile_of(const CorpusEntry& entry) {
    classifier::ExtensionProfile p;
    p.degree = arith::factorize(Int(entry.degree));

    std::map<Int, unsigned> merged;
    Int h = 1;
    for (const FactorExpr& f : entry.class_factors) {
        Int powed;
        mpz_pow_ui(powed.get_mpz_t(), f.value.get_mpz_t(), f.exponent);
        h *= powed;
        if (f.asserted_prime) {
            merged[f.value] += f.exponent;
        } else {
            for (const auto& [q, k] : arith::factorize(f.value).factors)
                merged[q] += k * f.exponent;
        }
    }
    p.class_number.value = h;
    for (const auto& [q, k] : merged) p.class_number.factors.emplace_back(q, k);

    p.component_structure = entry.structure;
    p.quad_subfield = entry.quad;
    return p;
}

std::set<std::string> labels_of(const classifier::Verdict& v) {
    if (!v.applicable) return {"inapplicable"};
    if (v.inferred_noncyclic) return {"inferred_noncyclic"};
    if (v.contradiction) return {"contradiction"};
    std::set<std::string> out;
    if (v.divides_degree) out.insert("case1");
    if (!v.witnesses.empty()) out.insert("case2a");
    if (v.quadratic && *v.quadratic != classifier::QuadStatus::Refuted)
        out.insert("case2b");
    return out;
}

ReplayReport replay(const std::vector<CorpusEntry>& entries) {
    ReplayReport rep;
    rep.entries = entries.size();
    for (const CorpusEntry& e : entries) {
        if (e.kind == EntryKind::CycloConstruction)
            replay_cyclo(rep, e);
        else
            replay_classification(rep, e);
    }
    std::sort(rep.results.begin(), rep.results.end(),
              [](const ReplayResult& a, const ReplayResult& b) {
                  if (a.entry_id != b.entry_id) return a.entry_id < b.entry_id;
                  return a.prime < b.prime;
              });
    return rep;
}

std::string emit_report_text(const ReplayReport& report) {
    std::ostringstream out;
    out << "corpus replay: " << report.entries << " entries, "
        << report.results.size() << " checks, " << report.disagreements
        << " disagreements\n";
    for (const ReplayResult& r : report.results) {
        out << (r.agree ? "  ok   " : "  FAIL ") << r.entry_id << " p="
            << r.prime.get_str() << " expected=" << join_labels(r.expected)
            << " actual=" << join_labels(r.actual);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
    }
    return out.str();
}

std::string emit_report_machine(const ReplayReport& report) {
    json j;
    j["entries"] = report.entries;
    j["disagreements"] = report.disagreements;
    j["results"] = json::array();
    for (const ReplayResult& r : report.results) {
        json item;
        item["entry"] = r.entry_id;
        item["prime"] = r.prime.get_str();
        item["expected"] = std::vector<std::string>(r.expected.begin(), r.expected.end());
        item["actual"] = std::vector<std::string>(r.actual.begin(), r.actual.end());
        item["agree"] = r.agree;
        if (!r.note.empty()) item["note"] = r.note;
        j["results"].push_back(std::move(item));
    }
    return j.dump(2) + "\n";
}

ReplayReport parse_report_machine(const std::string& json_text) {
    json j = json::parse(json_text);
    ReplayReport rep;
    rep.entries = j.at("entries").get<std::size_t>();
    rep.disagreements = j.at("disagreements").get<std::size_t>();
    for (const json& item : j.at("results")) {
        ReplayResult r;
        r.entry_id = item.at("entry").get<std::string>();
        r.prime = Int(item.at("prime").get<std::string>());
        for (const json& s : item.at("expected")) r.expected.insert(s.get<std::string>());
        for (const json& s : item.at("actual")) r.actual.insert(s.get<std::string>());
        r.agree = item.at("agree").get<bool>();
        if (item.contains("note")) r.note = item.at("note").get<std::string>();
        rep.results.push_back(std::move(r));
    }
    return rep;
}

}  // namespace classnum::corpus
