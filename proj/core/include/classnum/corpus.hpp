#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "classnum/classifier.hpp"
#include "classnum/cyclotomic.hpp"

namespace classnum::corpus {

using arith::Int;

enum class EntryKind {
    CyclotomicMinus,
    RealCyclotomicConjectured,
    CubicTotallyReal,
    RealCyclicConductor,
    QuinticNote,
    DecimicImaginary,
    CycloConstruction,
};

const char* to_string(EntryKind kind);
EntryKind kind_from_string(const std::string& s);

/// One transcribed class-number factor: kept symbolic so transcription
/// errors surface at load, not as silent bad data.
struct FactorExpr {
    std::string text;      // e.g. "2^3.29+1" or "(2.5+1)^2" or "7^2"
    Int value;             // evaluated base (before outer exponent)
    unsigned exponent = 1; // outer exponent
    bool asserted_prime = true;  // '?'/'!' suffix: evaluated value may be composite
    bool suspect = false;        // '!' suffix: suspected misprint, consistency only
};

struct CorpusEntry {
    std::string id;
    EntryKind kind;
    Int conductor;          // 0 when the source table gives none (quintic aggregate)
    unsigned long degree;   // g
    std::vector<FactorExpr> class_factors;
    std::map<Int, classifier::ComponentStructure> structure;
    std::optional<classifier::QuadSubfield> quad;
    std::vector<std::string> flags;
    std::map<Int, std::set<std::string>> expected;  // prime -> labels
    std::string provenance;

    // cyclo_construction parameters (taken from p=/a=/b= flags)
    Int cc_p, cc_a, cc_b;
};

/// Evaluates a factor-expression token ("INT", "PRODUCT+1", "(PRODUCT+1)^k",
/// with optional trailing '?' or '!'). Throws expression_error on bad syntax.
FactorExpr parse_factor_expr(const std::string& token);

/// Parses the line-delimited corpus document. Validates the schema version,
/// evaluates every factor expression, and primality-checks each one that is
/// asserted prime (throws primality_mismatch on transcription errors).
std::vector<CorpusEntry> load_corpus(std::istream& in);

const std::string& embedded_corpus_text();
std::vector<CorpusEntry> embedded_corpus();

/// Builds the ExtensionProfile a table row describes (not meaningful for
/// CycloConstruction entries).
classifier::ExtensionProfile profile_of(const CorpusEntry& entry);

struct ReplayResult {
    std::string entry_id;
    Int prime;
    std::set<std::string> expected;
    std::set<std::string> actual;
    bool agree;
    std::string note;
};

struct ReplayReport {
    std::size_t entries = 0;
    std::size_t disagreements = 0;
    std::vector<ReplayResult> results;  // sorted by (entry id, prime)
};

/// Checks every entry against the classifier (or the cyclotomic construction)
/// and records agreement per prime. Disagreement is data, not an exception.
ReplayReport replay(const std::vector<CorpusEntry>& entries);

/// Label set the classifier verdict maps to (case1/case2a/case2b/
/// inapplicable/inferred_noncyclic/contradiction).
std::set<std::string> labels_of(const classifier::Verdict& v);

std::string emit_report_text(const ReplayReport& report);
std::string emit_report_machine(const ReplayReport& report);  // JSON, deterministic
ReplayReport parse_report_machine(const std::string& json_text);

}  // namespace classnum::corpus
