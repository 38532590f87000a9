#ifndef DMCODE_JSON_IO_HPP
#define DMCODE_JSON_IO_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dmcode/constructions.hpp"

namespace dmcode {

// JSON image of a construction report, schema_version 1.  The layout is a
// pure function of the report's mathematical content: wall times never enter,
// keys are emitted sorted, so identical runs dump byte-identical files.
nlohmann::json report_to_json(const ConstructionReport& rep);

// report_to_json rendered with 2-space indentation and a trailing newline.
std::string dump_report(const ConstructionReport& rep);

// Invariant values a report file claims for its code section.
struct StoredClaims {
    std::optional<int> min_distance;
    std::optional<bool> mrd;
    std::optional<bool> semifield;
    std::optional<std::vector<int>> nuclear;   // (dim C, I_l, I_r, Cent, Z)
};

// A code section rebuilt from a report file.  The tower is constructed from
// the stored (p, m, seed) and owns the residue field the basis lives over.
struct LoadedCode {
    std::shared_ptr<FieldTower> tower;
    std::optional<RankMetricCode> code;
    StoredClaims claims;
    std::string family;
};

// Throws std::invalid_argument on schema violations (missing or ill-typed
// fields, wrong schema_version, basis shape mismatches, dependent basis).
LoadedCode code_from_json(const nlohmann::json& j);
LoadedCode load_report_file(const std::string& path);

// Outcome of recomputing the claimed invariants from the basis alone.
struct VerifyOutcome {
    bool match = true;
    std::vector<std::string> diffs;            // one line per disagreement
    std::optional<int> min_distance;           // recomputed values
    std::optional<bool> mrd;
    std::optional<bool> semifield;
    std::optional<NuclearParams> nuclear;
};

// Recomputes with the library's own sweeps and compares against the stored
// claims.  A claim that cannot be rechecked (enumeration budget) fails the
// match: an unverifiable file is not a verified file.
VerifyOutcome verify_stored(const LoadedCode& lc);

// Parsers for command-line inputs.  Grammar: a sum of signed terms
// "c", "c*V^k", "V^k", "V" with integer c and exponent k >= 0; whitespace is
// ignored.  Integer coefficients are reduced into the prime subfield.
// parse_prime reads V = T over the degree-1 level; parse_element reads V as
// the named generator of the given field.
FPoly parse_prime(const ExtField* A1, const std::string& text);
FFElem parse_element(const ExtField* F, const std::string& text, char var = 'a');

} // namespace dmcode

#endif
