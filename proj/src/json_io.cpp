#include "dmcode/json_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace dmcode {

using nlohmann::json;

namespace {

json vec_to_json(const ExtField::Vec& v) {
    json a = json::array();
    for (uint8_t x : v) a.push_back((int)x);
    return a;
}

// level-1 coefficients of a polynomial in T, as plain integers
json fpoly_to_json(const FPoly& f) {
    json a = json::array();
    for (int i = 0; i <= f.degree(); ++i) a.push_back((int)f.c[i][0]);
    return a;
}

json skew_to_json(const SkewPoly& u) {
    json coeffs = json::array();
    for (int i = 0; i <= u.deg(); ++i) coeffs.push_back(vec_to_json(u.c[i]));
    return json{{"level", u.level}, {"coeffs", coeffs}};
}

json fmat_to_json(const FMat& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < M.cols; ++j) row.push_back(vec_to_json(M.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <typename T>
json opt_to_json(const std::optional<T>& v) {
    if (v) return json(*v);
    return json(nullptr);
}

const json& field_at(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("report schema: missing field '") + key + "'");
    return *it;
}

int int_at(const json& j, const char* key) {
    const json& v = field_at(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("report schema: field '") + key +
                                    "' is not an integer");
    return v.get<int>();
}

uint8_t coord_in(const json& v, int q, const char* where) {
    if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() >= q)
        throw std::invalid_argument(std::string("report schema: ") + where +
                                    " coordinate outside [0, q)");
    return (uint8_t)v.get<long>();
}

} // namespace

json report_to_json(const ConstructionReport& rep) {
    const FieldTower* T = rep.phi.T;
    json j;
    j["schema_version"] = 1;
    j["kind"] = "construction_report";
    j["family"] = rep.family;
    j["tower"] = json{{"p", T->base().p()}, {"m", T->base().m()}, {"seed", T->seed()}};

    json phic = json::array();
    for (const auto& v : rep.phi.g) phic.push_back(vec_to_json(v));
    j["module"] = json{{"n", rep.phi.n},
                       {"rank", rep.phi.rank()},
                       {"phi_coeffs", phic},
                       {"text", rep.phi.show()}};

    j["prime"] = json{{"coeffs", fpoly_to_json(rep.prime)},
                      {"degree", rep.prime.degree()},
                      {"text", rep.prime.show("T")}};

    json mb = json::array();
    for (const SkewPoly& u : rep.message.basis) mb.push_back(skew_to_json(u));
    j["message"] = json{{"tag", rep.message.tag}, {"dim", rep.message.dim()}, {"basis", mb}};

    json hyp = json::array();
    for (const HypothesisCheck& h : rep.hypotheses)
        hyp.push_back(json{{"name", h.name}, {"pass", h.pass}, {"detail", h.detail}});
    j["hypotheses"] = hyp;

    j["guaranteed"] = rep.guaranteed;
    j["verified"] = opt_to_json(rep.verified);
    j["witness"] = rep.witness;
    j["notes"] = rep.notes;

    if (rep.code) {
        const RankMetricCode& C = *rep.code;
        json cb = json::array();
        for (const FMat& B : C.basis) cb.push_back(fmat_to_json(B));
        j["code"] = json{{"r", C.r},
                         {"d", C.d()},
                         {"q", C.q()},
                         {"prime", fpoly_to_json(rep.prime)},
                         {"basis", cb}};
    }

    json nucl(nullptr);
    if (rep.nuclear) {
        const NuclearParams& n = *rep.nuclear;
        nucl = json::array({n.dim_code, n.dim_left, n.dim_right, n.dim_cent, n.dim_center});
    }
    j["invariants"] = json{{"min_distance", opt_to_json(rep.min_dist)},
                           {"mrd", opt_to_json(rep.mrd)},
                           {"semifield", opt_to_json(rep.verified)},
                           {"nuclear", nucl}};
    return j;
}

std::string dump_report(const ConstructionReport& rep) {
    return report_to_json(rep).dump(2) + "\n";
}

LoadedCode code_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("report schema: not a JSON object");
    if (int_at(j, "schema_version") != 1)
        throw std::invalid_argument("report schema: unsupported schema_version");

    const json& tw = field_at(j, "tower");
    TowerConfig cfg;
    cfg.p = int_at(tw, "p");
    cfg.m = int_at(tw, "m");
    cfg.seed = field_at(tw, "seed").get<uint64_t>();
    cfg.degrees = {1};
    LoadedCode lc;
    lc.tower = std::shared_ptr<FieldTower>(build_tower(cfg));
    const ExtField* A1 = lc.tower->level_ptr(1);
    int q = lc.tower->q();

    const json& jc = field_at(j, "code");
    const json& pc = field_at(jc, "prime");
    if (!pc.is_array() || pc.empty())
        throw std::invalid_argument("report schema: prime coefficient list is empty");
    FPoly prime(A1);
    for (size_t i = 0; i < pc.size(); ++i)
        prime.set_coeff((int)i, FFElem{A1, A1->from_base(coord_in(pc[i], q, "prime"))});
    if (prime.degree() < 1 || !prime.is_monic() || !fpoly_is_irreducible(prime))
        throw std::invalid_argument("report schema: stored prime is not a monic prime of A");

    int r = int_at(jc, "r");
    int d = int_at(jc, "d");
    if (d != prime.degree())
        throw std::invalid_argument("report schema: stored d disagrees with deg(prime)");
    if (int_at(jc, "q") != q)
        throw std::invalid_argument("report schema: stored q disagrees with the tower");
    const ExtField* Fp = &lc.tower->residue_field(prime);

    const json& jb = field_at(jc, "basis");
    if (!jb.is_array() || jb.empty())
        throw std::invalid_argument("report schema: empty code basis");
    std::vector<FMat> basis;
    for (const json& jm : jb) {
        if (!jm.is_array() || (int)jm.size() != r)
            throw std::invalid_argument("report schema: basis matrix has wrong row count");
        FMat M(Fp, r, r);
        for (int i = 0; i < r; ++i) {
            if (!jm[i].is_array() || (int)jm[i].size() != r)
                throw std::invalid_argument("report schema: basis matrix has wrong column count");
            for (int k = 0; k < r; ++k) {
                const json& je = jm[i][k];
                if (!je.is_array() || (int)je.size() != d)
                    throw std::invalid_argument("report schema: entry has wrong coordinate count");
                ExtField::Vec v(d);
                for (int t = 0; t < d; ++t) v[t] = coord_in(je[t], q, "basis");
                M.at(i, k) = v;
            }
        }
        basis.push_back(std::move(M));
    }
    lc.code.emplace(Fp, r, std::move(basis));

    const json& inv = field_at(j, "invariants");
    auto opt_int = [&](const char* key) -> std::optional<int> {
        const json& v = field_at(inv, key);
        if (v.is_null()) return std::nullopt;
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string("report schema: invariant '") + key +
                                        "' is not an integer");
        return v.get<int>();
    };
    auto opt_bool = [&](const char* key) -> std::optional<bool> {
        const json& v = field_at(inv, key);
        if (v.is_null()) return std::nullopt;
        if (!v.is_boolean())
            throw std::invalid_argument(std::string("report schema: invariant '") + key +
                                        "' is not a boolean");
        return v.get<bool>();
    };
    lc.claims.min_distance = opt_int("min_distance");
    lc.claims.mrd = opt_bool("mrd");
    lc.claims.semifield = opt_bool("semifield");
    const json& nu = field_at(inv, "nuclear");
    if (!nu.is_null()) {
        if (!nu.is_array() || nu.size() != 5)
            throw std::invalid_argument("report schema: nuclear tuple must have 5 entries");
        std::vector<int> t;
        for (const json& v : nu) {
            if (!v.is_number_integer())
                throw std::invalid_argument("report schema: nuclear entry is not an integer");
            t.push_back(v.get<int>());
        }
        lc.claims.nuclear = std::move(t);
    }

    const json& fam = field_at(j, "family");
    if (!fam.is_string()) throw std::invalid_argument("report schema: family is not a string");
    lc.family = fam.get<std::string>();
    return lc;
}

LoadedCode load_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open report file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json parse: ") + e.what());
    }
    return code_from_json(j);
}

VerifyOutcome verify_stored(const LoadedCode& lc) {
    if (!lc.code) throw std::invalid_argument("verify_stored: no code loaded");
    const RankMetricCode& C = *lc.code;
    VerifyOutcome out;
    auto unverifiable = [&](const char* what, const std::string& why) {
        out.diffs.push_back(std::string(what) + ": stored claim could not be rechecked (" +
                            why + ")");
    };

    try {
        out.min_distance = min_distance(C);
    } catch (const std::runtime_error& e) {
        if (lc.claims.min_distance) unverifiable("min_distance", e.what());
    }
    if (out.min_distance && lc.claims.min_distance &&
        *out.min_distance != *lc.claims.min_distance)
        out.diffs.push_back("min_distance: stored " + std::to_string(*lc.claims.min_distance) +
                            ", recomputed " + std::to_string(*out.min_distance));

    try {
        out.mrd = is_mrd(C);
    } catch (const std::runtime_error& e) {
        if (lc.claims.mrd) unverifiable("mrd", e.what());
    }
    if (out.mrd && lc.claims.mrd && *out.mrd != *lc.claims.mrd)
        out.diffs.push_back(std::string("mrd: stored ") + (*lc.claims.mrd ? "true" : "false") +
                            ", recomputed " + (*out.mrd ? "true" : "false"));

    try {
        out.semifield = is_semifield_code(C);
    } catch (const std::runtime_error& e) {
        if (lc.claims.semifield) unverifiable("semifield", e.what());
    }
    if (out.semifield && lc.claims.semifield && *out.semifield != *lc.claims.semifield)
        out.diffs.push_back(std::string("semifield: stored ") +
                            (*lc.claims.semifield ? "true" : "false") + ", recomputed " +
                            (*out.semifield ? "true" : "false"));

    try {
        out.nuclear = nuclear_parameters(C);
    } catch (const std::runtime_error& e) {
        if (lc.claims.nuclear) unverifiable("nuclear", e.what());
    }
    if (out.nuclear && lc.claims.nuclear) {
        const NuclearParams& n = *out.nuclear;
        std::vector<int> got = {n.dim_code, n.dim_left, n.dim_right, n.dim_cent, n.dim_center};
        if (got != *lc.claims.nuclear) {
            std::string diff = "nuclear: stored (";
            for (size_t i = 0; i < 5; ++i)
                diff += (i ? ", " : "") + std::to_string((*lc.claims.nuclear)[i]);
            diff += "), recomputed " + n.show();
            out.diffs.push_back(diff);
        }
    }

    out.match = out.diffs.empty();
    return out;
}

namespace {

struct PTerm {
    long coeff;
    long exp;
};

std::vector<PTerm> parse_terms(const std::string& text, char var) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("parse: empty expression");
    std::vector<PTerm> terms;
    size_t i = 0;
    while (i < s.size()) {
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            if (i >= s.size()) throw std::invalid_argument("parse: dangling sign");
        }
        bool have_coeff = false;
        long coeff = 1;
        if (std::isdigit((unsigned char)s[i])) {
            coeff = 0;
            have_coeff = true;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                coeff = coeff * 10 + (s[i] - '0');
                if (coeff > 1000000) throw std::invalid_argument("parse: coefficient too large");
                ++i;
            }
        }
        if (i < s.size() && s[i] == '*') {
            if (!have_coeff) throw std::invalid_argument("parse: '*' without a coefficient");
            ++i;
            if (i >= s.size() || s[i] != var)
                throw std::invalid_argument(std::string("parse: expected '") + var + "' after '*'");
        }
        long exp = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    throw std::invalid_argument("parse: expected an exponent after '^'");
                exp = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                    exp = exp * 10 + (s[i] - '0');
                    if (exp > 100000) throw std::invalid_argument("parse: exponent too large");
                    ++i;
                }
            }
        } else if (!have_coeff) {
            throw std::invalid_argument(std::string("parse: unexpected character '") + s[i] + "'");
        }
        terms.push_back({sign * coeff, exp});
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument(std::string("parse: unexpected character '") + s[i] + "'");
    }
    return terms;
}

} // namespace

FPoly parse_prime(const ExtField* A1, const std::string& text) {
    FPoly f(A1);
    for (const PTerm& t : parse_terms(text, 'T')) {
        if (t.exp > 64) throw std::invalid_argument("parse: prime degree too large");
        FFElem c{A1, A1->from_base(A1->base().from_int(t.coeff))};
        f.set_coeff((int)t.exp, f.coeff((int)t.exp) + c);
    }
    return f;
}

FFElem parse_element(const ExtField* F, const std::string& text, char var) {
    FFElem acc{F, F->zero()};
    FFElem g{F, F->gen()};
    for (const PTerm& t : parse_terms(text, var)) {
        FFElem c{F, F->from_base(F->base().from_int(t.coeff))};
        acc = acc + c * g.pow((uint64_t)t.exp);
    }
    return acc;
}

} // namespace dmcode
