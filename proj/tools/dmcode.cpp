// Command-line front end: construct a code from one of the four families,
// search for usable primes, verify a stored report, or run the demo instance.
//
// Exit codes: 0 = semifield verdict (or verify match), 1 = hypothesis failure
// in strict mode, non-semifield verdict, or verify mismatch, 2 = bad config.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "dmcode/constructions.hpp"
#include "dmcode/json_io.hpp"

using namespace dmcode;

namespace {

struct QFactors {
    int p = 2;
    int m = 1;
};

QFactors factor_q(int q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    int p = 2;
    while (q % p != 0) ++p;          // smallest divisor > 1 is prime
    QFactors f{p, 0};
    int v = q;
    while (v % p == 0) {
        v /= p;
        ++f.m;
    }
    if (v != 1) throw std::invalid_argument("q must be a prime power");
    return f;
}

std::unique_ptr<FieldTower> make_tower(int q, uint64_t seed) {
    QFactors s = factor_q(q);
    return build_tower({s.p, s.m, seed, {1}});
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    return parts;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

void require_flag(bool present, const char* what) {
    if (!present)
        throw std::invalid_argument(std::string("missing required flag for this family: ") + what);
}

struct ConstructArgs {
    std::string family;
    int q = 0;
    uint64_t seed = 0;
    int n = 0, s = 0, l = 0, r = 0;
    std::string eta, t, phi, prime, out;
    int e_override = -1;
    bool strict = false;
};

std::vector<FFElem> parse_coeff_list(const ExtField* F, const std::string& list) {
    std::vector<FFElem> coeffs;
    for (const std::string& part : split_commas(list)) coeffs.push_back(parse_element(F, part));
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    return coeffs;
}

int finish_construct(const ConstructionReport& rep, const ConstructArgs& a) {
    std::cout << rep.show();
    if (!a.out.empty()) {
        write_file(a.out, dump_report(rep));
        std::cout << "report written to " << a.out << "\n";
    }
    if (a.strict && !rep.all_hypotheses_pass()) {
        for (const HypothesisCheck& h : rep.hypotheses)
            if (!h.pass)
                std::cerr << "strict mode: failed hypothesis: " << h.name << " (" << h.detail
                          << ")\n";
        return 1;
    }
    return rep.semifield() ? 0 : 1;
}

int run_construct(const ConstructArgs& a) {
    require_flag(a.q > 0, "--q");
    auto T = make_tower(a.q, a.seed);
    const ExtField* A1 = T->level_ptr(1);

    if (a.family == "recipe") {
        require_flag(a.n > 0, "--n");
        require_flag(!a.prime.empty(), "--prime");
        return finish_construct(recipe_tau_n(T.get(), a.n, parse_prime(A1, a.prime)), a);
    }
    if (a.family == "sheekey") {
        require_flag(a.n > 0, "--n");
        require_flag(a.s > 0, "--s");
        require_flag(!a.eta.empty(), "--eta");
        require_flag(!a.prime.empty(), "--prime");
        FFElem eta = parse_element(T->level_ptr(a.n), a.eta);
        return finish_construct(sheekey(T.get(), a.n, a.s, eta, parse_prime(A1, a.prime)), a);
    }
    if (a.family == "two_term") {
        require_flag(a.r > 0, "--r");
        require_flag(a.s > 0, "--s");
        require_flag(!a.t.empty(), "--t");
        FFElem t = parse_element(T->level_ptr(a.s), a.t);
        std::optional<FPoly> prime;
        if (!a.prime.empty()) prime = parse_prime(A1, a.prime);
        return finish_construct(two_term(T.get(), a.r, a.s, t, prime), a);
    }
    if (a.family == "general") {
        require_flag(a.l > 0, "--l");
        require_flag(a.s > 0, "--s");
        require_flag(!a.phi.empty(), "--phi");
        require_flag(!a.prime.empty(), "--prime");
        std::vector<FFElem> coeffs = parse_coeff_list(T->level_ptr(a.s), a.phi);
        int r = (int)coeffs.size() - 1;
        if (a.r > 0 && a.r != r)
            throw std::invalid_argument("--r disagrees with the length of --phi");
        if (r < 1) throw std::invalid_argument("--phi needs at least two coefficients");
        return finish_construct(
            general_ls(T.get(), a.l, a.s, r, coeffs, parse_prime(A1, a.prime), a.e_override), a);
    }
    throw std::invalid_argument("unknown family: " + a.family +
                                " (expected recipe, sheekey, two_term, or general)");
}

struct SearchArgs {
    std::string family;
    int q = 0;
    uint64_t seed = 0;
    int n = 0, s = 0, l = 0, r = 0;
    std::string t, phi, out;
    int degree = 0;
    std::size_t budget = 0;
};

// The module is defined by the same family flags as `construct`, minus the prime.
DrinfeldModule module_from(const SearchArgs& a, const FieldTower* T) {
    if (a.family == "recipe" || a.family == "sheekey") {
        require_flag(a.n > 0, "--n");
        std::vector<ExtField::Vec> c((size_t)a.n + 1, T->level(a.n).zero());
        c.back() = T->level(a.n).one();
        return DrinfeldModule(T, a.n, std::move(c));
    }
    if (a.family == "two_term") {
        require_flag(a.r > 0, "--r");
        require_flag(a.s > 0, "--s");
        require_flag(!a.t.empty(), "--t");
        int n = std::lcm(a.r, a.s);
        FFElem t = T->embed(parse_element(T->level_ptr(a.s), a.t), n);
        std::vector<ExtField::Vec> c((size_t)a.r + 1, T->level(n).zero());
        c[0] = t.c;
        c.back() = T->level(n).one();
        return DrinfeldModule(T, n, std::move(c));
    }
    if (a.family == "general") {
        require_flag(a.l > 0, "--l");
        require_flag(a.s > 0, "--s");
        require_flag(!a.phi.empty(), "--phi");
        std::vector<FFElem> coeffs = parse_coeff_list(T->level_ptr(a.s), a.phi);
        int r = (int)coeffs.size() - 1;
        if (r < 1) throw std::invalid_argument("--phi needs at least two coefficients");
        int n = std::lcm(a.l, a.s);
        std::vector<ExtField::Vec> c((size_t)r * a.l + 1, T->level(n).zero());
        for (int i = 0; i <= r; ++i) c[(size_t)i * a.l] = T->embed(coeffs[i], n).c;
        return DrinfeldModule(T, n, std::move(c));
    }
    throw std::invalid_argument("unknown family: " + a.family +
                                " (expected recipe, sheekey, two_term, or general)");
}

int run_search(const SearchArgs& a) {
    require_flag(a.q > 0, "--q");
    require_flag(a.degree > 0, "--degree");
    auto T = make_tower(a.q, a.seed);
    DrinfeldModule phi = module_from(a, T.get());
    std::vector<FPoly> passers = prime_search(phi, a.degree, a.budget);

    std::cout << "module: " << phi.show() << "\n";
    std::cout << "degree " << a.degree << ": " << passers.size() << " passer"
              << (passers.size() == 1 ? "" : "s") << "\n";
    for (const FPoly& p : passers) std::cout << "  " << p.show("T") << "\n";
    if (passers.empty())
        std::cout << "no prime of this degree satisfies the conditions (a finding, not an "
                     "error)\n";

    if (!a.out.empty()) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["kind"] = "prime_search";
        j["degree"] = a.degree;
        j["count"] = passers.size();
        nlohmann::json arr = nlohmann::json::array();
        for (const FPoly& p : passers) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (int i = 0; i <= p.degree(); ++i) coeffs.push_back((int)p.c[i][0]);
            arr.push_back(nlohmann::json{{"coeffs", coeffs}, {"text", p.show("T")}});
        }
        j["passers"] = arr;
        write_file(a.out, j.dump(2) + "\n");
        std::cout << "results written to " << a.out << "\n";
    }
    return 0;
}

int run_verify(const std::string& path) {
    LoadedCode lc = load_report_file(path);
    const RankMetricCode& C = *lc.code;
    long card = 1;
    for (int i = 0; i < C.d(); ++i) card *= C.q();
    std::cout << "loaded " << lc.family << " code: dim_Fq " << (int)C.basis.size() << " in Mat_"
              << C.r << "(F_" << card << ")\n";
    VerifyOutcome out = verify_stored(lc);
    if (out.min_distance) std::cout << "min rank distance: " << *out.min_distance << "\n";
    if (out.mrd) std::cout << "mrd: " << (*out.mrd ? "yes" : "no") << "\n";
    if (out.semifield) std::cout << "semifield: " << (*out.semifield ? "yes" : "no") << "\n";
    if (out.nuclear) std::cout << "nuclear parameters: " << out.nuclear->show() << "\n";
    if (out.match) {
        std::cout << "verify: stored claims match the recomputation\n";
        return 0;
    }
    for (const std::string& d : out.diffs) std::cerr << "mismatch: " << d << "\n";
    return 1;
}

// The standing example: q = 3, phi_T = alpha + alpha^2 tau^2 + tau^4 with
// alpha a generator of F_27, message span {c tau^(3i)}, prime T - 1.
int run_demo(const std::string& out_path, bool strict) {
    ConstructArgs a;
    a.family = "general";
    a.q = 3;
    a.l = 2;
    a.s = 3;
    a.phi = "a,a^2,1";
    a.prime = "T-1";
    a.out = out_path;
    a.strict = strict;
    return run_construct(a);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semifield rank-metric codes from Drinfeld modules"};
    app.require_subcommand(1);
    app.footer("Field elements are polynomials in the generator 'a' of the addressed field\n"
               "(--eta lives in F_(q^n), --t and --phi coefficients in F_(q^s)); primes are\n"
               "monic polynomials in T over F_q.  Set DMCODE_ENUM_BUDGET to override the\n"
               "exhaustive-enumeration budget.");

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a code and verify it");
    construct->add_option("--family", ca.family, "recipe | sheekey | two_term | general")
        ->required();
    construct->add_option("--q", ca.q, "base field size (prime power)")->required();
    construct->add_option("--seed", ca.seed, "field tower seed (default 0)");
    construct->add_option("--n", ca.n, "extension degree of k = F_(q^n) (recipe, sheekey)");
    construct->add_option("--s", ca.s, "family parameter s");
    construct->add_option("--l", ca.l, "tau-stride of phi_T (general)");
    construct->add_option("--r", ca.r, "tau-degree (two_term) or a-degree check (general)");
    construct->add_option("--eta", ca.eta, "twist element in F_(q^n) (sheekey)");
    construct->add_option("--t", ca.t, "constant coefficient in F_(q^s) (two_term)");
    construct->add_option("--phi", ca.phi,
                          "comma-separated coefficients a_0,..,a_r in F_(q^s) of "
                          "phi_T = sum a_i tau^(l i) (general)");
    construct->add_option("--prime", ca.prime,
                          "monic prime of F_q[T]; optional for two_term (scanned)");
    construct->add_option("--e-override", ca.e_override,
                          "message-length override e (general; default rd-1)");
    construct->add_flag("--strict", ca.strict, "exit 1 when a hypothesis fails");
    construct->add_option("--out", ca.out, "write the JSON report here");

    SearchArgs sa;
    CLI::App* search = app.add_subcommand("search-primes", "list primes passing the conditions");
    search->add_option("--family", sa.family, "recipe | sheekey | two_term | general")
        ->required();
    search->add_option("--q", sa.q, "base field size (prime power)")->required();
    search->add_option("--seed", sa.seed, "field tower seed (default 0)");
    search->add_option("--n", sa.n, "extension degree (recipe, sheekey)");
    search->add_option("--s", sa.s, "family parameter s");
    search->add_option("--l", sa.l, "tau-stride of phi_T (general)");
    search->add_option("--r", sa.r, "tau-degree (two_term)");
    search->add_option("--t", sa.t, "constant coefficient in F_(q^s) (two_term)");
    search->add_option("--phi", sa.phi, "coefficients in F_(q^s) (general)");
    search->add_option("--degree", sa.degree, "prime degree to scan")->required();
    search->add_option("--budget", sa.budget, "stop after this many passers (0 = no cap)");
    search->add_option("--out", sa.out, "write the passer list as JSON here");

    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "recheck a stored report file");
    verify->add_option("file", verify_path, "JSON report produced by construct")->required();

    std::string demo_out;
    bool demo_strict = false;
    CLI::App* demo = app.add_subcommand(
        "demo", "run the standing example (general family, q=3, prime T-1)");
    demo->add_option("--out", demo_out, "write the JSON report here");
    demo->add_flag("--strict", demo_strict, "exit 1 when a hypothesis fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (search->parsed()) return run_search(sa);
        if (verify->parsed()) return run_verify(verify_path);
        if (demo->parsed()) return run_demo(demo_out, demo_strict);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::string(e.what()).find("hypothesis") != std::string::npos ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
