#include "dmcode/constructions.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dmcode/linalg.hpp"

namespace dmcode {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const ExtField* level1(const FieldTower* T) { return T->level_ptr(1); }

// Moves x to the requested tower level, embedding or projecting as the two
// levels dictate; throws when neither divides the other.
FFElem at_level(const FieldTower* T, const FFElem& x, int lvl) {
    int from = T->level_of(x.F);
    if (from == lvl) return x;
    if (lvl % from == 0) return T->embed(x, lvl);
    return T->project(x, lvl);
}

// Power basis of F_{q^sub} over F_q, carried into level n (sub | n).
std::vector<FFElem> level_basis(const FieldTower* T, int sub, int n) {
    const ExtField& S = T->level(sub);
    std::vector<FFElem> out;
    FFElem cur{&S, S.one()};
    FFElem g{&S, S.gen()};
    for (int j = 0; j < sub; ++j) {
        out.push_back(T->embed(cur, n));
        cur = cur * g;
    }
    return out;
}

// c * tau^i at level n.
SkewPoly monomial(const FieldTower* T, int n, const FFElem& c, int i) {
    SkewPoly u(T, n);
    u.set_coeff(i, c);
    return u;
}

void validate_prime(const FieldTower* T, const FPoly& p, const char* who) {
    if (p.F != level1(T))
        throw std::invalid_argument(std::string(who) + ": prime must live over the degree-1 level");
    if (p.degree() < 1 || !p.is_monic() || !fpoly_is_irreducible(p))
        throw std::invalid_argument(std::string(who) + ": modulus is not a monic prime of A");
}

std::vector<uint8_t> skew_fq_coords(const SkewPoly& u, int n, int window) {
    const ExtField& k = u.T->level(n);
    SkewPoly w = lift(u, n);
    std::vector<uint8_t> v((size_t)window * k.degree(), 0);
    for (int i = 0; i <= w.deg(); ++i)
        for (int j = 0; j < k.degree(); ++j)
            v[(size_t)i * k.degree() + j] = w.c[i][j];
    return v;
}

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// First singular nonzero codeword, as message-basis coordinates.  Called
// only after a full sweep has already run, so the loop is within budget.
std::string find_singular(const RankMetricCode& C) {
    int D = C.dim(), q = C.q();
    uint64_t total = ipow((uint64_t)q, D);
    std::vector<uint8_t> dig(D, 0);
    for (uint64_t idx = 1; idx < total; ++idx) {
        int t = 0;
        while (dig[t] == q - 1) dig[t++] = 0;
        ++dig[t];
        FMat W(C.Fp, C.r, C.r);
        for (int i = 0; i < D; ++i)
            if (dig[i])
                W = fmat_add(W, fmat_smul(FFElem{C.Fp, C.Fp->from_base(dig[i])}, C.basis[i]));
        int rk = fmat_rank(W);
        if (rk < C.r) {
            std::ostringstream os;
            os << "rank " << rk << " codeword at message coordinates (";
            for (int i = 0; i < D; ++i) os << (i ? "," : "") << (int)dig[i];
            os << ")";
            return os.str();
        }
    }
    return "";
}

// Shared tail of every construction: torsion image, exhaustive verdict,
// metric invariants, nuclear parameters.  Budget refusals become notes.
void finish(ConstructionReport& rep) {
    TorsionSpace ts = torsion_space(rep.phi, rep.prime);
    rep.code.emplace(code_from_message(ts, rep.message.basis, rep.family));
    const RankMetricCode& C = *rep.code;
    bool dim_ok = (C.dim() == C.r * C.d());
    if (!dim_ok) {
        rep.verified = false;
        rep.witness = "dim_Fq C = " + std::to_string(C.dim()) +
                      " != r*deg(p) = " + std::to_string(C.r * C.d());
    }
    try {
        int md = min_distance(C);
        rep.min_dist = md;
        if (dim_ok) {
            rep.verified = (md == C.r);
            if (md != C.r) rep.witness = find_singular(C);
        }
    } catch (const std::runtime_error& e) {
        rep.notes.push_back(std::string("minimum distance sweep skipped: ") + e.what());
    }
    try {
        rep.mrd = is_mrd(C);
    } catch (const std::runtime_error& e) {
        rep.notes.push_back(std::string("MRD check skipped: ") + e.what());
    }
    try {
        rep.nuclear = nuclear_parameters(C);
    } catch (const std::runtime_error& e) {
        rep.notes.push_back(std::string("nuclear parameters skipped: ") + e.what());
    }
}

} // namespace

MessageSpace make_message_space(const DrinfeldModule& phi,
                                std::vector<SkewPoly> basis, std::string tag) {
    if (basis.empty())
        throw std::invalid_argument("make_message_space: empty basis");
    int window = 0;
    for (const SkewPoly& u : basis) window = std::max(window, u.deg() + 1);
    RowReducer span(&phi.T->base(), window * phi.T->level(phi.n).degree());
    for (const SkewPoly& u : basis) {
        if (!is_endomorphism(phi, u))
            throw std::invalid_argument("make_message_space: basis element is not an endomorphism");
        if (!span.add(skew_fq_coords(u, phi.n, window)))
            throw std::invalid_argument("make_message_space: basis is F_q-linearly dependent");
    }
    return MessageSpace{phi, std::move(basis), std::move(tag)};
}

bool ConstructionReport::all_hypotheses_pass() const {
    for (const auto& h : hypotheses)
        if (!h.pass) return false;
    return true;
}

std::string ConstructionReport::show() const {
    std::ostringstream os;
    os << "family:  " << family << "\n";
    os << "module:  " << phi.show() << "\n";
    os << "prime:   " << prime.show("T") << "  (degree " << prime.degree() << ")\n";
    os << "message: dim_Fq " << message.dim() << "  [" << message.tag << "]\n";
    os << "hypotheses:\n";
    for (const auto& h : hypotheses) {
        os << "  [" << (h.pass ? "pass" : "FAIL") << "] " << h.name;
        if (!h.detail.empty()) os << "  (" << h.detail << ")";
        os << "\n";
    }
    os << "verdict: ";
    if (!verified.has_value())
        os << "undecided (exhaustive sweep did not run)";
    else if (*verified)
        os << (guaranteed ? "semifield (theorem guarantees; exhaustive sweep agrees)"
                          : "semifield (empirically verified; outside the theorem hypotheses)");
    else
        os << "not a semifield (" << (witness.empty() ? "see notes" : witness) << ")";
    os << "\n";
    if (code) {
        os << "code:    dim_Fq " << code->dim() << " in Mat_" << code->r << "(F_"
           << ipow((uint64_t)code->q(), code->d()) << ")";
        if (min_dist) os << ", min rank distance " << *min_dist;
        if (mrd) os << (*mrd ? ", MRD" : ", not MRD");
        os << "\n";
    }
    if (nuclear) os << "nuclear: " << nuclear->show() << "\n";
    for (const auto& s : notes) os << "note:    " << s << "\n";
    os << "time:    " << std::fixed << std::setprecision(3) << seconds << " s\n";
    return os.str();
}

ConstructionReport recipe_tau_n(const FieldTower* T, int n, const FPoly& prime) {
    auto t0 = Clock::now();
    if (n < 1) throw std::invalid_argument("recipe_tau_n: n must be positive");
    validate_prime(T, prime, "recipe_tau_n");
    if (prime == FPoly::x(level1(T)))
        throw std::invalid_argument("recipe_tau_n: p = T is the A-characteristic of phi");
    int s = prime.degree();

    ConstructionReport rep;
    rep.family = "recipe";
    rep.phi = DrinfeldModule(SkewPoly::tau(T, n, n), n);
    rep.prime = prime;
    rep.hypotheses.push_back({"p differs from char_A(phi) = T", true, "p = " + prime.show("T")});
    rep.guaranteed = true;

    std::vector<SkewPoly> basis;
    auto kb = level_basis(T, n, n);
    for (int i = 0; i < s; ++i)
        for (const FFElem& c : kb) basis.push_back(monomial(T, n, c, i));
    rep.message = make_message_space(rep.phi, std::move(basis), "recipe");

    finish(rep);
    rep.seconds = since(t0);
    return rep;
}

ConstructionReport sheekey(const FieldTower* T, int n, int s, const FFElem& eta,
                           const FPoly& prime) {
    auto t0 = Clock::now();
    if (n < 1 || s < 1) throw std::invalid_argument("sheekey: n and s must be positive");
    validate_prime(T, prime, "sheekey");
    if (prime == FPoly::x(level1(T)))
        throw std::invalid_argument("sheekey: p = T is the A-characteristic of phi");
    if (prime.degree() != s)
        throw std::invalid_argument("sheekey: deg(p) must equal s");
    FFElem eta_n = at_level(T, eta, n);

    ConstructionReport rep;
    rep.family = "sheekey";
    rep.phi = DrinfeldModule(SkewPoly::tau(T, n, n), n);
    rep.prime = prime;

    // Nr_{k/F_q}(eta) * (-1)^{s(n-1)} * p(0) != 1 is the theorem's hypothesis.
    FFElem lhs = T->norm_to(eta_n, 1) * prime.constant_term();
    if ((s * (n - 1)) % 2 != 0) lhs = -lhs;
    FFElem one1{level1(T), level1(T)->one()};
    bool pass = (lhs != one1);
    rep.hypotheses.push_back({"norm condition N(eta)*(-1)^{s(n-1)}*p(0) != 1", pass,
                              "value = " + lhs.show()});
    rep.guaranteed = pass;
    if (!pass)
        rep.notes.push_back("exploration mode: the norm condition fails, the verdict "
                            "comes from the sweep alone");

    std::vector<SkewPoly> basis;
    auto kb = level_basis(T, n, n);
    for (const FFElem& c : kb) {
        SkewPoly u(T, n);
        u.set_coeff(0, c);
        u.set_coeff(s, eta_n * c);
        basis.push_back(std::move(u));
    }
    for (int i = 1; i < s; ++i)
        for (const FFElem& c : kb) basis.push_back(monomial(T, n, c, i));
    rep.message = make_message_space(rep.phi, std::move(basis),
                                     "sheekey(eta = " + eta_n.show() + ")");

    finish(rep);
    rep.seconds = since(t0);
    return rep;
}

FPoly norm_of_T_minus(const FieldTower* T, const FFElem& t, int s) {
    const ExtField& S = T->level(s);
    FFElem ts = at_level(T, t, s);
    FPoly prod = FPoly::one(&S);
    for (int i = 0; i < s; ++i) {
        FPoly f(&S);
        f.set_coeff(1, FFElem{&S, S.one()});
        f.set_coeff(0, -ts.frobenius(i));
        prod = prod * f;
    }
    FPoly out(level1(T));
    for (int j = 0; j <= prod.degree(); ++j)
        out.set_coeff(j, T->project(FFElem{&S, prod.c[j]}, 1));
    return out;
}

FPoly motive_det(const DrinfeldModule& phi, const SkewPoly& u) {
    auto cp = berkowitz_char_poly(motive_matrix(phi, u));
    FPoly det = cp[0];
    if (phi.rank() % 2 != 0) det = -det;
    return det;
}

FPoly two_term_det_closed_form(const FieldTower* T, int r, int s,
                               const FFElem& t, const FFElem& a, const FFElem& b) {
    if (r == 2 * s)
        throw std::invalid_argument("two_term_det_closed_form: r = 2s is outside the formula");
    FFElem na = T->norm_to(at_level(T, a, r), 1);
    FFElem nb = T->norm_to(at_level(T, b, r), 1);
    FPoly term = nb * norm_of_T_minus(T, t, s);
    if ((r - 1) % 2 != 0) term = -term;
    return FPoly::constant(na) + term;
}

ConstructionReport two_term(const FieldTower* T, int r, int s, const FFElem& t,
                            std::optional<FPoly> prime) {
    auto t0 = Clock::now();
    if (s < 1 || s >= r)
        throw std::invalid_argument("two_term: requires 1 <= s < r");
    if (r == 2 * s)
        throw std::invalid_argument("two_term: r = 2s is outside the family "
                                    "(the determinant formula requires r != 2s)");
    ConstructionReport rep;
    rep.family = "two_term";

    FFElem ts = at_level(T, t, s);
    FPoly qt = norm_of_T_minus(T, ts, s);
    if (!fpoly_is_irreducible(qt)) {
        // Any generator of F_{q^s} has an irreducible norm polynomial; take
        // the first by element index and record the substitution.
        const ExtField& S = T->level(s);
        bool found = false;
        for (uint64_t idx = 0; idx < S.card() && !found; ++idx) {
            FFElem cand{&S, S.from_index(idx)};
            if (min_poly_over_base(cand, &S).degree() == s) {
                rep.notes.push_back("t = " + ts.show() + " has composite norm polynomial " +
                                    qt.show("T") + "; substituted t = " + cand.show());
                ts = cand;
                qt = norm_of_T_minus(T, ts, s);
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("two_term: no generator of F_{q^s} found");
    }

    int n = (int)std::lcm((long)r, (long)s);
    SkewPoly f(T, n);
    f.set_coeff(0, T->embed(ts, n));
    f.set_coeff(r, FFElem{T->level_ptr(n), T->level(n).one()});
    rep.phi = DrinfeldModule(f, n);
    if (a_characteristic(rep.phi) != qt)
        throw std::logic_error("two_term: A-characteristic disagrees with the norm polynomial");

    if (prime) {
        validate_prime(T, *prime, "two_term");
        if (prime->degree() != 2)
            throw std::invalid_argument("two_term: deg(p) must be 2 (dim M = 2r)");
        if (fpoly_mod(qt, *prime).degree() < 1)
            throw std::invalid_argument("two_term: q_t mod p lies in F_q "
                                        "(residue condition fails)");
    } else {
        for (const FPoly& p : monic_irreducibles(level1(T), 2)) {
            if (fpoly_mod(qt, p).degree() >= 1) {
                prime = p;
                rep.notes.push_back("prime chosen by scan: " + p.show("T"));
                break;
            }
        }
        if (!prime)
            throw std::runtime_error("two_term: no degree-2 prime satisfies the "
                                     "residue condition");
    }
    rep.prime = *prime;

    rep.hypotheses.push_back({"s < r and r != 2s", true,
                              "(r, s) = (" + std::to_string(r) + ", " + std::to_string(s) + ")"});
    rep.hypotheses.push_back({"q_t = Nr(T - t) is prime", true, qt.show("T")});
    rep.hypotheses.push_back({"q_t mod p outside F_q", true,
                              "q_t mod p = " + fpoly_mod(qt, *prime).show("T")});
    rep.guaranteed = true;

    std::vector<SkewPoly> basis;
    auto rb = level_basis(T, r, n);
    for (const FFElem& c : rb) basis.push_back(monomial(T, n, c, 0));
    for (const FFElem& c : rb) basis.push_back(monomial(T, n, c, s));
    rep.message = make_message_space(rep.phi, std::move(basis),
                                     "two_term(t = " + ts.show() + ", s = " + std::to_string(s) + ")");

    // The closed-form determinant is part of the family's contract; a
    // disagreement with the motive determinant would be an internal bug.
    const ExtField& Fr = T->level(r);
    std::mt19937_64 rng(0x2e11);
    for (int trial = 0; trial < 10; ++trial) {
        FFElem a{&Fr, Fr.from_index(rng() % Fr.card())};
        FFElem b{&Fr, Fr.from_index(rng() % Fr.card())};
        SkewPoly u(T, n);
        u.set_coeff(0, T->embed(a, n));
        u.set_coeff(s, T->embed(b, n));
        FPoly det = motive_det(rep.phi, u);
        FPoly det1(level1(T));
        for (int j = 0; j <= det.degree(); ++j)
            det1.set_coeff(j, T->project(FFElem{det.F, det.c[j]}, 1));
        if (det1 != two_term_det_closed_form(T, r, s, ts, a, b))
            throw std::logic_error("two_term: closed-form determinant disagrees "
                                   "with the motive determinant");
    }
    rep.notes.push_back("determinant closed form checked against the motive "
                        "determinant on 10 random (a, b)");

    finish(rep);
    rep.seconds = since(t0);
    return rep;
}

PrimeConditions check_prime_conditions(const DrinfeldModule& phi, const FPoly& prime,
                                       long e, long g) {
    validate_prime(phi.T, prime, "check_prime_conditions");
    if (prime == a_characteristic(phi))
        throw std::invalid_argument("check_prime_conditions: p is the A-characteristic of phi");
    auto [mphi, dphi] = minimal_poly_pi(phi);
    FPoly mbar = mphi.reduce_mod(prime, *phi.T);
    PrimeConditions pc;
    pc.irreducible = fpoly_is_irreducible(mbar);
    pc.generates =
        (min_poly_over_base(mbar.constant_term(), mbar.F).degree() == prime.degree());
    pc.inequality = (e * g < (long)prime.degree() * dphi);
    return pc;
}

ConstructionReport general_ls(const FieldTower* T, int l, int s, int r,
                              const std::vector<FFElem>& coeffs,
                              const FPoly& prime, int e_override) {
    auto t0 = Clock::now();
    if (l < 1 || s < 1 || r < 1)
        throw std::invalid_argument("general_ls: l, s, r must be positive");
    if ((int)coeffs.size() != r + 1)
        throw std::invalid_argument("general_ls: need the coefficients a_0..a_r");
    validate_prime(T, prime, "general_ls");
    int d = prime.degree();
    int n = (int)std::lcm((long)l, (long)s);
    int g = (int)std::gcd((long)l, (long)s);

    std::vector<FFElem> a;
    for (const FFElem& c : coeffs) a.push_back(at_level(T, c, s));
    if (a.back().is_zero())
        throw std::invalid_argument("general_ls: a_r = 0 drops the rank below r*l");

    SkewPoly f(T, n);
    for (int i = 0; i <= r; ++i) f.set_coeff(l * i, T->embed(a[i], n));
    ConstructionReport rep;
    rep.family = "general";
    rep.phi = DrinfeldModule(f, n);
    if (prime == a_characteristic(rep.phi))
        throw std::invalid_argument("general_ls: p equals the A-characteristic of phi");

    auto [mphi, dphi] = minimal_poly_pi(rep.phi);
    if (dphi != r * g)
        throw std::invalid_argument("general_ls: deg(m_phi) = " + std::to_string(dphi) +
                                    " != r*gcd(l,s) = " + std::to_string(r * g) +
                                    "; the module is rejected as not maximal");
    int e = (e_override >= 0) ? e_override : r * d - 1;
    if ((long)e * g >= (long)d * dphi)
        throw std::invalid_argument("general_ls: hypothesis (3) fails: e*g = " +
                                    std::to_string((long)e * g) + " >= deg(p)*deg(m_phi) = " +
                                    std::to_string((long)d * dphi));
    rep.prime = prime;

    PrimeConditions pc = check_prime_conditions(rep.phi, prime, e, g);
    FPoly mbar = mphi.reduce_mod(prime, *T);
    rep.hypotheses.push_back({"(1) m_phi mod p irreducible over A/(p)", pc.irreducible,
                              "m_phi mod p = " + mbar.show("x")});
    rep.hypotheses.push_back({"(2) m_phi mod p (0) generates A/(p) over F_q", pc.generates,
                              "constant term = " + mbar.constant_term().show()});
    rep.hypotheses.push_back({"(3) e*g < deg(p)*deg(m_phi)", pc.inequality,
                              std::to_string((long)e * g) + " < " + std::to_string((long)d * dphi)});
    rep.guaranteed = pc.all();
    if (!rep.guaranteed)
        rep.notes.push_back("exploration mode: a hypothesis fails, the verdict comes "
                            "from the sweep alone");

    std::vector<SkewPoly> basis;
    auto lb = level_basis(T, l, n);
    for (int i = 0; i <= e; ++i)
        for (const FFElem& c : lb) basis.push_back(monomial(T, n, c, s * i));
    rep.message = make_message_space(rep.phi, std::move(basis),
                                     "general(l = " + std::to_string(l) + ", s = " + std::to_string(s) +
                                     ", r = " + std::to_string(r) + ", d = " + std::to_string(d) + ")");

    finish(rep);
    rep.seconds = since(t0);
    return rep;
}

std::vector<FPoly> prime_search(const DrinfeldModule& phi, int d, size_t budget) {
    if (d < 1) throw std::invalid_argument("prime_search: d must be positive");
    FPoly qchar = a_characteristic(phi);
    auto [mphi, dphi] = minimal_poly_pi(phi);
    (void)dphi;
    std::vector<FPoly> out;
    for (const FPoly& p : monic_irreducibles(phi.T->level_ptr(1), d)) {
        if (p == qchar) continue;
        FPoly mbar = mphi.reduce_mod(p, *phi.T);
        if (!fpoly_is_irreducible(mbar)) continue;
        if (min_poly_over_base(mbar.constant_term(), mbar.F).degree() != d) continue;
        out.push_back(p);
        if (budget != 0 && out.size() >= budget) break;
    }
    return out;
}

} // namespace dmcode
