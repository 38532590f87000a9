#ifndef DMCODE_CONSTRUCTIONS_HPP
#define DMCODE_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmcode/codes.hpp"
#include "dmcode/drinfeld.hpp"

namespace dmcode {

// F_q-subspace of End(phi) given by a basis of skew polynomials; the input
// every construction hands to code_from_message.
struct MessageSpace {
    DrinfeldModule phi;
    std::vector<SkewPoly> basis;
    std::string tag;       // recipe | sheekey(eta) | two_term(t,s) | general(l,s,r,d)

    int dim() const { return (int)basis.size(); }
};

// Checks each element against is_endomorphism and the basis for F_q-linear
// independence; throws on either failure.
MessageSpace make_message_space(const DrinfeldModule& phi,
                                std::vector<SkewPoly> basis, std::string tag);

// One named sufficient condition of a construction theorem.
struct HypothesisCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Outcome of one construction run.  `guaranteed` means every hypothesis of
// the family's theorem passed, so the semifield verdict is forced;
// `verified` is what the exhaustive codeword sweep actually found (empty
// when the sweep refused to start for budget reasons).  The two are kept
// separate because the hypotheses are sufficient, not necessary: a run in
// exploration mode can be empirically a semifield with no guarantee.
struct ConstructionReport {
    std::string family;
    DrinfeldModule phi;
    FPoly prime;
    MessageSpace message;
    std::vector<HypothesisCheck> hypotheses;
    bool guaranteed = false;
    std::optional<bool> verified;
    std::string witness;               // singular codeword, when one exists
    std::optional<RankMetricCode> code;
    std::optional<int> min_dist;
    std::optional<bool> mrd;
    std::optional<NuclearParams> nuclear;
    std::vector<std::string> notes;    // substitutions, searches, skipped checks
    double seconds = 0.0;              // wall time of build plus verification

    bool all_hypotheses_pass() const;
    bool semifield() const { return verified.value_or(false); }
    std::string show() const;
};

// phi_T = tau^n over F_{q^n} and M = {u : deg_tau(u) <= deg(p) - 1}.  Every
// skew polynomial commutes with tau^n, so M sits inside End(phi) for free;
// the verdict is a semifield for every prime p != T.
ConstructionReport recipe_tau_n(const FieldTower* T, int n, const FPoly& prime);

// phi_T = tau^n and M = {u_0 + u_1 tau + ... + u_s tau^s : u_s = eta u_0}
// with s = deg(p).  The theorem hypothesis is
//   Nr_{k/F_q}(eta) * (-1)^{s(n-1)} * p(0) != 1;
// when it fails the run continues in exploration mode and the sweep decides.
ConstructionReport sheekey(const FieldTower* T, int n, int s, const FFElem& eta,
                           const FPoly& prime);

// phi_T = t + tau^r over F_{q^n}, n = lcm(r, s), t in F_{q^s}, and
// M = {a + b tau^s : a, b in F_{q^r}}.  Requires s < r and r != 2s.
// q_t := Nr_{F_{q^s}/F_q}(T - t) must be prime; when the given t fails,
// generators of F_{q^s} are scanned for a substitute and the swap is noted.
// `prime` must be a degree-2 prime with q_t mod prime outside F_q; omit it
// to scan degree-2 primes for the first one satisfying that condition.
ConstructionReport two_term(const FieldTower* T, int r, int s, const FFElem& t,
                            std::optional<FPoly> prime = std::nullopt);

// det of the motive action of u (an r x r matrix over k[T]) via the
// division-free characteristic polynomial.  u must be an endomorphism.
FPoly motive_det(const DrinfeldModule& phi, const SkewPoly& u);

// Closed form for the two-term family with r != 2s:
//   det U = Nr_{F_{q^r}/F_q}(a) + (-1)^{r-1} Nr_{F_{q^r}/F_q}(b) * q_t(T),
// returned over the degree-1 level.  a, b at tower level r, t at level s.
FPoly two_term_det_closed_form(const FieldTower* T, int r, int s,
                               const FFElem& t, const FFElem& a, const FFElem& b);

// Nr_{F_{q^s}/F_q}(T - t): the product of (T - t^{q^i}), coefficients
// projected to the degree-1 level.  Prime exactly when t generates F_{q^s}.
FPoly norm_of_T_minus(const FieldTower* T, const FFElem& t, int s);

// phi_T = sum_{i<=r} a_i tau^{l i} with a_i in F_{q^s}, a_r != 0, over
// F_{q^n}, n = lcm(l, s), and M = {sum_{i<=e} b_i tau^{s i} : b_i in F_{q^l}}
// with e = r*deg(p) - 1 (e_override >= 0 replaces it).  The module must be
// maximal in the sense deg(m_phi) = r * gcd(l, s); others are rejected.
// Hypotheses per prime: (1) the reduction of m_phi is irreducible over the
// residue field, (2) its constant term generates the residue field over F_q,
// (3) e * gcd(l, s) < deg(p) * deg(m_phi).  A failing (3) aborts the run;
// failing (1) or (2) switches to exploration mode.
ConstructionReport general_ls(const FieldTower* T, int l, int s, int r,
                              const std::vector<FFElem>& coeffs,
                              const FPoly& prime, int e_override = -1);

struct PrimeConditions {
    bool irreducible = false;   // reduction of m_phi irreducible over A/(p)
    bool generates = false;     // its constant term generates A/(p) over F_q
    bool inequality = false;    // e*g < deg(p) * deg(m_phi)

    bool all() const { return irreducible && generates && inequality; }
};

// Evaluates the three hypotheses above for one prime.  e and g are the
// message-space degree bound and gcd of the twist steps; callers with no
// message space in play leave them 0, which makes the inequality vacuous.
// Throws when prime equals the A-characteristic of phi.
PrimeConditions check_prime_conditions(const DrinfeldModule& phi, const FPoly& prime,
                                       long e = 0, long g = 0);

// All degree-d primes, in ascending index order, whose reduction of m_phi
// passes conditions (1) and (2).  The A-characteristic is skipped.  `budget`
// caps the number of passers collected (0 = no cap).  An empty result is a
// finding, not an error: the density bound behind the search is asymptotic.
std::vector<FPoly> prime_search(const DrinfeldModule& phi, int d, size_t budget = 0);

} // namespace dmcode

#endif
