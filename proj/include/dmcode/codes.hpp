#ifndef DMCODE_CODES_HPP
#define DMCODE_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmcode/drinfeld.hpp"
#include "dmcode/field.hpp"

namespace dmcode {

// Provenance of a code obtained as the torsion image of a message space of
// endomorphisms.  message[i] maps to basis[i] of the code.
struct CodeProvenance {
    DrinfeldModule phi;
    FPoly prime;
    std::vector<SkewPoly> message;
    std::string family;
};

// F_q-linear rank-metric code inside Mat_r(F_p), F_p a residue field A/(p):
// an F_q-basis of codeword matrices.  Independence of the basis is checked at
// construction, so dim() is the true F_q-dimension.
struct RankMetricCode {
    const ExtField* Fp = nullptr;
    int r = 0;
    std::vector<FMat> basis;
    std::optional<CodeProvenance> prov;

    RankMetricCode(const ExtField* fp, int r_, std::vector<FMat> basis_);

    int dim() const { return (int)basis.size(); }
    int d() const { return Fp->degree(); }
    int q() const { return Fp->base().q(); }
};

// Flat F_q-coordinates of a codeword matrix (row-major, each entry expanded
// into its d residue coordinates); the encoding used by all span queries.
std::vector<uint8_t> code_encode(const ExtField* Fp, int r, const FMat& A);
FMat code_decode(const ExtField* Fp, int r, const std::vector<uint8_t>& v);

// iota_p image of a message space of endomorphisms of ts.phi; keeps the
// provenance for cross-checks and reporting.
RankMetricCode code_from_message(const TorsionSpace& ts,
                                 const std::vector<SkewPoly>& message_basis,
                                 std::string family);

int rank_distance(const FMat& X, const FMat& Y);

// Exhaustive sweeps refuse to start when q^dim exceeds this cap.
// Default 2^24; override with the DMCODE_ENUM_BUDGET environment variable.
uint64_t enum_budget();

// Minimum rank over F_p of a nonzero codeword (= minimum rank distance, by
// linearity).  Exhaustive Gray-code enumeration; throws when over budget.
int min_distance(const RankMetricCode& C);

// Whether the code is closed under scalars from F_p (always true when d = 1).
bool is_fp_linear(const RankMetricCode& C);

// Singleton-type bound check.  F_p-linear codes are measured over F_p in
// Mat_r(F_p); codes that are only F_q-linear are expanded to Mat_{rd}(F_q)
// first, which multiplies ranks by d.
bool is_mrd(const RankMetricCode& C);

// True iff dim_{F_q} C = r * d and every nonzero codeword is invertible,
// i.e. the code is MRD with minimum distance r = matrix size.
bool is_semifield_code(const RankMetricCode& C);

// F_q-subspace of the ambient algebra Mat_r(F_p) produced by the nuclear
// computations, together with the outcome of verifying it is a field.
struct SubAlgebra {
    std::vector<FMat> basis;
    bool is_field = false;
    bool degenerate = false;   // any check failed or was skipped
    std::string note;          // reason when degenerate

    int dim() const { return (int)basis.size(); }
};

// I_l = {f : f C <= C},  I_r = {f : C f <= C},  Cent = {f : fc = cf for all c},
// Z = I_l intersect Cent; all solved as F_q-linear systems over the ambient
// matrix algebra.
SubAlgebra left_idealizer(const RankMetricCode& C);
SubAlgebra right_idealizer(const RankMetricCode& C);
SubAlgebra centralizer(const RankMetricCode& C);
SubAlgebra center(const RankMetricCode& C);

struct NuclearParams {
    int dim_code = 0;
    int dim_left = 0;
    int dim_right = 0;
    int dim_cent = 0;
    int dim_center = 0;
    bool invariant = false;    // input verified as a semifield code
    bool degenerate = false;   // some nuclear set failed its field check

    bool same_dims(const NuclearParams& o) const {
        return dim_code == o.dim_code && dim_left == o.dim_left &&
               dim_right == o.dim_right && dim_cent == o.dim_cent &&
               dim_center == o.dim_center;
    }
    std::string show() const;
};

// The five F_q-dimensions (dim C, dim I_l, dim I_r, dim Cent, dim Z).  For a
// non-semifield input the tuple is still computed but flagged non-invariant.
NuclearParams nuclear_parameters(const RankMetricCode& C);

} // namespace dmcode

#endif
