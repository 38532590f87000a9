#ifndef DMCODE_TOWER_HPP
#define DMCODE_TOWER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dmcode/field.hpp"
#include "dmcode/fpoly.hpp"

namespace dmcode {

struct TowerConfig {
    int p = 2;
    int m = 1;
    uint64_t seed = 0;
    std::vector<int> degrees;          // requested levels, e.g. {1, 2, 3, 6}
};

// The lattice of fields F_{q^j} with chosen moduli and a compatible system of
// embeddings: embed(a->c) = embed(b->c) o embed(a->b) whenever a | b | c.
//
// Levels are created on first use.  A level's modulus is a pure function of
// (p, m, seed, j), so lazy creation is observationally immutable; a mutex
// guards the caches and instances are safe to share across threads.
//
// User-requested levels respect the desk-scale cap q^j <= 2^24.  Splitting
// fields of torsion spaces may legitimately exceed that cap; they are created
// through splitting_level() as relative extensions of a base level and are
// capped by F_q-dimension instead.
class FieldTower {
public:
    FieldTower(int p, int m, uint64_t seed = 0);
    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    const Fq& base() const { return *fq_; }
    uint64_t seed() const { return seed_; }
    int q() const { return fq_->q(); }

    const ExtField& level(int j) const;
    const ExtField* level_ptr(int j) const { return &level(j); }
    bool has_level(int j) const;
    int level_of(const ExtField* f) const;     // throws for foreign fields
    bool is_level(const ExtField* f) const;

    // Residue field A/p of a monic irreducible p in T over F_q (level-1
    // coefficients); cached per prime, pointer-stable.
    const ExtField& residue_field(const FPoly& prime) const;

    // Least level containing both operands' levels.
    int join(int a, int b) const;

    FFElem embed(const FFElem& x, int to_level) const;
    // Partial inverse of embed; throws if x is outside the subfield.
    FFElem project(const FFElem& x, int to_level) const;
    // Norm map F_{q^j} -> F_{q^c} for c | j (product of conjugates).
    FFElem norm_to(const FFElem& x, int to_level) const;
    FFElem frobenius(const FFElem& x, long i) const { return x.frobenius(i); }

    // Columns are the level-b coordinates of the images of the power basis
    // of level a.  Cached; coherent across the divisor lattice.
    const FqMat& embedding_matrix(int a, int b) const;

    // Level of dimension base_level * rel_degree, built relative to
    // base_level when too large for a direct modulus search.
    const ExtField& splitting_level(int base_level, int rel_degree) const;

    static constexpr int kDirectSearchMax = 64;   // largest direct-search degree
    static constexpr int kInternalDimMax = 1024;  // hard cap for any level

private:
    std::unique_ptr<Fq> fq_;
    uint64_t seed_;
    mutable std::recursive_mutex mu_;
    mutable std::map<int, std::unique_ptr<ExtField>> levels_;
    mutable std::map<const ExtField*, int> level_index_;
    mutable std::map<std::pair<int, int>, FqMat> embeds_;
    mutable std::map<int, int> relative_base_;
    mutable std::map<std::vector<ExtField::Vec>, std::unique_ptr<ExtField>> residues_;

    const ExtField& ensure_level(int j, bool internal) const;
    const FqMat& ensure_embedding(int a, int b) const;
    void build_relative(int base_level, int rel_degree) const;
};

// Validates the config (q <= 16, degrees within the desk cap, divisor-closure
// not required), creates all requested levels and the embeddings among them.
std::unique_ptr<FieldTower> build_tower(const TowerConfig& cfg);

} // namespace dmcode

#endif
