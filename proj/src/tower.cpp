#include "dmcode/tower.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dmcode/errors.hpp"

namespace dmcode {

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27; x *= 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// deterministic total order on coordinate vectors, most significant last
bool vec_less(const ExtField::Vec& a, const ExtField::Vec& b) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool cap_ok(int q, int j) {
    // q^j <= 2^24
    double lg = (double)j * std::log2((double)q);
    return lg <= 24.0 + 1e-9;
}

} // namespace

FieldTower::FieldTower(int p, int m, uint64_t seed) : fq_(std::make_unique<Fq>(p, m)), seed_(seed) {
    ensure_level(1, false);
}

const ExtField& FieldTower::ensure_level(int j, bool internal) const {
    if (j < 1) throw std::invalid_argument("FieldTower: level must be >= 1");
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = levels_.find(j);
    if (it != levels_.end()) return *it->second;
    if (j > kInternalDimMax)
        throw std::domain_error("FieldTower: level " + std::to_string(j) + " exceeds the dimension cap");
    if (!internal && !cap_ok(fq_->q(), j))
        throw std::domain_error("FieldTower: level " + std::to_string(j) +
                                " exceeds the desk-scale cap q^j <= 2^24");

    std::vector<uint8_t> mod;
    if (j == 1) {
        mod = {0, 1};                                       // z itself
    } else if (j <= kDirectSearchMax) {
        const ExtField& L1 = ensure_level(1, false);
        FPoly f = lex_first_irreducible(&L1, j, seed_);
        mod.resize(j + 1);
        for (int i = 0; i <= j; ++i) mod[i] = f.coeff(i).c[0];
    } else {
        throw std::domain_error("FieldTower: level " + std::to_string(j) +
                                " must be created through splitting_level()");
    }
    auto field = std::make_unique<ExtField>(
        fq_.get(), std::move(mod), fq_->label() + "^" + std::to_string(j));
    const ExtField* ptr = field.get();
    levels_.emplace(j, std::move(field));
    level_index_[ptr] = j;
    return *ptr;
}

const ExtField& FieldTower::level(int j) const { return ensure_level(j, false); }

bool FieldTower::has_level(int j) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return levels_.count(j) > 0;
}

int FieldTower::level_of(const ExtField* f) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = level_index_.find(f);
    if (it == level_index_.end())
        throw std::invalid_argument("FieldTower: field " + f->name() + " is not a level of this tower");
    return it->second;
}

bool FieldTower::is_level(const ExtField* f) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return level_index_.count(f) > 0;
}

const ExtField& FieldTower::residue_field(const FPoly& prime) const {
    if (prime.F->degree() != 1 || prime.F->base_ptr() != fq_.get())
        throw std::invalid_argument("residue_field: prime must have level-1 coefficients of this tower");
    if (!prime.is_monic()) throw std::invalid_argument("residue_field: prime must be monic");
    if (!fpoly_is_irreducible(prime)) throw std::invalid_argument("residue_field: modulus is not irreducible");
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = residues_.find(prime.c);
    if (it != residues_.end()) return *it->second;
    std::vector<uint8_t> mod(prime.degree() + 1);
    for (int i = 0; i <= prime.degree(); ++i) mod[i] = prime.c[i][0];
    auto field = std::make_unique<ExtField>(
        fq_.get(), std::move(mod),
        fq_->label() + "[T]/(" + prime.show("T") + ")");
    const ExtField* ptr = field.get();
    residues_.emplace(prime.c, std::move(field));
    return *ptr;
}

int FieldTower::join(int a, int b) const { return (int)std::lcm(a, b); }

const FqMat& FieldTower::ensure_embedding(int a, int b) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (b % a != 0) throw std::invalid_argument("embedding: source level must divide target level");
    auto key = std::make_pair(a, b);
    auto it = embeds_.find(key);
    if (it != embeds_.end()) return it->second;

    const ExtField& A = *levels_.at(a);
    const ExtField& B = *levels_.at(b);

    if (a == b)
        return embeds_.emplace(key, FqMat::identity(fq_.get(), a)).first->second;

    // Relative levels only accept embeddings through their base.
    auto rb = relative_base_.find(b);
    if (rb != relative_base_.end() && a != rb->second) {
        int base_lvl = rb->second;
        if (base_lvl % a != 0)
            throw std::invalid_argument("embedding: level " + std::to_string(a) +
                                        " does not divide the relative base " + std::to_string(base_lvl));
        const FqMat& up = ensure_embedding(base_lvl, b);
        const FqMat& lo = ensure_embedding(a, base_lvl);
        return embeds_.emplace(key, mat_mul(up, lo)).first->second;
    }

    // Coherence: fix embeddings from every existing proper divisor level of a
    // first, then choose among the roots of modulus_a in B the least one
    // agreeing with them.
    std::vector<int> subs;
    for (int g = 2; g < a; ++g)
        if (a % g == 0 && levels_.count(g)) subs.push_back(g);
    for (int g : subs) {
        ensure_embedding(g, a);
        ensure_embedding(g, b);
    }

    FPoly ma(&B);
    ma.c.reserve(a + 1);
    for (uint8_t cc : A.modulus()) ma.c.push_back(B.from_base(cc));
    ma.normalize();
    std::vector<FFElem> roots = fpoly_roots(ma, mix(seed_, (uint64_t)a * 131 + b));
    if ((int)roots.size() != a)
        throw std::logic_error("embedding: expected a full set of conjugate roots");

    auto apply_candidate = [&](const FFElem& rho, const ExtField::Vec& x) {
        // image of the level-a element with coords x under gen_a -> rho
        ExtField::Vec acc = B.zero();
        ExtField::Vec pw = B.one();
        for (int i = 0; i < a; ++i) {
            if (x[i]) acc = B.add(acc, B.scalar_mul(x[i], pw));
            if (i + 1 < a) pw = B.mul(pw, rho.c);
        }
        return acc;
    };

    const FFElem* chosen = nullptr;
    for (const FFElem& rho : roots) {
        bool ok = true;
        for (int g : subs) {
            const FqMat& ga = embeds_.at({g, a});
            const FqMat& gb = embeds_.at({g, b});
            ExtField::Vec gen_g = levels_.at(g)->gen();
            ExtField::Vec in_a = mat_vec(ga, gen_g);
            ExtField::Vec via_b = mat_vec(gb, gen_g);
            if (apply_candidate(rho, in_a) != via_b) { ok = false; break; }
        }
        if (!ok) continue;
        if (!chosen || vec_less(rho.c, chosen->c)) chosen = &rho;
    }
    if (!chosen) throw std::logic_error("embedding: no coherent root (tower state corrupted)");

    FqMat M(fq_.get(), b, a);
    ExtField::Vec pw = B.one();
    for (int i = 0; i < a; ++i) {
        for (int r = 0; r < b; ++r) M.at(r, i) = pw[r];
        if (i + 1 < a) pw = B.mul(pw, chosen->c);
    }
    return embeds_.emplace(key, std::move(M)).first->second;
}

const FqMat& FieldTower::embedding_matrix(int a, int b) const {
    ensure_level(a, true);
    ensure_level(b, true);
    return ensure_embedding(a, b);
}

FFElem FieldTower::embed(const FFElem& x, int to) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    int from = level_of(x.F);
    if (from == to) return x;
    if (to % from != 0)
        throw std::invalid_argument("embed: level " + std::to_string(from) +
                                    " is not a subfield of level " + std::to_string(to));
    const FqMat& M = embedding_matrix(from, to);
    return {levels_.at(to).get(), mat_vec(M, x.c)};
}

FFElem FieldTower::project(const FFElem& x, int to) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    int from = level_of(x.F);
    if (from == to) return x;
    if (from % to != 0)
        throw std::invalid_argument("project: target level must divide the source level");
    const FqMat& M = embedding_matrix(to, from);
    auto y = solve(M, x.c);
    if (!y) throw std::domain_error("project: element lies outside the target subfield");
    return {levels_.at(to).get(), *y};
}

FFElem FieldTower::norm_to(const FFElem& x, int to) const {
    int from = level_of(x.F);
    if (from % to != 0) throw std::invalid_argument("norm_to: target level must divide the source level");
    const ExtField& E = *x.F;
    ExtField::Vec acc = E.one();
    for (int i = 0; i < from / to; ++i)
        acc = E.mul(acc, E.frobenius(x.c, (long)i * to));
    return project({x.F, acc}, to);
}

void FieldTower::build_relative(int base_level, int rel_degree) const {
    const int N = base_level * rel_degree;
    const ExtField& K = *levels_.at(base_level);
    const int n = base_level, e = rel_degree;

    FPoly h = random_irreducible(&K, e, mix(seed_, 0x9e1aULL ^ (uint64_t)N));

    // flatten K[w]/(h) to a degree-N ExtField over F_q via a primitive
    // generator's minimal polynomial
    auto flat = [&](const FPoly& v) {
        ExtField::Vec out((size_t)N, 0);
        for (int i = 0; i < e; ++i) {
            FFElem ci = v.coeff(i);
            for (int j = 0; j < n; ++j) out[(size_t)i * n + j] = ci.c[j];
        }
        return out;
    };

    FPoly w = FPoly::x(&K);
    // One of the q^n candidates w + c is always a primitive generator.
    double klg = (double)n * std::log2((double)fq_->q());
    uint64_t kcard = klg > 24 ? ((uint64_t)1 << 24) : [&] {
        uint64_t t = 1;
        for (int i = 0; i < n; ++i) t *= (uint64_t)fq_->q();
        return t;
    }();
    for (uint64_t cand = 0;; ++cand) {
        if (cand >= kcard) throw std::logic_error("splitting_level: no primitive generator found");
        // gamma = w + c, c running over K in index order
        FPoly gamma = fpoly_mod(w + FPoly::constant(FFElem{&K, K.from_index(cand)}), h);
        RowReducer rr(fq_.get(), N);
        std::vector<FPoly> pows;
        FPoly cur = FPoly::one(&K);
        bool primitive = true;
        ExtField::Vec dep;
        for (int t = 0; t <= N; ++t) {
            if (!rr.add(flat(cur))) {
                if (t < N) primitive = false;
                dep = flat(cur);
                break;
            }
            pows.push_back(cur);
            cur = fpoly_mod(cur * gamma, h);
        }
        if (!primitive) continue;

        auto comb = rr.express(dep);
        std::vector<uint8_t> modulus(N + 1, 0);
        for (int i = 0; i < N; ++i) modulus[i] = fq_->neg((*comb)[i]);
        modulus[N] = 1;
        auto field = std::make_unique<ExtField>(
            fq_.get(), std::move(modulus),
            fq_->label() + "^" + std::to_string(N));
        const ExtField* ptr = field.get();

        // embedding base_level -> N: solve G y = flat(theta^i) where G's
        // columns are the flattened powers of gamma
        FqMat G(fq_.get(), N, N);
        for (int cidx = 0; cidx < N; ++cidx) {
            ExtField::Vec fc = flat(pows[cidx]);
            for (int r = 0; r < N; ++r) G.at(r, cidx) = fc[r];
        }
        FqMat Gi(fq_.get(), N, 2 * N);     // invert G once
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) Gi.at(i, j) = G.at(i, j);
            Gi.at(i, N + i) = 1;
        }
        rref(Gi);
        FqMat Ginv(fq_.get(), N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) Ginv.at(i, j) = Gi.at(i, N + j);

        FqMat M(fq_.get(), N, n);
        FFElem theta{&K, K.gen()};
        FPoly tpow = FPoly::one(&K);
        for (int i = 0; i < n; ++i) {
            ExtField::Vec nc = mat_vec(Ginv, flat(tpow));
            for (int r = 0; r < N; ++r) M.at(r, i) = nc[r];
            if (i + 1 < n) tpow = fpoly_mod(tpow * FPoly::constant(theta), h);
        }

        levels_.emplace(N, std::move(field));
        level_index_[ptr] = N;
        relative_base_[N] = n;
        embeds_.emplace(std::make_pair(n, N), std::move(M));
        return;
    }
}

const ExtField& FieldTower::splitting_level(int base_level, int rel_degree) const {
    if (rel_degree < 1) throw std::invalid_argument("splitting_level: relative degree must be >= 1");
    std::lock_guard<std::recursive_mutex> lk(mu_);
    ensure_level(base_level, true);
    const int N = base_level * rel_degree;
    if (N > kInternalDimMax)
        throw SplittingLevelNotFound("splitting_level: dimension " + std::to_string(N) +
                                     " exceeds the internal cap " + std::to_string(kInternalDimMax));
    if (levels_.count(N)) return *levels_.at(N);
    if (N <= kDirectSearchMax) return ensure_level(N, true);
    build_relative(base_level, rel_degree);
    return *levels_.at(N);
}

std::unique_ptr<FieldTower> build_tower(const TowerConfig& cfg) {
    auto tower = std::make_unique<FieldTower>(cfg.p, cfg.m, cfg.seed);
    // Divisor closure, ascending: every level exists before any embedding
    // between its multiples is fixed, so each triangle g | a | b is captured
    // by the constraints at fix time.
    std::vector<int> degs;
    for (int d : cfg.degrees) {
        if (d < 1) throw std::invalid_argument("build_tower: degrees must be >= 1");
        for (int g = 1; g <= d; ++g)
            if (d % g == 0) degs.push_back(g);
    }
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int j : degs) tower->level(j);
    for (size_t i = 0; i < degs.size(); ++i)
        for (size_t j = i + 1; j < degs.size(); ++j)
            if (degs[j] % degs[i] == 0) tower->embedding_matrix(degs[i], degs[j]);
    return tower;
}

} // namespace dmcode
