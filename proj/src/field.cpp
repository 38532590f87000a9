#include "dmcode/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmcode {

ExtField::ExtField(const Fq* base, Vec modulus, std::string name)
    : base_(base), mod_(std::move(modulus)), name_(std::move(name)) {
    if (mod_.size() < 2) throw std::invalid_argument("ExtField: modulus must have degree >= 1");
    deg_ = (int)mod_.size() - 1;
    if (mod_[deg_] != 1) throw std::invalid_argument("ExtField: modulus must be monic");
    for (uint8_t c : mod_)
        if (c >= base_->q()) throw std::invalid_argument("ExtField: modulus coefficient out of range");

    // reduction rows: z^{deg+i} mod h
    red_.reserve(deg_ > 1 ? deg_ - 1 : 0);
    Vec cur(deg_, 0);
    // z^deg = -(h - z^deg)
    for (int j = 0; j < deg_; ++j) cur[j] = base_->neg(mod_[j]);
    for (int i = 0; i + 1 < deg_; ++i) {
        red_.push_back(cur);
        // multiply by z
        Vec nxt(deg_, 0);
        uint8_t top = cur[deg_ - 1];
        for (int j = deg_ - 1; j > 0; --j) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (top)
            for (int j = 0; j < deg_; ++j)
                nxt[j] = base_->add(nxt[j], base_->mul(top, base_->neg(mod_[j])));
        cur = std::move(nxt);
    }
}

uint64_t ExtField::card() const {
    uint64_t c = 1;
    for (int i = 0; i < deg_; ++i) {
        if (c > (uint64_t)1 << 58) throw std::domain_error("ExtField: cardinality exceeds uint64 range");
        c *= (uint64_t)base_->q();
    }
    return c;
}

ExtField::Vec ExtField::one() const {
    Vec v(deg_, 0);
    v[0] = 1;
    return v;
}

ExtField::Vec ExtField::gen() const {
    Vec v(deg_, 0);
    if (deg_ == 1) {
        // z is congruent to -h_0 at degree 1
        v[0] = base_->neg(mod_[0]);
    } else {
        v[1] = 1;
    }
    return v;
}

ExtField::Vec ExtField::from_base(uint8_t c) const {
    Vec v(deg_, 0);
    v[0] = c;
    return v;
}

bool ExtField::is_zero(const Vec& v) const {
    for (uint8_t x : v)
        if (x) return false;
    return true;
}

bool ExtField::in_base(const Vec& v) const {
    for (int i = 1; i < deg_; ++i)
        if (v[i]) return false;
    return true;
}

uint8_t ExtField::to_base(const Vec& v) const {
    if (!in_base(v)) throw std::domain_error("ExtField: element not in base field");
    return v[0];
}

ExtField::Vec ExtField::add(const Vec& a, const Vec& b) const {
    Vec r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = base_->add(a[i], b[i]);
    return r;
}

ExtField::Vec ExtField::sub(const Vec& a, const Vec& b) const {
    Vec r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = base_->sub(a[i], b[i]);
    return r;
}

ExtField::Vec ExtField::neg(const Vec& a) const {
    Vec r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = base_->neg(a[i]);
    return r;
}

ExtField::Vec ExtField::scalar_mul(uint8_t c, const Vec& a) const {
    Vec r(deg_);
    const uint8_t* mrow = base_->mul_table() + (size_t)c * base_->q();
    for (int i = 0; i < deg_; ++i) r[i] = mrow[a[i]];
    return r;
}

ExtField::Vec ExtField::mul(const Vec& a, const Vec& b) const {
    const Fq& F = *base_;
    const int d = deg_;
    std::vector<uint8_t> acc(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (!a[i]) continue;
        const uint8_t* mrow = F.mul_table() + (size_t)a[i] * F.q();
        uint8_t* dst = acc.data() + i;
        for (int j = 0; j < d; ++j)
            if (b[j]) dst[j] = F.add(dst[j], mrow[b[j]]);
    }
    for (int t = 2 * d - 2; t >= d; --t) {
        uint8_t c = acc[t];
        if (!c) continue;
        const uint8_t* mrow = F.mul_table() + (size_t)c * F.q();
        const Vec& row = red_[t - d];
        for (int j = 0; j < d; ++j)
            if (row[j]) acc[j] = F.add(acc[j], mrow[row[j]]);
    }
    acc.resize(d);
    return acc;
}

ExtField::Vec ExtField::inv(const Vec& a) const {
    if (is_zero(a)) throw std::domain_error("ExtField: division by zero in " + name_);
    const Fq& F = *base_;
    // extended Euclid over F_q[z] on (modulus, a)
    auto degree_of = [](const Vec& v) {
        for (int i = (int)v.size() - 1; i >= 0; --i)
            if (v[i]) return i;
        return -1;
    };
    Vec r0 = mod_, r1 = a;
    while (!r1.empty() && degree_of(r1) < 0) throw std::domain_error("ExtField: zero inverse");
    Vec s0(1, 0), s1(1, 1);     // coefficients of a in the Bezout relation
    while (true) {
        int d1 = degree_of(r1);
        if (d1 == 0) break;
        if (d1 < 0) throw std::domain_error("ExtField: modulus not irreducible in " + name_);
        // r0 = q*r1 + r2
        Vec rem = r0;
        int d0 = degree_of(rem);
        Vec quo(std::max(0, d0 - d1 + 1), 0);
        uint8_t lead_inv = F.inv(r1[d1]);
        for (int i = d0; i >= d1; --i) {
            if (!rem[i]) continue;
            uint8_t f = F.mul(rem[i], lead_inv);
            quo[i - d1] = f;
            for (int j = 0; j <= d1; ++j)
                rem[i - d1 + j] = F.sub(rem[i - d1 + j], F.mul(f, r1[j]));
        }
        // s2 = s0 - q*s1
        Vec s2(std::max(s0.size(), quo.size() + s1.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < quo.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j)
                s2[i + j] = F.sub(s2[i + j], F.mul(quo[i], s1[j]));
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    // r1 is a nonzero constant: inverse = s1 / r1 reduced mod modulus
    uint8_t ci = F.inv(r1[0]);
    Vec out(deg_, 0);
    // s1 may have degree >= deg_ in pathological steps; reduce via mul with 1
    Vec s = s1;
    s.resize(std::max<size_t>(s.size(), deg_), 0);
    // fold down any excess coordinates using the reduction rows
    for (int t = (int)s.size() - 1; t >= deg_; --t) {
        uint8_t c = s[t];
        if (!c) continue;
        s[t] = 0;
        // z^t = z^{deg + (t-deg)}; t-deg may exceed the table, fold iteratively
        int e = t;
        Vec tmp(deg_, 0);
        tmp[0] = c;
        Vec zpow = gen();
        // multiply tmp by z e times (slow path, rare)
        for (int k = 0; k < e; ++k) tmp = mul(tmp, zpow);
        for (int j = 0; j < deg_; ++j) s[j] = F.add(s[j], tmp[j]);
    }
    for (int i = 0; i < deg_; ++i) out[i] = F.mul(ci, s[i]);
    return out;
}

ExtField::Vec ExtField::pow(const Vec& a, uint64_t e) const {
    Vec acc = one(), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

const FqMat& ExtField::frob_matrix(int i) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (frob_pow_.empty()) {
        // matrix of x -> x^q: columns are (z^j)^q = (z^q)^j
        FqMat M(base_, deg_, deg_);
        Vec zq = pow(gen(), (uint64_t)base_->q());
        Vec cur = one();
        for (int j = 0; j < deg_; ++j) {
            for (int i2 = 0; i2 < deg_; ++i2) M.at(i2, j) = cur[i2];
            if (j + 1 < deg_) cur = mul(cur, zq);
        }
        frob_pow_.push_back(FqMat::identity(base_, deg_));
        frob_pow_.push_back(std::move(M));
    }
    while ((int)frob_pow_.size() <= i)
        frob_pow_.push_back(mat_mul(frob_pow_[1], frob_pow_.back()));
    return frob_pow_[i];
}

ExtField::Vec ExtField::frobenius(const Vec& a, long i) const {
    long r = i % deg_;
    if (r < 0) r += deg_;
    if (r == 0) return a;
    return mat_vec(frob_matrix((int)r), a);
}

ExtField::Vec ExtField::from_index(uint64_t idx) const {
    Vec v(deg_, 0);
    for (int i = 0; i < deg_; ++i) {
        v[i] = (uint8_t)(idx % base_->q());
        idx /= base_->q();
    }
    if (idx) throw std::domain_error("ExtField: index out of range");
    return v;
}

uint64_t ExtField::to_index(const Vec& v) const {
    uint64_t idx = 0;
    for (int i = deg_ - 1; i >= 0; --i) idx = idx * base_->q() + v[i];
    return idx;
}

std::string ExtField::show(const Vec& v, const std::string& symbol) const {
    if (is_zero(v)) return "0";
    std::string s;
    for (int i = deg_ - 1; i >= 0; --i) {
        if (!v[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || v[i] != 1) s += std::to_string((int)v[i]);
        if (i > 0) {
            if (v[i] != 1) s += "*";
            s += symbol;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

void require_same_field(const FFElem& a, const FFElem& b, const char* op) {
    if (a.F == nullptr || b.F == nullptr) throw std::invalid_argument(std::string(op) + ": uninitialized element");
    if (a.F != b.F)
        throw std::invalid_argument(std::string(op) + ": field mismatch (" + a.F->name() + " vs " + b.F->name() + ")");
}

FFElem operator+(const FFElem& a, const FFElem& b) {
    require_same_field(a, b, "operator+");
    return {a.F, a.F->add(a.c, b.c)};
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    require_same_field(a, b, "operator-");
    return {a.F, a.F->sub(a.c, b.c)};
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    require_same_field(a, b, "operator*");
    return {a.F, a.F->mul(a.c, b.c)};
}

FFElem operator/(const FFElem& a, const FFElem& b) {
    require_same_field(a, b, "operator/");
    return {a.F, a.F->div(a.c, b.c)};
}

bool operator==(const FFElem& a, const FFElem& b) {
    return a.F == b.F && a.c == b.c;
}

FMat FMat::identity(const ExtField* f, int n) {
    FMat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

static void require_same_shape(const FMat& A, const FMat& B, const char* op) {
    if (A.F != B.F) throw std::invalid_argument(std::string(op) + ": field mismatch");
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

FMat fmat_add(const FMat& A, const FMat& B) {
    require_same_shape(A, B, "fmat_add");
    FMat C(A.F, A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->add(A.a[i], B.a[i]);
    return C;
}

FMat fmat_sub(const FMat& A, const FMat& B) {
    require_same_shape(A, B, "fmat_sub");
    FMat C(A.F, A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->sub(A.a[i], B.a[i]);
    return C;
}

FMat fmat_mul(const FMat& A, const FMat& B) {
    if (A.F != B.F) throw std::invalid_argument("fmat_mul: field mismatch");
    if (A.cols != B.rows) throw std::invalid_argument("fmat_mul: shape mismatch");
    FMat C(A.F, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const ExtField::Vec& x = A.at(i, k);
            if (A.F->is_zero(x)) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = A.F->add(C.at(i, j), A.F->mul(x, B.at(k, j)));
        }
    return C;
}

FMat fmat_smul(const FFElem& s, const FMat& A) {
    if (s.F != A.F) throw std::invalid_argument("fmat_smul: field mismatch");
    FMat C(A.F, A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->mul(s.c, A.a[i]);
    return C;
}

int fmat_rank(FMat A) {
    const ExtField* F = A.F;
    int r = 0;
    for (int j = 0; j < A.cols && r < A.rows; ++j) {
        int piv = -1;
        for (int i = r; i < A.rows; ++i)
            if (!F->is_zero(A.at(i, j))) { piv = i; break; }
        if (piv < 0) continue;
        for (int jj = 0; jj < A.cols; ++jj) std::swap(A.at(piv, jj), A.at(r, jj));
        ExtField::Vec t = F->inv(A.at(r, j));
        for (int jj = j; jj < A.cols; ++jj) A.at(r, jj) = F->mul(t, A.at(r, jj));
        for (int i = r + 1; i < A.rows; ++i) {
            if (F->is_zero(A.at(i, j))) continue;
            ExtField::Vec f = A.at(i, j);
            for (int jj = j; jj < A.cols; ++jj)
                A.at(i, jj) = F->sub(A.at(i, jj), F->mul(f, A.at(r, jj)));
        }
        ++r;
    }
    return r;
}

bool fmat_is_zero(const FMat& A) {
    for (const auto& v : A.a)
        if (!A.F->is_zero(v)) return false;
    return true;
}

FqMat fmat_expand(const FMat& A) {
    const ExtField* F = A.F;
    int d = F->degree();
    FqMat M(F->base_ptr(), A.rows * d, A.cols * d);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const ExtField::Vec& x = A.at(i, j);
            if (F->is_zero(x)) continue;
            // column c of the block is x * z^c in coordinates
            ExtField::Vec zc = F->one();
            for (int c = 0; c < d; ++c) {
                ExtField::Vec col = F->mul(x, zc);
                for (int rr = 0; rr < d; ++rr) M.at(i * d + rr, j * d + c) = col[rr];
                if (c + 1 < d) zc = F->mul(zc, F->gen());
            }
        }
    return M;
}

} // namespace dmcode
