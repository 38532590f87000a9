#include "dmcode/linalg.hpp"

#include <stdexcept>

namespace dmcode {

FqMat FqMat::identity(const Fq* f, int n) {
    FqMat I(f, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

FqMat FqMat::transposed() const {
    FqMat T(F, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

FqMat mat_mul(const FqMat& A, const FqMat& B) {
    if (A.cols != B.rows || A.F != B.F) throw std::invalid_argument("mat_mul: shape/field mismatch");
    const Fq& F = *A.F;
    FqMat C(A.F, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            uint8_t aik = A.at(i, k);
            if (!aik) continue;
            const uint8_t* mrow = F.mul_table() + (size_t)aik * F.q();
            const uint8_t* brow = B.row(k);
            uint8_t* crow = C.row(i);
            for (int j = 0; j < B.cols; ++j)
                crow[j] = F.add(crow[j], mrow[brow[j]]);
        }
    return C;
}

std::vector<uint8_t> mat_vec(const FqMat& A, const std::vector<uint8_t>& x) {
    if ((int)x.size() != A.cols) throw std::invalid_argument("mat_vec: size mismatch");
    const Fq& F = *A.F;
    std::vector<uint8_t> y(A.rows, 0);
    for (int i = 0; i < A.rows; ++i) {
        const uint8_t* arow = A.row(i);
        uint8_t acc = 0;
        for (int j = 0; j < A.cols; ++j)
            if (arow[j] && x[j]) acc = F.add(acc, F.mul(arow[j], x[j]));
        y[i] = acc;
    }
    return y;
}

std::vector<int> rref(FqMat& A) {
    const Fq& F = *A.F;
    const int q = F.q();
    const uint8_t* mul = F.mul_table();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int sel = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c)) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
        uint8_t iv = F.inv(A.at(r, c));
        if (iv != 1) {
            const uint8_t* mrow = mul + (size_t)iv * q;
            uint8_t* rr = A.row(r);
            for (int j = c; j < A.cols; ++j) rr[j] = mrow[rr[j]];
        }
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            uint8_t f = A.at(i, c);
            if (!f) continue;
            const uint8_t* mrow = mul + (size_t)f * q;
            uint8_t* ri = A.row(i);
            const uint8_t* rr = A.row(r);
            for (int j = c; j < A.cols; ++j)
                ri[j] = F.sub(ri[j], mrow[rr[j]]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(FqMat A) { return (int)rref(A).size(); }

FqMat kernel_basis(const FqMat& A) {
    FqMat R = A;
    std::vector<int> piv = rref(R);
    std::vector<int> is_piv(A.cols, -1);
    for (int i = 0; i < (int)piv.size(); ++i) is_piv[piv[i]] = i;
    int freecnt = A.cols - (int)piv.size();
    FqMat K(A.F, freecnt, A.cols);
    int kr = 0;
    for (int c = 0; c < A.cols; ++c) {
        if (is_piv[c] >= 0) continue;
        K.at(kr, c) = 1;
        for (int i = 0; i < (int)piv.size(); ++i)
            K.at(kr, piv[i]) = A.F->neg(R.at(i, c));
        ++kr;
    }
    return K;
}

std::optional<std::vector<uint8_t>> solve(const FqMat& A, const std::vector<uint8_t>& b) {
    if ((int)b.size() != A.rows) throw std::invalid_argument("solve: size mismatch");
    FqMat Ab(A.F, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) Ab.at(i, j) = A.at(i, j);
        Ab.at(i, A.cols) = b[i];
    }
    std::vector<int> piv = rref(Ab);
    for (int c : piv)
        if (c == A.cols) return std::nullopt;     // inconsistent
    std::vector<uint8_t> x(A.cols, 0);
    for (int i = 0; i < (int)piv.size(); ++i) x[piv[i]] = Ab.at(i, A.cols);
    return x;
}

bool RowReducer::add(const std::vector<uint8_t>& row) {
    if ((int)row.size() != cols_) throw std::invalid_argument("RowReducer: size mismatch");
    const Fq& F = *F_;
    std::vector<uint8_t> v = row;
    std::vector<uint8_t> c(added_ + 1, 0);
    c[added_] = 1;
    ++added_;
    for (auto& cc : comb_) cc.resize(added_, 0);
    for (size_t i = 0; i < ech_.size(); ++i) {
        uint8_t f = v[pivot_[i]];
        if (!f) continue;
        for (int j = 0; j < cols_; ++j) v[j] = F.sub(v[j], F.mul(f, ech_[i][j]));
        for (int j = 0; j < added_; ++j) c[j] = F.sub(c[j], F.mul(f, comb_[i][j]));
    }
    int pc = -1;
    for (int j = 0; j < cols_; ++j)
        if (v[j]) { pc = j; break; }
    if (pc < 0) return false;
    uint8_t iv = F.inv(v[pc]);
    for (int j = 0; j < cols_; ++j) v[j] = F.mul(iv, v[j]);
    for (int j = 0; j < added_; ++j) c[j] = F.mul(iv, c[j]);
    // keep earlier pivots clear of the new pivot column
    for (size_t i = 0; i < ech_.size(); ++i) {
        uint8_t f = ech_[i][pc];
        if (!f) continue;
        for (int j = 0; j < cols_; ++j) ech_[i][j] = F.sub(ech_[i][j], F.mul(f, v[j]));
        for (int j = 0; j < added_; ++j) comb_[i][j] = F.sub(comb_[i][j], F.mul(f, c[j]));
    }
    ech_.push_back(std::move(v));
    comb_.push_back(std::move(c));
    pivot_.push_back(pc);
    return true;
}

std::vector<uint8_t> RowReducer::reduce(const std::vector<uint8_t>& v0) const {
    if ((int)v0.size() != cols_) throw std::invalid_argument("RowReducer: size mismatch");
    const Fq& F = *F_;
    std::vector<uint8_t> v = v0;
    for (size_t i = 0; i < ech_.size(); ++i) {
        uint8_t f = v[pivot_[i]];
        if (!f) continue;
        for (int j = 0; j < cols_; ++j) v[j] = F.sub(v[j], F.mul(f, ech_[i][j]));
    }
    return v;
}

bool RowReducer::contains(const std::vector<uint8_t>& v) const {
    for (uint8_t x : reduce(v))
        if (x) return false;
    return true;
}

std::optional<std::vector<uint8_t>> RowReducer::express(const std::vector<uint8_t>& v0) const {
    const Fq& F = *F_;
    std::vector<uint8_t> v = v0;
    std::vector<uint8_t> c(added_, 0);
    for (size_t i = 0; i < ech_.size(); ++i) {
        uint8_t f = v[pivot_[i]];
        if (!f) continue;
        for (int j = 0; j < cols_; ++j) v[j] = F.sub(v[j], F.mul(f, ech_[i][j]));
        for (int j = 0; j < added_; ++j) c[j] = F.add(c[j], F.mul(f, comb_[i][j]));
    }
    for (uint8_t x : v)
        if (x) return std::nullopt;
    return c;
}

} // namespace dmcode
