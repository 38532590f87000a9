#ifndef DMCODE_LINALG_HPP
#define DMCODE_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dmcode/fq.hpp"

namespace dmcode {

// Dense row-major matrix over the base field F_q.  All elimination in the
// library bottoms out here: torsion kernels, embedding solves, code spans and
// nuclear-parameter systems all reduce to F_q coordinate matrices.
struct FqMat {
    const Fq* F = nullptr;
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    FqMat() = default;
    FqMat(const Fq* f, int r, int c) : F(f), rows(r), cols(c), a((size_t)r * c, 0) {}

    uint8_t& at(int i, int j) { return a[(size_t)i * cols + j]; }
    uint8_t at(int i, int j) const { return a[(size_t)i * cols + j]; }
    uint8_t* row(int i) { return a.data() + (size_t)i * cols; }
    const uint8_t* row(int i) const { return a.data() + (size_t)i * cols; }

    static FqMat identity(const Fq* f, int n);
    FqMat transposed() const;
    bool operator==(const FqMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

FqMat mat_mul(const FqMat& A, const FqMat& B);
std::vector<uint8_t> mat_vec(const FqMat& A, const std::vector<uint8_t>& x);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(FqMat& A);
int rank(FqMat A);

// Rows of the result form a basis of the right kernel {x : A x = 0}.
FqMat kernel_basis(const FqMat& A);

// One solution of A x = b, if consistent.
std::optional<std::vector<uint8_t>> solve(const FqMat& A, const std::vector<uint8_t>& b);

// Incremental row-space tracker.  Rows are added one at a time; the reducer
// answers membership queries and expresses members as combinations of the
// original rows in insertion order.
class RowReducer {
public:
    RowReducer(const Fq* F, int cols) : F_(F), cols_(cols) {}

    // Returns true if the row enlarged the span.
    bool add(const std::vector<uint8_t>& row);
    int dim() const { return (int)ech_.size(); }
    int cols() const { return cols_; }

    // Residual of v after reduction against the span; zero iff v is a member.
    std::vector<uint8_t> reduce(const std::vector<uint8_t>& v) const;
    bool contains(const std::vector<uint8_t>& v) const;

    // Coefficients c (over the original added rows, length = number of added
    // rows) with sum_i c_i row_i = v, if v lies in the span.
    std::optional<std::vector<uint8_t>> express(const std::vector<uint8_t>& v) const;

    // Echelon basis of the span (for iteration).
    const std::vector<std::vector<uint8_t>>& echelon_rows() const { return ech_; }

private:
    const Fq* F_;
    int cols_;
    int added_ = 0;
    std::vector<std::vector<uint8_t>> ech_;    // echelon rows, unit pivots
    std::vector<std::vector<uint8_t>> comb_;   // expression of ech_ rows in originals
    std::vector<int> pivot_;                   // pivot column of each echelon row
};

} // namespace dmcode

#endif
