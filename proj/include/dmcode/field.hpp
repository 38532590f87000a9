#ifndef DMCODE_FIELD_HPP
#define DMCODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dmcode/fq.hpp"
#include "dmcode/linalg.hpp"

namespace dmcode {

// A finite extension F_q[z]/(h) of the base field, h monic irreducible of
// degree d over F_q.  Serves two roles with identical arithmetic: tower
// levels F_{q^j} (h chosen by the tower) and residue fields A/p (h = p in the
// variable T).
//
// Elements are coordinate vectors of length d over F_q in the power basis of
// z, least significant coordinate first.  Fields are identified by address;
// element operations require both operands to belong to the same instance.
class ExtField {
public:
    using Vec = std::vector<uint8_t>;

    ExtField(const Fq* base, Vec modulus, std::string name);
    ExtField(const ExtField&) = delete;
    ExtField& operator=(const ExtField&) = delete;

    const Fq& base() const { return *base_; }
    const Fq* base_ptr() const { return base_; }
    int degree() const { return deg_; }
    const Vec& modulus() const { return mod_; }
    const std::string& name() const { return name_; }

    // |F| = q^degree as uint64; throws if it does not fit.
    uint64_t card() const;

    Vec zero() const { return Vec(deg_, 0); }
    Vec one() const;
    Vec gen() const;                       // residue of z
    Vec from_base(uint8_t c) const;
    bool is_zero(const Vec& v) const;
    bool in_base(const Vec& v) const;      // lies in F_q  (coords 1.. vanish)
    uint8_t to_base(const Vec& v) const;

    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec neg(const Vec& a) const;
    Vec mul(const Vec& a, const Vec& b) const;
    Vec scalar_mul(uint8_t c, const Vec& a) const;
    Vec inv(const Vec& a) const;           // throws on zero
    Vec div(const Vec& a, const Vec& b) const { return mul(a, inv(b)); }
    Vec pow(const Vec& a, uint64_t e) const;

    // x -> x^{q^i}; i may be negative (reduced mod degree).
    Vec frobenius(const Vec& a, long i) const;
    // Matrix of x -> x^{q^i} on coordinates, 0 <= i < deg.
    const FqMat& frob_matrix(int i) const;

    // Index enumeration for exhaustive sweeps: index = sum c_i q^i.
    Vec from_index(uint64_t idx) const;
    uint64_t to_index(const Vec& v) const;

    std::string show(const Vec& v, const std::string& symbol) const;

private:
    const Fq* base_;
    int deg_;
    Vec mod_;
    std::string name_;
    std::vector<Vec> red_;                 // z^{deg+i} mod h,  i = 0..deg-2
    mutable std::mutex mu_;
    mutable std::vector<FqMat> frob_pow_;  // frob_pow_[i] = matrix of x -> x^{q^i}
};

// Value-semantic element of an ExtField.
struct FFElem {
    const ExtField* F = nullptr;
    ExtField::Vec c;

    FFElem() = default;
    FFElem(const ExtField* f, ExtField::Vec v) : F(f), c(std::move(v)) {}

    bool is_zero() const { return F == nullptr || F->is_zero(c); }
    FFElem frobenius(long i) const { return {F, F->frobenius(c, i)}; }
    FFElem inv() const { return {F, F->inv(c)}; }
    FFElem pow(uint64_t e) const { return {F, F->pow(c, e)}; }
    std::string show(const std::string& symbol = "a") const { return F->show(c, symbol); }

    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    friend FFElem operator/(const FFElem& a, const FFElem& b);
    FFElem operator-() const { return {F, F->neg(c)}; }
    friend bool operator==(const FFElem& a, const FFElem& b);
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }
};

void require_same_field(const FFElem& a, const FFElem& b, const char* op);

// Dense row-major matrix over an ExtField (torsion representations live in
// Mat_r(F_p), codewords are these).  Elimination is done directly over the
// field; for F_q-linear-algebra questions expand to FqMat coordinates first.
struct FMat {
    const ExtField* F = nullptr;
    int rows = 0, cols = 0;
    std::vector<ExtField::Vec> a;

    FMat() = default;
    FMat(const ExtField* f, int r, int c)
        : F(f), rows(r), cols(c), a((size_t)r * c, f->zero()) {}

    ExtField::Vec& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const ExtField::Vec& at(int i, int j) const { return a[(size_t)i * cols + j]; }
    FFElem elem(int i, int j) const { return {F, at(i, j)}; }

    static FMat identity(const ExtField* f, int n);
    bool operator==(const FMat& o) const {
        return F == o.F && rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const FMat& o) const { return !(*this == o); }
};

FMat fmat_add(const FMat& A, const FMat& B);
FMat fmat_sub(const FMat& A, const FMat& B);
FMat fmat_mul(const FMat& A, const FMat& B);
FMat fmat_smul(const FFElem& s, const FMat& A);
int fmat_rank(FMat A);
bool fmat_is_zero(const FMat& A);

// Coordinates of A over the base field: each entry becomes a d x d block
// (column-convention: the block is the matrix of multiplication-by-entry
// composed with the coordinate identification).  rank_Fq = d * rank_F.
FqMat fmat_expand(const FMat& A);

} // namespace dmcode

#endif
