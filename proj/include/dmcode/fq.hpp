#ifndef DMCODE_FQ_HPP
#define DMCODE_FQ_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dmcode {

// The base coefficient field F_q, q = p^m <= 16, with full arithmetic tables.
//
// Elements are integer indices in [0, q).  For m = 1 the index is the residue
// itself; for m > 1 the index encodes the coordinate vector of the element in
// the power basis of F_p[y]/(g), least significant digit first, where g is the
// lexicographically first monic irreducible of degree m over F_p.  Index
// arithmetic therefore makes F_p-scalars 0..p-1 the prime subfield.
//
// Instances are immutable after construction and are identified by address:
// every extension field and polynomial in this library keeps a pointer to the
// Fq it is defined over.
class Fq {
public:
    Fq(int p, int m);
    Fq(const Fq&) = delete;
    Fq& operator=(const Fq&) = delete;

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<uint8_t>& base_modulus() const { return g_; }
    std::string label() const;

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;        // throws on a == 0
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    uint8_t pow(uint8_t a, uint64_t e) const;
    uint8_t minus_one() const { return neg_[1]; }

    // p-th root; x -> x^p is an automorphism of F_q, so the root is unique.
    uint8_t proot(uint8_t a) const { return proot_[a]; }

    uint8_t from_int(long v) const;      // reduces an integer into F_p <= F_q
    bool in_prime_subfield(uint8_t a) const { return a < (uint8_t)p_; }

    // Raw table pointers for inner loops.
    const uint8_t* add_table() const { return add_.data(); }
    const uint8_t* mul_table() const { return mul_.data(); }

private:
    int p_, m_, q_;
    std::vector<uint8_t> g_;             // modulus of F_q over F_p (m+1 coeffs)
    std::vector<uint8_t> add_, mul_, neg_, inv_, proot_;
};

} // namespace dmcode

#endif
