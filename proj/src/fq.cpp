#include "dmcode/fq.hpp"

#include <array>
#include <stdexcept>

namespace dmcode {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// F_p[y] helpers on digit vectors (little-endian, no trailing zeros), used
// only while building the base-field tables.
using PPoly = std::vector<uint8_t>;

PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& g, int p) {
    std::vector<int> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + a[i] * b[j]) % p;
    // reduce by monic g
    int dg = (int)g.size() - 1;
    for (int i = (int)acc.size() - 1; i >= dg; --i) {
        int c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (int j = 0; j < dg; ++j)
            acc[i - dg + j] = ((acc[i - dg + j] - c * g[j]) % p + p * p) % p;
    }
    PPoly r(dg, 0);
    for (int i = 0; i < dg && i < (int)acc.size(); ++i) r[i] = (uint8_t)acc[i];
    return r;
}

// Irreducibility by trial division; degrees here are at most 4.
bool ppoly_irreducible(const PPoly& f, int p) {
    int df = (int)f.size() - 1;
    if (df < 1) return false;
    if (df == 1) return true;
    // trial divisors: all monic of degree 1..df/2
    for (int dd = 1; 2 * dd <= df; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            PPoly d(dd + 1, 0);
            long v = idx;
            for (int i = 0; i < dd; ++i) { d[i] = (uint8_t)(v % p); v /= p; }
            d[dd] = 1;
            // long division remainder check
            std::vector<int> rem(f.begin(), f.end());
            for (int i = df; i >= dd; --i) {
                int c = rem[i];
                if (c == 0) continue;
                for (int j = 0; j <= dd; ++j)
                    rem[i - dd + j] = ((rem[i - dd + j] - c * d[j]) % p + p * p) % p;
            }
            bool zero = true;
            for (int i = 0; i < dd; ++i)
                if (rem[i] != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

Fq::Fq(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("Fq: p must be prime");
    if (m < 1) throw std::invalid_argument("Fq: m must be positive");
    long q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    if (q > 16) throw std::invalid_argument("Fq: q = p^m must be <= 16");
    q_ = (int)q;

    // modulus of F_q over F_p: lexicographically first monic irreducible
    if (m == 1) {
        g_ = {0, 1};                      // y, unused by arithmetic
    } else {
        long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        bool found = false;
        for (long idx = 0; idx < count && !found; ++idx) {
            PPoly f(m + 1, 0);
            long v = idx;
            for (int i = 0; i < m; ++i) { f[i] = (uint8_t)(v % p); v /= p; }
            f[m] = 1;
            if (ppoly_irreducible(f, p)) { g_ = f; found = true; }
        }
        if (!found) throw std::logic_error("Fq: no irreducible modulus found");
    }

    // digit decomposition of an index
    auto digits = [&](int a) {
        std::array<uint8_t, 8> d{};
        for (int i = 0; i < m_; ++i) { d[i] = (uint8_t)(a % p_); a /= p_; }
        return d;
    };
    auto index = [&](const PPoly& v) {
        int a = 0;
        for (int i = m_ - 1; i >= 0; --i) a = a * p_ + (i < (int)v.size() ? v[i] : 0);
        return (uint8_t)a;
    };

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    proot_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto da = digits(a);
        int na = 0;
        for (int i = m_ - 1; i >= 0; --i) na = na * p_ + (p_ - da[i]) % p_;
        neg_[a] = (uint8_t)na;
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b);
            int s = 0;
            for (int i = m_ - 1; i >= 0; --i) s = s * p_ + (da[i] + db[i]) % p_;
            add_[a * q_ + b] = (uint8_t)s;
            if (m_ == 1) {
                mul_[a * q_ + b] = (uint8_t)((a * b) % p_);
            } else {
                PPoly va(da.begin(), da.begin() + m_), vb(db.begin(), db.begin() + m_);
                mul_[a * q_ + b] = index(ppoly_mulmod(va, vb, g_, p_));
            }
        }
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = (uint8_t)b; break; }
        if (inv_[a] == 0) throw std::logic_error("Fq: table construction failed");
    }
    // x -> x^p is a bijection; invert it by exhaustion
    for (int a = 0; a < q_; ++a) {
        uint8_t ap = (uint8_t)a;
        for (int i = 1; i < p_; ++i) ap = mul_[ap * q_ + a];   // a^p
        proot_[ap] = (uint8_t)a;
    }
}

uint8_t Fq::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("Fq: division by zero");
    return inv_[a];
}

uint8_t Fq::pow(uint8_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t r = e % (uint64_t)(q_ - 1);
    uint8_t acc = 1, base = a;
    while (r) {
        if (r & 1) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

uint8_t Fq::from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return (uint8_t)r;
}

std::string Fq::label() const { return "F" + std::to_string(q_); }

} // namespace dmcode
