#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdlab {

/// Basis blades are indexed by bit masks: bit i-1 set means generator i is
/// present. Mask 0 is the unit.
using Mask = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

/**
 * Generator signs for one algebra.
 *
 * A signature holds q imaginary generators (square -1) followed by p unitary
 * generators (square +1). The per-generator flag eps(k) is +1 for imaginary
 * and -1 for unitary generators; unitary generators always occupy the highest
 * indices.
 */
class Signature {
public:
    Signature(int q, int p) : q_(q), p_(p) {
        if (q < 0 || p < 0 || q + p < 1 || q + p > kMaxGenerators)
            throw std::domain_error("signature (" + std::to_string(q) + "," +
                                    std::to_string(p) + ") out of range");
        for (int i = 0; i < q; ++i) eps_[i] = 1;
        for (int i = q; i < q + p; ++i) eps_[i] = -1;
    }

    /// All-imaginary signature of n generators.
    static Signature level(int n) { return Signature(n, 0); }

    int n() const { return q_ + p_; }
    int q() const { return q_; }
    int p() const { return p_; }

    /// Sign flag of generator k (1-based).
    int eps(int k) const {
        if (k < 1 || k > n()) throw std::domain_error("generator index out of range");
        return eps_[k - 1];
    }

    Mask mask_limit() const { return Mask(1) << n(); }
    /// Largest pure-blade mask, 2^n - 1.
    Mask top_mask() const { return mask_limit() - 1; }

    bool operator==(const Signature& o) const { return q_ == o.q_ && p_ == o.p_; }
    bool operator!=(const Signature& o) const { return !(*this == o); }

private:
    int q_, p_;
    std::array<std::int8_t, kMaxGenerators> eps_{};
};

/// A signed basis element: bit-mask index set plus a sign in {-1,+1}.
struct Blade {
    Mask mask = 0;
    int sign = 1;
};

inline bool operator==(const Blade& a, const Blade& b) {
    return a.mask == b.mask && a.sign == b.sign;
}
inline bool operator!=(const Blade& a, const Blade& b) { return !(a == b); }
inline Blade operator-(const Blade& a) { return Blade{a.mask, -a.sign}; }

}  // namespace cdlab
