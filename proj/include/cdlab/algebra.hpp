#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cdlab/core.hpp"

namespace cdlab {

/// Largest level that gets a dense sign table; above this the recursion runs
/// directly. 2^(2*10) one-byte entries is 1 MiB.
inline constexpr int kDenseTableMaxLevel = 10;

/**
 * One Cayley-Dickson algebra: a signature plus its structure-constant signs.
 *
 * The product of two positive blades x, y is sign(x,y) times the blade with
 * mask x XOR y. Signs come from the doubling recursion, evaluated once into a
 * dense table for levels up to kDenseTableMaxLevel and on demand above that.
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class Algebra {
public:
    explicit Algebra(Signature sig) : sig_(sig) {
        if (sig_.n() <= kDenseTableMaxLevel) {
            std::size_t side = sig_.mask_limit();
            table_.resize(side * side);
            for (Mask x = 0; x < side; ++x)
                for (Mask y = 0; y < side; ++y)
                    table_[(static_cast<std::size_t>(x) << sig_.n()) | y] =
                        static_cast<std::int8_t>(sign_rec(x, y));
        }
    }

    const Signature& signature() const { return sig_; }
    int n() const { return sig_.n(); }
    /// Number of pure basis blades, 2^n - 1.
    Mask N() const { return sig_.top_mask(); }

    /// Structure-constant sign of the product of positive blades x and y.
    int sign(Mask x, Mask y) const {
        check_mask(x);
        check_mask(y);
        return sign_unchecked(x, y);
    }

    int sign_unchecked(Mask x, Mask y) const {
        if (!table_.empty())
            return table_[(static_cast<std::size_t>(x) << sig_.n()) | y];
        return sign_rec(x, y);
    }

    Blade blade_mul(const Blade& x, const Blade& y) const {
        check_mask(x.mask);
        check_mask(y.mask);
        return Blade{x.mask ^ y.mask, x.sign * y.sign * sign_unchecked(x.mask, y.mask)};
    }

    /// Sign of the square of the positive blade with this mask: minus the
    /// product of the generator flags it contains.
    int blade_square_sign(Mask x) const {
        check_mask(x);
        if (x == 0) throw std::domain_error("blade_square_sign: unit has no pure square");
        int s = -1;
        for (int i = 1; i <= sig_.n(); ++i)
            if (x & (Mask(1) << (i - 1))) s *= sig_.eps(i);
        return s;
    }

    /// Sum of blade_square_sign over all pure blades: -(2^n - 1) when every
    /// generator is imaginary, +1 as soon as one unitary generator exists.
    long long pure_trace() const {
        long long t = 0;
        for (Mask m = 1; m <= N(); ++m) t += blade_square_sign(m);
        return t;
    }

    /**
     * Human-readable name of a positive basis blade: "o" digits for the
     * imaginary part, "u" digits for the unitary part, bracket lists once an
     * index needs two digits. Mask 0 renders as "1".
     */
    std::string basis_label(Mask mask) const;

    /// True when the blade associator [x,y,z] vanishes, decided purely on
    /// structure-constant signs.
    bool assoc_zero(Mask x, Mask y, Mask z) const {
        return sign_unchecked(x, y) * sign_unchecked(x ^ y, z) ==
               sign_unchecked(y, z) * sign_unchecked(x, y ^ z);
    }

private:
    void check_mask(Mask m) const {
        if (m >= sig_.mask_limit())
            throw std::domain_error("mask " + std::to_string(m) +
                                    " out of range for signature");
    }

    int sign_rec(Mask x, Mask y) const;

    Signature sig_;
    std::vector<std::int8_t> table_;
};

}  // namespace cdlab
