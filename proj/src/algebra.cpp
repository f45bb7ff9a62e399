#include "cdlab/algebra.hpp"

namespace cdlab {

int Algebra::sign_rec(Mask x, Mask y) const {
    // Doubling recursion, peeled into a loop over generators from the top.
    // Each step splits the operands on the current generator bit; the four
    // bit combinations are the four quadrants of (a,b)(c,d) = (ac - e d*b,
    // da + bc*), tracked here as a running sign plus operand swaps. The
    // conjugation of a sub-operand contributes -1 exactly when its residual
    // mask is nonzero.
    int s = 1;
    for (int k = sig_.n(); k >= 1; --k) {
        Mask bit = Mask(1) << (k - 1);
        bool xb = (x & bit) != 0;
        bool yb = (y & bit) != 0;
        Mask x0 = x & ~bit;
        Mask y0 = y & ~bit;
        if (!xb && !yb) {
            x = x0;
            y = y0;
        } else if (!xb && yb) {
            x = y0;
            y = x0;
        } else if (xb && !yb) {
            if (y0 != 0) s = -s;
            x = x0;
            y = y0;
        } else {
            s *= -sig_.eps(k);
            if (y0 != 0) s = -s;
            x = y0;
            y = x0;
        }
    }
    return s;
}

std::string Algebra::basis_label(Mask mask) const {
    check_mask(mask);
    if (mask == 0) return "1";
    std::vector<int> os, us;
    for (int i = 1; i <= sig_.q(); ++i)
        if (mask & (Mask(1) << (i - 1))) os.push_back(i);
    for (int j = 1; j <= sig_.p(); ++j)
        if (mask & (Mask(1) << (sig_.q() + j - 1))) us.push_back(j);
    auto part = [](char ch, const std::vector<int>& idx) {
        if (idx.empty()) return std::string();
        std::string s(1, ch);
        if (idx.back() <= 9) {
            for (int i : idx) s += std::to_string(i);
        } else {
            s += '[';
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(idx[i]);
            }
            s += ']';
        }
        return s;
    };
    return part('o', os) + part('u', us);
}

}  // namespace cdlab
