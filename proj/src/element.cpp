#include "cdlab/element.hpp"

namespace cdlab {

namespace {

using CoeffMap = std::map<Mask, Rational>;

CoeffMap conj_map(const CoeffMap& m) {
    CoeffMap r;
    for (const auto& [k, v] : m) r.emplace(k, k == 0 ? v : -v);
    return r;
}

void add_into(CoeffMap& dst, const CoeffMap& src, Mask or_bit, int scale) {
    for (const auto& [k, v] : src) {
        Mask key = k | or_bit;
        auto it = dst.find(key);
        Rational term = scale < 0 ? -v : v;
        if (it == dst.end()) {
            dst.emplace(key, term);
        } else {
            it->second += term;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

CoeffMap mul_rec(const Signature& sig, const CoeffMap& A, const CoeffMap& B, int level) {
    if (A.empty() || B.empty()) return {};
    if (level == 0) {
        Rational v = A.begin()->second * B.begin()->second;
        CoeffMap r;
        if (!v.is_zero()) r.emplace(0, v);
        return r;
    }
    Mask bit = Mask(1) << (level - 1);
    CoeffMap a, b, c, d;
    for (const auto& [k, v] : A) (k & bit ? b : a).emplace(k & ~bit, v);
    for (const auto& [k, v] : B) (k & bit ? d : c).emplace(k & ~bit, v);
    int e = sig.eps(level);
    // (a,b)(c,d) = (ac - e d*b, da + bc*)
    CoeffMap out = mul_rec(sig, a, c, level - 1);
    add_into(out, mul_rec(sig, conj_map(d), b, level - 1), 0, -e);
    add_into(out, mul_rec(sig, d, a, level - 1), bit, +1);
    add_into(out, mul_rec(sig, b, conj_map(c), level - 1), bit, +1);
    return out;
}

}  // namespace

Element element_mul(const Algebra& alg, const Element& a, const Element& b) {
    Mask limit = alg.signature().mask_limit();
    for (const auto& [m, v] : a.coeffs())
        if (m >= limit) throw std::domain_error("element mask out of range for signature");
    for (const auto& [m, v] : b.coeffs())
        if (m >= limit) throw std::domain_error("element mask out of range for signature");
    CoeffMap r = mul_rec(alg.signature(), a.coeffs(), b.coeffs(), alg.n());
    Element out;
    for (const auto& [m, v] : r) out.set(m, v);
    return out;
}

Element conjugate(const Algebra& alg, const Element& a) {
    Mask limit = alg.signature().mask_limit();
    Element out;
    for (const auto& [m, v] : a.coeffs()) {
        if (m >= limit) throw std::domain_error("element mask out of range for signature");
        out.set(m, m == 0 ? v : -v);
    }
    return out;
}

}  // namespace cdlab
