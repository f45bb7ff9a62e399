#pragma once

#include <map>

#include "cdlab/algebra.hpp"
#include "cdlab/rational.hpp"

namespace cdlab {

/**
 * A general algebra element: exact rational coefficients keyed by blade mask.
 *
 * Zero coefficients are never stored, so equality is plain map equality and
 * the zero element is the empty map.
 */
class Element {
public:
    Element() = default;

    static Element scalar(const Rational& v) {
        Element e;
        e.set(0, v);
        return e;
    }
    static Element blade(Mask mask, const Rational& coeff = Rational(1)) {
        Element e;
        e.set(mask, coeff);
        return e;
    }
    static Element blade(const Blade& b) { return blade(b.mask, Rational(b.sign)); }

    const std::map<Mask, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(Mask mask) const {
        auto it = coeffs_.find(mask);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set(Mask mask, const Rational& v) {
        if (v.is_zero())
            coeffs_.erase(mask);
        else
            coeffs_[mask] = v;
    }

    void add(Mask mask, const Rational& v) {
        auto it = coeffs_.find(mask);
        if (it == coeffs_.end()) {
            if (!v.is_zero()) coeffs_.emplace(mask, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [m, v] : o.coeffs_) r.add(m, v);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [m, v] : o.coeffs_) r.add(m, -v);
        return r;
    }
    Element operator-() const {
        Element r;
        for (const auto& [m, v] : coeffs_) r.coeffs_.emplace(m, -v);
        return r;
    }
    Element scaled(const Rational& s) const {
        Element r;
        if (s.is_zero()) return r;
        for (const auto& [m, v] : coeffs_) r.coeffs_.emplace(m, v * s);
        return r;
    }

    bool operator==(const Element& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    std::map<Mask, Rational> coeffs_;
};

/**
 * Full product by the top-level pair recursion on coefficient maps.
 *
 * This splits both operands on the highest generator and recurses, which
 * makes it an oracle independent of the blade sign recursion: the two must
 * agree on single blades.
 */
Element element_mul(const Algebra& alg, const Element& a, const Element& b);

/// Negate every pure-blade coefficient; the scalar part stays.
Element conjugate(const Algebra& alg, const Element& a);

}  // namespace cdlab
