#pragma once

#include <compare>

#include "cdlab/element.hpp"

namespace cdlab {

/// Ordered triple of distinct pure blades with b < c < d.
struct Triad {
    Mask b = 0, c = 0, d = 0;

    auto operator<=>(const Triad&) const = default;
};

Triad make_triad(const Algebra& alg, Mask b, Mask c, Mask d);

enum class NonAssocType { ASSOC, A, B, C, X };

char type_letter(NonAssocType t);

/**
 * Zero-pattern of the three associator types of a triad. Only five patterns
 * can occur: all three zero (associative) or exactly one of z1/z2/z3 false
 * (types A/B/C) or all three false (type X). Anything else trips an
 * invariant check.
 */
struct TypePattern {
    bool z1, z2, z3;

    NonAssocType type() const {
        if (z1 && z2 && z3) return NonAssocType::ASSOC;
        if (!z1 && z2 && z3) return NonAssocType::A;
        if (z1 && !z2 && z3) return NonAssocType::B;
        if (z1 && z2 && !z3) return NonAssocType::C;
        if (!z1 && !z2 && !z3) return NonAssocType::X;
        throw std::logic_error("inadmissible associativity pattern");
    }
};

/// Pattern of the ordered triple (x, y, e) as written: z1 = [x,e,y] == 0,
/// z2 = [x,y,e] == 0, z3 = [y,x,e] == 0.
inline TypePattern positional_pattern(const Algebra& alg, Mask x, Mask y, Mask e) {
    return TypePattern{alg.assoc_zero(x, e, y), alg.assoc_zero(x, y, e),
                       alg.assoc_zero(y, x, e)};
}

inline NonAssocType positional_type(const Algebra& alg, Mask x, Mask y, Mask e) {
    return positional_pattern(alg, x, y, e).type();
}

inline TypePattern type_pattern(const Algebra& alg, const Triad& t) {
    return positional_pattern(alg, t.b, t.c, t.d);
}

inline NonAssocType triad_type(const Algebra& alg, const Triad& t) {
    return type_pattern(alg, t).type();
}

/// [a,b,c] = (ab)c - a(bc) as an exact element.
Element associator(const Algebra& alg, const Blade& a, const Blade& b, const Blade& c);

/// T(b,c,d) = [b,d,c] - [d,c,b] + [c,b,d]; zero exactly for associative
/// triads, otherwise twice a blade.
Element triple_associator(const Algebra& alg, const Triad& t);

struct MoufangFlags {
    bool m1, m2, m3;
};

/// m1: d(b(dc)) == dbdc, m2: b(d(cd)) == bdcd, m3: db(cd) == d(bc)d, with
/// unparenthesized products expanded from the left.
MoufangFlags moufang_check(const Algebra& alg, const Triad& t);

/// bcdb + bc(db) == 0, left expansion.
bool malcev_check(const Algebra& alg, const Triad& t);

}  // namespace cdlab
