#include "cdlab/associativity.hpp"

namespace cdlab {

Triad make_triad(const Algebra& alg, Mask b, Mask c, Mask d) {
    Mask limit = alg.signature().mask_limit();
    if (b >= limit || c >= limit || d >= limit)
        throw std::domain_error("triad mask out of range for signature");
    if (b == 0 || !(b < c && c < d))
        throw std::domain_error("triad needs pure blades with b < c < d");
    return Triad{b, c, d};
}

char type_letter(NonAssocType t) {
    switch (t) {
        case NonAssocType::ASSOC: return 'H';
        case NonAssocType::A: return 'A';
        case NonAssocType::B: return 'B';
        case NonAssocType::C: return 'C';
        case NonAssocType::X: return 'X';
    }
    throw std::logic_error("unreachable type");
}

Element associator(const Algebra& alg, const Blade& a, const Blade& b, const Blade& c) {
    Element ea = Element::blade(a);
    Element eb = Element::blade(b);
    Element ec = Element::blade(c);
    return element_mul(alg, element_mul(alg, ea, eb), ec) -
           element_mul(alg, ea, element_mul(alg, eb, ec));
}

Element triple_associator(const Algebra& alg, const Triad& t) {
    Blade b{t.b, 1}, c{t.c, 1}, d{t.d, 1};
    return associator(alg, b, d, c) - associator(alg, d, c, b) + associator(alg, c, b, d);
}

MoufangFlags moufang_check(const Algebra& alg, const Triad& t) {
    Mask b = t.b, c = t.c, d = t.d;
    auto S = [&](Mask x, Mask y) { return alg.sign_unchecked(x, y); };
    // d(b(dc)) vs ((db)d)c
    int l1 = S(d, c) * S(b, d ^ c) * S(d, b ^ d ^ c);
    int r1 = S(d, b) * S(d ^ b, d) * S(b, c);
    // b(d(cd)) vs ((bd)c)d
    int l2 = S(c, d) * S(d, c ^ d) * S(b, c);
    int r2 = S(b, d) * S(b ^ d, c) * S(b ^ d ^ c, d);
    // (db)(cd) vs (d(bc))d
    int l3 = S(d, b) * S(c, d) * S(d ^ b, c ^ d);
    int r3 = S(b, c) * S(d, b ^ c) * S(d ^ b ^ c, d);
    return MoufangFlags{l1 == r1, l2 == r2, l3 == r3};
}

bool malcev_check(const Algebra& alg, const Triad& t) {
    Mask b = t.b, c = t.c, d = t.d;
    auto S = [&](Mask x, Mask y) { return alg.sign_unchecked(x, y); };
    int s1 = S(b, c) * S(b ^ c, d) * S(b ^ c ^ d, b);
    int s2 = S(b, c) * S(d, b) * S(b ^ c, d ^ b);
    return s1 + s2 == 0;
}

}  // namespace cdlab
