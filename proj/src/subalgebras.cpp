#include "cdlab/subalgebras.hpp"

#include <algorithm>

#include "cdlab/threading.hpp"

namespace cdlab {

const char* subalgebra_class_name(SubalgebraClass c) {
    switch (c) {
        case SubalgebraClass::H: return "H";
        case SubalgebraClass::O: return "O";
        case SubalgebraClass::P4: return "P4";
        case SubalgebraClass::P12: return "P12";
        case SubalgebraClass::P14: return "P14";
    }
    throw std::logic_error("unreachable subalgebra class");
}

std::optional<SubalgebraClass> census_class(const TypeCensus& c) {
    if (c == TypeCensus{{0, 0, 0, 28}}) return SubalgebraClass::O;
    if (c == TypeCensus{{12, 0, 12, 4}}) return SubalgebraClass::P4;
    if (c == TypeCensus{{8, 8, 8, 4}}) return SubalgebraClass::P12;
    if (c == TypeCensus{{7, 10, 7, 4}}) return SubalgebraClass::P14;
    return std::nullopt;
}

std::array<Mask, 7> closure_7(const Algebra& alg, const Triad& t) {
    (void)alg;
    if ((t.b ^ t.c ^ t.d) == 0)
        throw degenerate_triad_error("triad masks XOR to zero: spans a ring only");
    std::array<Mask, 7> m{t.b,        t.c,        t.b ^ t.c, t.d,
                          t.b ^ t.d, t.c ^ t.d, t.b ^ t.c ^ t.d};
    std::sort(m.begin(), m.end());
    for (int i = 1; i < 7; ++i)
        if (m[i] == m[i - 1]) throw std::logic_error("closure blades not distinct");
    return m;
}

namespace {

/// Census over all C(7,3) sorted triples of a 7-mask set; associative
/// triples are skipped, the rest land in (A,B,C,X).
TypeCensus census_of_masks(const Algebra& alg, const Mask* ms) {
    TypeCensus out;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k) {
                NonAssocType t = positional_type(alg, ms[i], ms[j], ms[k]);
                if (t != NonAssocType::ASSOC) ++out.counts[static_cast<int>(t) - 1];
            }
    return out;
}

}  // namespace

TypeCensus classify_blade_subset(const Algebra& alg, const std::vector<Mask>& masks) {
    if (masks.size() != 7) throw std::domain_error("blade subset must have 7 masks");
    Mask limit = alg.signature().mask_limit();
    std::vector<Mask> ms = masks;
    std::sort(ms.begin(), ms.end());
    for (int i = 0; i < 7; ++i) {
        if (ms[i] == 0 || ms[i] >= limit) throw std::domain_error("blade mask out of range");
        if (i > 0 && ms[i] == ms[i - 1]) throw std::domain_error("blade masks not distinct");
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (!std::binary_search(ms.begin(), ms.end(), ms[i] ^ ms[j]))
                throw std::domain_error("blade subset not closed under products");
    return census_of_masks(alg, ms.data());
}

Subalgebra classify_subalgebra(const Algebra& alg, const Triad& t) {
    Subalgebra out;
    if ((t.b ^ t.c ^ t.d) == 0) {
        out.masks = {t.b, t.c, t.d};
        out.cls = SubalgebraClass::H;
        return out;
    }
    std::array<Mask, 7> ms = closure_7(alg, t);
    out.masks.assign(ms.begin(), ms.end());
    out.census = census_of_masks(alg, ms.data());
    std::optional<SubalgebraClass> cls = census_class(out.census);
    if (!cls) throw std::logic_error("subalgebra census outside the five classes");
    out.cls = *cls;
    return out;
}

SubalgebraCensus subalgebra_census(const Algebra& alg, int threads) {
    int T = resolve_threads(threads);
    Mask N = alg.N();

    struct Part {
        long long O = 0, P4 = 0, P12 = 0, P14 = 0;
        bool bad = false;
        Triad bad_triad;
    };
    std::vector<Part> parts(T);

    run_workers(T, [&](int w) {
        Part& part = parts[w];
        Mask ms[7];
        for (Mask b = 1 + static_cast<Mask>(w); b <= N; b += static_cast<Mask>(T)) {
            for (Mask c = b + 1; c <= N; ++c) {
                Mask bc = b ^ c;
                for (Mask d = c + 1; d <= N; ++d) {
                    if (d == bc) continue;
                    ms[0] = b; ms[1] = c; ms[2] = bc; ms[3] = d;
                    ms[4] = b ^ d; ms[5] = c ^ d; ms[6] = bc ^ d;
                    // canonical generator of the closure: b least, c next,
                    // d the least blade outside the ring of (b, c)
                    Mask lo = ms[0];
                    for (int i = 1; i < 7; ++i) lo = std::min(lo, ms[i]);
                    if (lo != b) continue;
                    Mask second = ~Mask(0);
                    for (int i = 1; i < 7; ++i)
                        if (ms[i] != b) second = std::min(second, ms[i]);
                    if (second != c) continue;
                    Mask dmin = ~Mask(0);
                    for (int i = 0; i < 7; ++i)
                        if (ms[i] != b && ms[i] != c && ms[i] != bc)
                            dmin = std::min(dmin, ms[i]);
                    if (dmin != d) continue;

                    std::sort(ms, ms + 7);
                    TypeCensus census = census_of_masks(alg, ms);
                    std::optional<SubalgebraClass> cls = census_class(census);
                    if (!cls) {
                        if (!part.bad) {
                            part.bad = true;
                            part.bad_triad = Triad{b, c, d};
                        }
                        continue;
                    }
                    switch (*cls) {
                        case SubalgebraClass::O: ++part.O; break;
                        case SubalgebraClass::P4: ++part.P4; break;
                        case SubalgebraClass::P12: ++part.P12; break;
                        case SubalgebraClass::P14: ++part.P14; break;
                        case SubalgebraClass::H: break;
                    }
                }
            }
        }
    });

    SubalgebraCensus out;
    out.q = alg.signature().q();
    out.p = alg.signature().p();
    long long NN = N;
    out.H = NN * (NN - 1) / 6;
    for (const Part& part : parts) {
        if (part.bad)
            throw std::logic_error("subalgebra census outside the five classes at triad (" +
                                   std::to_string(part.bad_triad.b) + "," +
                                   std::to_string(part.bad_triad.c) + "," +
                                   std::to_string(part.bad_triad.d) + ")");
        out.O += part.O;
        out.P4 += part.P4;
        out.P12 += part.P12;
        out.P14 += part.P14;
    }
    return out;
}

}  // namespace cdlab
