#include "cdlab/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>

#include "cdlab/threading.hpp"

namespace cdlab {

const char* silo_name(Silo s) { return kSiloNames[static_cast<int>(s)]; }

Silo silo_from_letters(const char* letters) {
    for (int i = 0; i < 8; ++i)
        if (std::strcmp(letters, kSiloNames[i]) == 0) return static_cast<Silo>(i);
    throw std::logic_error(std::string("silo outside the eight: ") + letters);
}

std::array<std::pair<Mask, Mask>, 3> pair_cycle(Mask b, Mask c) {
    if (b == 0 || c == 0 || b >= c) throw std::domain_error("pair_cycle needs 0 < b < c");
    Mask bc = b ^ c;
    auto sorted = [](Mask x, Mask y) { return x < y ? std::pair{x, y} : std::pair{y, x}; };
    return {std::pair{b, c}, sorted(b, bc), sorted(c, bc)};
}

TriadKind triad_kind(const Algebra& alg, const Triad& t) {
    (void)alg;
    Mask bc = t.b ^ t.c;
    if (t.d == bc) return TriadKind::ASSOCIATIVE;
    return t.d < bc ? TriadKind::NON_CYCLE : TriadKind::CYCLE_FIRST;
}

CycleGroup make_cycle_group(const Algebra& alg, Mask b, Mask c, Mask d) {
    Mask limit = alg.signature().mask_limit();
    if (b >= limit || c >= limit || d >= limit)
        throw std::domain_error("cycle group mask out of range");
    Mask bc = b ^ c;
    if (!(0 < b && b < c && c < bc && bc < d))
        throw std::domain_error("cycle group needs b < c < |bc| < d");
    return CycleGroup{b, c, bc, d,
                      {Triad{b, c, d}, Triad{b, bc, d}, Triad{c, bc, d}}};
}

Silo silo_of(const Algebra& alg, const CycleGroup& g) {
    char letters[4] = {};
    for (int i = 0; i < 3; ++i) {
        NonAssocType t = positional_type(alg, g.members[i].b, g.members[i].c, g.d);
        if (t == NonAssocType::ASSOC)
            throw std::logic_error("associative member inside a cycle group");
        letters[i] = type_letter(t);
    }
    return silo_from_letters(letters);
}

namespace {

// Letter index for census arrays: A=0, B=1, C=2, X=3.
inline int letter_index(NonAssocType t) { return static_cast<int>(t) - 1; }

// Packed (l1,l2,l3) combination to Silo, -1 for the 56 that never occur.
constexpr std::array<std::int8_t, 64> make_silo_table() {
    std::array<std::int8_t, 64> t{};
    for (auto& v : t) v = -1;
    constexpr int A = 0, B = 1, C = 2, X = 3;
    t[A * 16 + A * 4 + A] = static_cast<int>(Silo::AAA);
    t[B * 16 + B * 4 + A] = static_cast<int>(Silo::BBA);
    t[A * 16 + C * 4 + C] = static_cast<int>(Silo::ACC);
    t[X * 16 + B * 4 + B] = static_cast<int>(Silo::XBB);
    t[B * 16 + X * 4 + C] = static_cast<int>(Silo::BXC);
    t[C * 16 + A * 4 + B] = static_cast<int>(Silo::CAB);
    t[C * 16 + C * 4 + X] = static_cast<int>(Silo::CCX);
    t[X * 16 + X * 4 + X] = static_cast<int>(Silo::XXX);
    return t;
}
constexpr std::array<std::int8_t, 64> kSiloByLetters = make_silo_table();

}  // namespace

TriadCensus triad_census(const Algebra& alg, int threads) {
    int T = resolve_threads(threads);
    Mask N = alg.N();
    std::vector<TriadCensus> parts(T);

    run_workers(T, [&](int w) {
        TriadCensus& part = parts[w];
        for (Mask b = 1 + static_cast<Mask>(w); b <= N; b += static_cast<Mask>(T)) {
            for (Mask c = b + 1; c <= N; ++c) {
                Mask bc = b ^ c;
                // Triads (b,c,d) with c < d < |bc| are non-cycles.
                for (Mask d = c + 1; d < bc; ++d)
                    ++part.non_cycle[letter_index(positional_type(alg, b, c, d))];
                if (bc < c) continue;
                // d == |bc| closes the ring; beyond it each d opens the
                // cycle group whose first member this pair is.
                ++part.associative;
                for (Mask d = bc + 1; d <= N; ++d) {
                    int i1 = letter_index(positional_type(alg, b, c, d));
                    int i2 = letter_index(positional_type(alg, b, bc, d));
                    int i3 = letter_index(positional_type(alg, c, bc, d));
                    std::int8_t s = kSiloByLetters[i1 * 16 + i2 * 4 + i3];
                    if (s < 0) throw std::logic_error("cycle group outside the eight silos");
                    ++part.silos[s];
                }
            }
        }
    });

    TriadCensus out;
    out.q = alg.signature().q();
    out.p = alg.signature().p();
    for (const TriadCensus& part : parts) {
        out.associative += part.associative;
        for (int i = 0; i < 4; ++i) out.non_cycle[i] += part.non_cycle[i];
        for (int i = 0; i < 8; ++i) out.silos[i] += part.silos[i];
    }
    return out;
}

}  // namespace cdlab
