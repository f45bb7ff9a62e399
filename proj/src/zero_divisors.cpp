#include "cdlab/zero_divisors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "cdlab/threading.hpp"

namespace cdlab {

const char* mode_letter(Mode m) { return kModeLetters[static_cast<int>(m)]; }

Blade eq15_a(const Algebra& alg, const Triad& t) {
    Mask mbd = t.b ^ t.d;
    int s = alg.sign(t.b, t.d) * alg.sign(t.c, mbd) * alg.blade_square_sign(t.c);
    return Blade{t.c ^ mbd, s};
}

ZeroDivisorPair canonical_pair(const Algebra& alg, Blade f1a, Blade f1b,
                               Blade f2a, Blade f2b) {
    Mask limit = alg.signature().mask_limit();
    const Blade* bs[4] = {&f1a, &f1b, &f2a, &f2b};
    for (const Blade* b : bs) {
        if (b->mask == 0 || b->mask >= limit)
            throw std::domain_error("pair blade mask out of range");
        if (b->sign != 1 && b->sign != -1)
            throw std::domain_error("pair blade coefficient must be +-1");
    }
    if (f1a.mask == f1b.mask || f2a.mask == f2b.mask || f1a.mask == f2a.mask ||
        f1a.mask == f2b.mask || f1b.mask == f2a.mask || f1b.mask == f2b.mask)
        throw std::domain_error("pair masks must be pairwise distinct");

    if (f1b.mask < f1a.mask) std::swap(f1a, f1b);
    if (f2b.mask < f2a.mask) std::swap(f2a, f2b);
    if (f2a.mask < f1a.mask) {
        std::swap(f1a, f2a);
        std::swap(f1b, f2b);
    }
    if (f1a.sign < 0) {
        f1a.sign = -f1a.sign;
        f1b.sign = -f1b.sign;
    }
    if (f2a.sign < 0) {
        f2a.sign = -f2a.sign;
        f2b.sign = -f2b.sign;
    }
    int sy = f1b.sign, tv = f2b.sign;
    if (sy < 0) {
        sy = -sy;
        tv = -tv;
    }
    return ZeroDivisorPair{f1a.mask, f1b.mask, f2a.mask, f2b.mask, tv};
}

std::optional<ZeroDivisorPair> zd_from_triad(const Algebra& alg, const Triad& t) {
    NonAssocType ty = triad_type(alg, t);
    if (ty != NonAssocType::A && ty != NonAssocType::B) return std::nullopt;
    Blade a = eq15_a(alg, t);
    Element f1 = Element::blade(a) + Element::blade(t.b);
    Element f2 = Element::blade(t.c) + Element::blade(t.d);
    if (!element_mul(alg, f1, f2).is_zero())
        throw std::logic_error("nonzero product from an A/B triad construction");
    return canonical_pair(alg, a, Blade{t.b, 1}, Blade{t.c, 1}, Blade{t.d, 1});
}

namespace {

std::vector<std::int8_t> square_table(const Algebra& alg) {
    Mask limit = alg.signature().mask_limit();
    std::vector<std::int8_t> sq(limit, 0);
    for (Mask m = 1; m < limit; ++m)
        sq[m] = static_cast<std::int8_t>(alg.blade_square_sign(m));
    return sq;
}

template <typename Emit>
void scan_pairs(const Algebra& alg, Mask x_start, Mask x_stride,
                const std::vector<std::int8_t>* sq, Emit&& emit) {
    Mask N = alg.N();
    for (Mask x = x_start; x <= N; x += x_stride) {
        for (Mask y = x + 1; y <= N; ++y) {
            for (Mask u = x + 1; u <= N; ++u) {
                if (u == y) continue;
                Mask v = x ^ y ^ u;
                if (v <= u || v == y) continue;
                if (sq && ((*sq)[x] != (*sq)[y] || (*sq)[u] != (*sq)[v])) continue;
                int s1 = alg.sign_unchecked(x, u) * alg.sign_unchecked(y, v);
                int s2 = alg.sign_unchecked(x, v) * alg.sign_unchecked(y, u);
                if (s1 == s2) emit(ZeroDivisorPair{x, y, u, v, -s1});
            }
        }
    }
}

}  // namespace

std::vector<ZeroDivisorPair> zd_direct_search(const Algebra& alg, int threads,
                                              bool strict_squares) {
    int T = resolve_threads(threads);
    std::vector<std::int8_t> sq;
    if (strict_squares) sq = square_table(alg);
    std::vector<std::vector<ZeroDivisorPair>> parts(T);

    run_workers(T, [&](int w) {
        scan_pairs(alg, static_cast<Mask>(1 + w), static_cast<Mask>(T),
                   strict_squares ? &sq : nullptr,
                   [&](const ZeroDivisorPair& p) { parts[w].push_back(p); });
    });

    std::vector<ZeroDivisorPair> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

ModeCandidate mode_transform(const Algebra& alg, const Triad& t, Mode m) {
    Blade a = eq15_a(alg, t);
    Mask db = t.d ^ t.b;
    Blade ap{t.b ^ t.c ^ db, alg.sign(t.b, t.c) * alg.sign(t.b ^ t.c, db)};
    Blade bp{t.b, 1}, cp{t.c, 1};

    ModeCandidate out;
    out.mode = m;
    switch (m) {
        case Mode::PRIME:
            out.factor1 = {a, bp};
            out.factor2 = {cp, Blade{t.d, 1}};
            break;
        case Mode::DUAL:
            out.factor1 = {Blade{t.d, -1}, bp};
            out.factor2 = {cp, a};
            break;
        case Mode::EXTENDED:
            out.factor1 = {ap, bp};
            out.factor2 = {cp, Blade{db, 1}};
            break;
        case Mode::EXTENDED_DUAL:
            out.factor1 = {Blade{db, -1}, bp};
            out.factor2 = {cp, ap};
            break;
    }
    out.degenerate = out.factor1[0].mask == out.factor1[1].mask ||
                     out.factor2[0].mask == out.factor2[1].mask;
    Element f1 = Element::blade(out.factor1[0]) + Element::blade(out.factor1[1]);
    Element f2 = Element::blade(out.factor2[0]) + Element::blade(out.factor2[1]);
    out.product = element_mul(alg, f1, f2);
    return out;
}

std::vector<Mode> mode_survey(const Algebra& alg, const Triad& t) {
    std::vector<Mode> out;
    for (Mode m : kAllModes)
        if (mode_transform(alg, t, m).vanishes()) out.push_back(m);
    return out;
}

PairFamilyKey family_key(Mask b, Mask c, Mask d) {
    PairFamilyKey k{{b, c, b ^ c}, {d, d ^ b, d ^ c, d ^ b ^ c}};
    std::sort(k.ring.begin(), k.ring.end());
    std::sort(k.coset.begin(), k.coset.end());
    return k;
}

std::array<PairFamilyKey, 2> pair_family_keys(const ZeroDivisorPair& p) {
    return {family_key(p.x, p.u, p.y), family_key(p.x, p.v, p.y)};
}

std::vector<Triad> member_triads(const ZeroDivisorPair& p) {
    std::vector<Triad> out;
    auto add = [&out](Mask r, Mask s, Mask e) {
        std::array<Mask, 3> m{r, s, e};
        std::sort(m.begin(), m.end());
        out.push_back(Triad{m[0], m[1], m[2]});
    };
    add(p.x, p.u, p.y);
    add(p.x, p.u, p.v);
    add(p.x, p.v, p.y);
    add(p.x, p.v, p.u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PrimaryOrbit> zd_primaries(const Algebra& alg, int threads) {
    std::vector<ZeroDivisorPair> pairs = zd_direct_search(alg, threads);
    int n = static_cast<int>(pairs.size());

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    auto unite = [&parent, &find](int i, int j) {
        int ri = find(i), rj = find(j);
        if (ri != rj) parent[ri] = rj;
    };

    std::map<PairFamilyKey, std::vector<int>> bykey;
    for (int i = 0; i < n; ++i)
        for (const PairFamilyKey& k : pair_family_keys(pairs[i])) bykey[k].push_back(i);
    for (const auto& [key, members] : bykey)
        for (size_t j = 1; j < members.size(); ++j) unite(members[0], members[j]);

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);

    auto locate = [&pairs](const ZeroDivisorPair& q) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), q);
        if (it == pairs.end() || *it != q) return -1;
        return static_cast<int>(it - pairs.begin());
    };
    auto sorted3 = [](Mask a, Mask b, Mask c) {
        std::array<Mask, 3> m{a, b, c};
        std::sort(m.begin(), m.end());
        return Triad{m[0], m[1], m[2]};
    };

    std::vector<PrimaryOrbit> out;
    out.reserve(groups.size());
    for (const auto& [root, idxs] : groups) {
        PrimaryOrbit orb;
        orb.size = static_cast<int>(idxs.size());
        bool first = true;
        for (int i : idxs) {
            for (const Triad& t : member_triads(pairs[i])) {
                if (first || t < orb.representative) orb.representative = t;
                first = false;
            }
        }
        const Triad& r = orb.representative;
        Mask bc = r.b ^ r.c;
        std::array<Triad, 3> members = {r, sorted3(r.b, bc, r.d), sorted3(r.c, bc, r.d)};
        for (int ci = 0; ci < 3; ++ci) {
            for (Mode m : kAllModes) {
                ModeCandidate cand = mode_transform(alg, members[ci], m);
                if (!cand.vanishes()) continue;
                ZeroDivisorPair cp = canonical_pair(alg, cand.factor1[0], cand.factor1[1],
                                                    cand.factor2[0], cand.factor2[1]);
                int j = locate(cp);
                if (j >= 0 && find(j) == root) orb.cells.emplace_back(ci, m);
            }
        }
        out.push_back(std::move(orb));
    }
    std::sort(out.begin(), out.end(), [](const PrimaryOrbit& a, const PrimaryOrbit& b) {
        return a.representative < b.representative;
    });
    return out;
}

ZdCensus zd_census(const Algebra& alg, int threads, bool strict_squares) {
    ZdCensus out;
    out.q = alg.signature().q();
    out.p = alg.signature().p();
    if (alg.n() <= 8) {
        out.listing = zd_direct_search(alg, threads, strict_squares);
        out.count = static_cast<long long>(out.listing.size());
        return out;
    }
    int T = resolve_threads(threads);
    std::vector<std::int8_t> sq;
    if (strict_squares) sq = square_table(alg);
    std::vector<long long> parts(T, 0);
    run_workers(T, [&](int w) {
        long long local = 0;
        scan_pairs(alg, static_cast<Mask>(1 + w), static_cast<Mask>(T),
                   strict_squares ? &sq : nullptr,
                   [&local](const ZeroDivisorPair&) { ++local; });
        parts[w] = local;
    });
    for (long long v : parts) out.count += v;
    return out;
}

}  // namespace cdlab
