#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "cdlab/cycles.hpp"

namespace cdlab {

/**
 * Canonical zero-divisor pair (x + y)(u + tv*v).
 *
 * Canonical means: the four masks are pairwise distinct and nonzero, x < y
 * and u < v within each factor, x < u across factors, both leading
 * coefficients are +1, and of the two equivalent sign assignments
 * {(sy,tv), (-sy,-tv)} the one with sy = +1 is kept, so only tv survives.
 */
struct ZeroDivisorPair {
    Mask x, y, u, v;
    int tv;

    auto operator<=>(const ZeroDivisorPair&) const = default;
};

/// The four transformations applied to a triad's factorization.
enum class Mode { PRIME, DUAL, EXTENDED, EXTENDED_DUAL };

inline constexpr std::array<const char*, 4> kModeLetters = {"P", "D", "E", "ED"};
inline constexpr std::array<Mode, 4> kAllModes = {
    Mode::PRIME, Mode::DUAL, Mode::EXTENDED, Mode::EXTENDED_DUAL};

const char* mode_letter(Mode m);

/// Signed completion blade a = c(bd)/c^2 of the triad (b,c,d).
Blade eq15_a(const Algebra& alg, const Triad& t);

/**
 * Canonical form of the product (f1a + f1b)(f2a + f2b) of two two-blade
 * factors with unit coefficients. The input is not required to be in any
 * particular order; the four masks must be pairwise distinct and nonzero.
 * Canonicalization never changes whether the product is zero: negating a
 * whole factor, swapping the factors, or negating the second blade of both
 * factors at once all preserve a vanishing product.
 */
ZeroDivisorPair canonical_pair(const Algebra& alg, Blade f1a, Blade f1b,
                               Blade f2a, Blade f2b);

/**
 * The standard construction (a + b)(c + d) with a from eq15_a, defined for
 * triads of type A or B. Returns the canonical pair, or nothing for other
 * types. The construction is exact for every A/B triad; a nonzero product
 * would mean a sign-convention bug and throws logic_error.
 */
std::optional<ZeroDivisorPair> zd_from_triad(const Algebra& alg, const Triad& t);

/**
 * Exhaustive search for canonical pairs: for each (x, y, u) the fourth mask
 * is forced to v = x^y^u, and the pair annihilates exactly when
 * sign(xu)sign(yv) == sign(xv)sign(yu), with tv = -sign(xu)sign(yv).
 * With strict_squares each factor's two blades must square alike.
 * Parallel over x; the result is sorted, so it is thread-count independent.
 */
std::vector<ZeroDivisorPair> zd_direct_search(const Algebra& alg, int threads = 0,
                                              bool strict_squares = false);

/// One mode transformation of a triad: the two candidate factors, whether a
/// factor degenerated (its two masks collided), and the exact product.
struct ModeCandidate {
    Mode mode;
    std::array<Blade, 2> factor1, factor2;
    bool degenerate = false;
    Element product;

    bool vanishes() const { return !degenerate && product.is_zero(); }
};

/**
 * PRIME    -> (a + b)(c + d)
 * DUAL     -> (-d + b)(c + a)
 * EXTENDED -> (a' + b)(c + |db|),  a' = (bc)|db| as a signed blade
 * EXTENDED_DUAL -> (-|db| + b)(c + a')
 * where |db| is the positive blade with the mask of d*b.
 */
ModeCandidate mode_transform(const Algebra& alg, const Triad& t, Mode m);

/// The subset of modes whose candidate vanishes exactly, in kAllModes order.
std::vector<Mode> mode_survey(const Algebra& alg, const Triad& t);

/**
 * Family key of a generating triad (b,c,d): the ring {b,c,bc} together with
 * the coset {d, db, dc, dbc}, each as a sorted mask set. Two pairs sharing a
 * key arise from the same ring and coset and belong to one orbit.
 */
struct PairFamilyKey {
    std::array<Mask, 3> ring;
    std::array<Mask, 4> coset;

    auto operator<=>(const PairFamilyKey&) const = default;
};

PairFamilyKey family_key(Mask b, Mask c, Mask d);

/// The two keys of a pair, read along (x,u) and (x,v).
std::array<PairFamilyKey, 2> pair_family_keys(const ZeroDivisorPair& p);

/// The distinct sorted triads whose construction can reach this pair, from
/// the same two readings; ascending.
std::vector<Triad> member_triads(const ZeroDivisorPair& p);

/**
 * One orbit of the canonical set under cycle shifts and modes. cells lists
 * the (cycle index, mode) positions of the representative's cycle group
 * whose candidate lands inside the orbit; size is the number of canonical
 * pairs the orbit contains.
 */
struct PrimaryOrbit {
    Triad representative;
    std::vector<std::pair<int, Mode>> cells;
    int size = 0;
};

/// Orbit decomposition of zd_direct_search, union-find over shared family
/// keys; representative = least member triad; orbits sorted by it.
std::vector<PrimaryOrbit> zd_primaries(const Algebra& alg, int threads = 0);

struct ZdCensus {
    int q = 0, p = 0;
    long long count = 0;
    std::vector<ZeroDivisorPair> listing;  // populated for n <= 8
};

/// Count of canonical pairs, with the full sorted listing kept at n <= 8.
ZdCensus zd_census(const Algebra& alg, int threads = 0, bool strict_squares = false);

}  // namespace cdlab
