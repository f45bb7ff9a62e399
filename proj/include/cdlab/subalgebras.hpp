#pragma once

#include <optional>
#include <vector>

#include "cdlab/associativity.hpp"

namespace cdlab {

enum class SubalgebraClass { H, O, P4, P12, P14 };

const char* subalgebra_class_name(SubalgebraClass c);

/// (A, B, C, X) counts over the 35 internal triads of a 7-blade closure.
struct TypeCensus {
    std::array<int, 4> counts{};

    auto operator<=>(const TypeCensus&) const = default;
};

/// The five census signatures that occur; anything else is impossible.
std::optional<SubalgebraClass> census_class(const TypeCensus& c);

struct Subalgebra {
    std::vector<Mask> masks;  // sorted; 7 blades, or 3 for a plain ring
    SubalgebraClass cls = SubalgebraClass::H;
    TypeCensus census;
};

/// A triad whose three masks XOR to zero spans only a ring, not a 7-blade
/// closure; signalled apart from ordinary domain errors.
struct degenerate_triad_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// {b, c, bc, d, bd, cd, bcd} sorted; throws degenerate_triad_error when
/// b^c^d == 0.
std::array<Mask, 7> closure_7(const Algebra& alg, const Triad& t);

/// Census of an explicit 7-blade subset; the masks must be distinct,
/// nonzero, and closed under XOR, else domain_error.
TypeCensus classify_blade_subset(const Algebra& alg, const std::vector<Mask>& masks);

/**
 * Closure and classification of the subalgebra a triad generates. A triad
 * with b^c^d == 0 yields its 3-blade ring, class H. Otherwise the 35
 * internal triads are classified; a census outside the known five would
 * falsify the classification and throws logic_error.
 */
Subalgebra classify_subalgebra(const Algebra& alg, const Triad& t);

struct SubalgebraCensus {
    int q = 0, p = 0;
    long long H = 0, O = 0, P4 = 0, P12 = 0, P14 = 0;

    long long p_total() const { return P4 + P12 + P14; }
};

/**
 * Counts of distinct subalgebras at a signature. Every 7-blade closure is
 * counted once: a non-associative triad contributes exactly when it is the
 * canonical generator of its closure (least b, then least c, then least d
 * outside the ring of b,c), so no dedup set is needed. The H count is the
 * ring count N(N-1)/6.
 */
SubalgebraCensus subalgebra_census(const Algebra& alg, int threads = 0);

}  // namespace cdlab
