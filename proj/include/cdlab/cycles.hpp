#pragma once

#include <array>
#include <utility>

#include "cdlab/associativity.hpp"

namespace cdlab {

enum class TriadKind { ASSOCIATIVE, NON_CYCLE, CYCLE_FIRST };

/// The eight admissible ordered type-letter combinations of a cycle group.
enum class Silo { AAA, BBA, ACC, XBB, BXC, CAB, CCX, XXX };

inline constexpr std::array<const char*, 8> kSiloNames = {
    "AAA", "BBA", "ACC", "XBB", "BXC", "CAB", "CCX", "XXX"};

const char* silo_name(Silo s);
Silo silo_from_letters(const char* letters);

/// The three ascending pairs covering the ring of b and c:
/// (b,c), (b,|bc|), (c,|bc|), each sorted.
std::array<std::pair<Mask, Mask>, 3> pair_cycle(Mask b, Mask c);

/// d against the mask of |bc| decides everything: equal is associative,
/// below is a non-cycle, above makes the triad open a cycle group.
TriadKind triad_kind(const Algebra& alg, const Triad& t);

/**
 * Cycle group on base pair (b,c) with b < c < |bc| < d. The three ordered
 * member triads share d: (b,c,d), (b,|bc|,d), (c,|bc|,d).
 */
struct CycleGroup {
    Mask b, c, bc, d;
    std::array<Triad, 3> members;
};

CycleGroup make_cycle_group(const Algebra& alg, Mask b, Mask c, Mask d);

/// Ordered type letters of the three members, evaluated positionally on
/// (b,c,d), (b,|bc|,d), (c,|bc|,d).
Silo silo_of(const Algebra& alg, const CycleGroup& g);

struct TriadCensus {
    int q = 0, p = 0;
    long long associative = 0;
    std::array<long long, 4> non_cycle{};  // A, B, C, X
    std::array<long long, 8> silos{};      // Silo order

    long long non_cycle_total() const {
        long long t = 0;
        for (long long v : non_cycle) t += v;
        return t;
    }
    long long cycle_groups() const {
        long long t = 0;
        for (long long v : silos) t += v;
        return t;
    }
    long long total() const { return associative + non_cycle_total() + 3 * cycle_groups(); }
};

/**
 * Exhaustive classification of all C(2^n-1, 3) triads, lexicographic over
 * (b,c,d). Parallel over the outer b index; partial counts merge by
 * addition, so the result does not depend on the thread count.
 */
TriadCensus triad_census(const Algebra& alg, int threads = 0);

}  // namespace cdlab
