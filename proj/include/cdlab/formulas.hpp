#pragma once

#include <string>
#include <vector>

namespace cdlab {

/// N = 2^n - 1, the number of pure basis blades at level n.
long long pure_blade_count(int n);

/// Ring count H = N(N-1)/6 at level n >= 2.
long long h_count(int n);

/// Zero-divisor count Z = (N-1)(N-3)(N-7)/16 at level n = m+3, m >= 0.
long long z_count(int m);

/// Quasi-octonion subalgebra count S = Z/12 = (N-1)(N-3)(N-7)/192.
long long s_count(int m);

/// Octonion subalgebra count O = S(m+1)/7 - S(m).
long long o_count(int m);

/// Closed-form values at one level plus the internal cross-checks.
struct CountReport {
    int m = 0;  // level n = m + 3
    long long N = 0, H = 0, S = 0, O = 0, Z = 0, triad_total = 0;
    bool consistent = true;
    std::vector<std::string> failures;
};

/**
 * Reports for m = 0..m_max (m_max <= 7) with every closed-form identity
 * checked exactly: integrality of each formula, Z == 12 S, the recurrence
 * S(m+1) == 7 (O(m) + S(m)), divisibility of Z by 84 for m >= 1, and
 * triad_total == C(N,3).
 */
std::vector<CountReport> consistency_check(int m_max);

}  // namespace cdlab
