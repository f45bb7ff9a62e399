#include "cdlab/formulas.hpp"

#include <stdexcept>

namespace cdlab {

namespace {

long long exact_div(long long num, long long den, const char* what) {
    if (num % den != 0)
        throw std::logic_error(std::string(what) + " not divisible by " + std::to_string(den));
    return num / den;
}

}  // namespace

long long pure_blade_count(int n) {
    if (n < 0 || n > 62) throw std::domain_error("level out of range");
    return (1LL << n) - 1;
}

long long h_count(int n) {
    if (n < 2) throw std::domain_error("h_count needs n >= 2");
    long long N = pure_blade_count(n);
    return exact_div(N * (N - 1), 6, "N(N-1)");
}

long long z_count(int m) {
    if (m < 0) throw std::domain_error("z_count needs m >= 0");
    long long N = pure_blade_count(m + 3);
    return exact_div((N - 1) * (N - 3) * (N - 7), 16, "(N-1)(N-3)(N-7)");
}

long long s_count(int m) {
    if (m < 0) throw std::domain_error("s_count needs m >= 0");
    long long N = pure_blade_count(m + 3);
    return exact_div((N - 1) * (N - 3) * (N - 7), 192, "(N-1)(N-3)(N-7)");
}

long long o_count(int m) {
    if (m < 0) throw std::domain_error("o_count needs m >= 0");
    return exact_div(s_count(m + 1), 7, "S(m+1)") - s_count(m);
}

std::vector<CountReport> consistency_check(int m_max) {
    if (m_max < 0 || m_max > 7) throw std::domain_error("consistency_check needs 0 <= m_max <= 7");
    std::vector<CountReport> out;
    for (int m = 0; m <= m_max; ++m) {
        CountReport r;
        r.m = m;
        int n = m + 3;
        r.N = pure_blade_count(n);
        r.H = h_count(n);
        r.S = s_count(m);
        r.O = o_count(m);
        r.Z = z_count(m);
        r.triad_total = r.N * (r.N - 1) * (r.N - 2) / 6;

        auto fail = [&r](const std::string& msg) {
            r.consistent = false;
            r.failures.push_back(msg);
        };
        if (r.Z != 12 * r.S) fail("Z != 12 S");
        if (s_count(m + 1) != 7 * (r.O + r.S)) fail("S(m+1) != 7 (O(m) + S(m))");
        if (m >= 1 && r.Z % 84 != 0) fail("Z not divisible by 84");
        if (r.N * (r.N - 1) * (r.N - 2) % 6 != 0) fail("C(N,3) not integral");
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace cdlab
