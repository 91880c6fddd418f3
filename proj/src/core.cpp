#include "picod/core.hpp"

#include <bit>

namespace picod {

int mod1(long long x, int m) {
    long long r = x % m;
    if (r <= 0) r += m;
    return static_cast<int>(r);
}

Instance::Instance(int m_, int s_) : m(m_), s(s_), p(m_ - s_) {
    if (m < 2) throw input_error("instance: m must be at least 2");
    if (s < 1 || s > m - 1)
        throw input_error("instance: s must satisfy 1 <= s <= m-1");
}

std::vector<int> side_info(const Instance& inst, int i) {
    if (i < 1 || i > inst.m) throw input_error("side_info: user out of range");
    std::vector<int> out;
    out.reserve(inst.s);
    for (int k = inst.s - 1; k >= 0; --k) out.push_back(mod1(i - k, inst.m));
    return out;
}

std::vector<int> complement(const Instance& inst, int i) {
    if (i < 1 || i > inst.m)
        throw input_error("complement: user out of range");
    std::vector<int> out;
    out.reserve(inst.p);
    for (int k = 1; k <= inst.p; ++k) out.push_back(mod1(i + k, inst.m));
    return out;
}

int min_circular_window_mask(int m, std::uint32_t mask) {
    if (mask == 0)
        throw input_error("min_circular_window: empty support");
    std::uint32_t all = (m >= 32) ? ~0u : ((1u << m) - 1);
    if ((mask & ~all) != 0)
        throw input_error("min_circular_window: index out of range");
    if (mask == all) return m;
    // The shortest covering window is m minus the longest circular run of
    // absent indices.
    int longest_gap = 0, current = 0;
    // Walk two laps so a gap wrapping the m/1 boundary is seen contiguously;
    // gaps are < m since mask != 0, so two laps suffice.
    for (int t = 0; t < 2 * m; ++t) {
        if (mask & (1u << (t % m))) {
            current = 0;
        } else {
            ++current;
            if (current > longest_gap) longest_gap = current;
        }
    }
    if (longest_gap > m) longest_gap = m;
    return m - longest_gap;
}

int min_circular_window(int m, const std::vector<int>& support) {
    if (support.empty())
        throw input_error("min_circular_window: empty support");
    if (m <= 32) {
        std::uint32_t mask = 0;
        for (int j : support) {
            if (j < 1 || j > m)
                throw input_error("min_circular_window: index out of range");
            mask |= 1u << (j - 1);
        }
        return min_circular_window_mask(m, mask);
    }
    std::vector<char> present(m + 1, 0);
    for (int j : support) {
        if (j < 1 || j > m)
            throw input_error("min_circular_window: index out of range");
        present[j] = 1;
    }
    int count = 0;
    for (int j = 1; j <= m; ++j) count += present[j];
    if (count == m) return m;
    int longest_gap = 0, current = 0;
    for (int t = 0; t < 2 * m; ++t) {
        if (present[1 + (t % m)]) {
            current = 0;
        } else {
            ++current;
            if (current > longest_gap) longest_gap = current;
        }
    }
    if (longest_gap > m) longest_gap = m;
    return m - longest_gap;
}

Classification classify(const Instance& inst) {
    const int m = inst.m, s = inst.s, p = inst.p;
    if (m % p == 0) return {Regime::Divisible, std::nullopt};
    const bool odd_m = (m % 2 == 1);
    if ((s == 1 || s == 2) && m >= 2 * s + 1)
        return {Regime::Infeasible, InfeasibleReason::S1or2};
    if ((s == 3 || s == 4) && odd_m && m >= 7)
        return {Regime::Infeasible, InfeasibleReason::S3or4OddM};
    if (s == m - 2 && odd_m)
        return {Regime::Infeasible, InfeasibleReason::SEqMminus2OddM};
    if (s == 3 || s == 4) return {Regime::EdgeSmallS, std::nullopt};
    if (p == 3) return {Regime::EdgeLargeS, std::nullopt};
    if (m > 2 * s) return {Regime::LargeM, std::nullopt};
    // Here s >= 5, p >= 4, s < m < 2s; the gap boundary is m <=> 3s/2.
    if (2 * m <= 3 * s) return {Regime::NarrowGap, std::nullopt};
    return {Regime::WideGap, std::nullopt};
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Infeasible: return "infeasible";
        case Regime::Divisible: return "divisible";
        case Regime::LargeM: return "large-m";
        case Regime::NarrowGap: return "narrow-gap";
        case Regime::WideGap: return "wide-gap";
        case Regime::EdgeSmallS: return "edge-small-s";
        case Regime::EdgeLargeS: return "edge-large-s";
    }
    return "?";
}

const char* reason_name(InfeasibleReason r) {
    switch (r) {
        case InfeasibleReason::S1or2: return "S1or2";
        case InfeasibleReason::S3or4OddM: return "S3or4OddM";
        case InfeasibleReason::SEqMminus2OddM: return "SEqMminus2OddM";
    }
    return "?";
}

std::string describe(const Classification& c) {
    if (c.tag == Regime::Infeasible) {
        switch (*c.reason) {
            case InfeasibleReason::S1or2:
                return "infeasible: s in {1,2} with m >= 2s+1";
            case InfeasibleReason::S3or4OddM:
                return "infeasible: odd m, s in {3,4}";
            case InfeasibleReason::SEqMminus2OddM:
                return "infeasible: odd m, s = m-2";
        }
    }
    switch (c.tag) {
        case Regime::Divisible: return "feasible: divisible";
        case Regime::LargeM: return "feasible: large-m regime";
        case Regime::NarrowGap: return "feasible: narrow-gap regime";
        case Regime::WideGap: return "feasible: wide-gap regime";
        case Regime::EdgeSmallS: return "feasible: small-s edge regime";
        case Regime::EdgeLargeS: return "feasible: large-s edge regime";
        default: return "?";
    }
}

}  // namespace picod
