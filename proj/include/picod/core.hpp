// core.hpp — instance representation, circular index arithmetic, and the
// total feasibility/regime classification for (m, s) secure decentralized
// pliable index coding with circular side information.
//
// Conventions used across the library:
//   * message and user indices are 1-based; modular reduction maps 0 -> m;
//   * user i's side information A_i is the run {i-s+1, ..., i} (mod m);
//   * the complement of A_i is the run {i+1, ..., i+p} with p = m - s.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace picod {

// Thrown for arguments that violate a documented precondition.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an input is structurally fine but too large for the algorithm.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Reduce any integer to the 1-based circular range [1, m].
int mod1(long long x, int m);

struct Instance {
    int m;  // number of messages (= number of users)
    int s;  // side-information size, 1 <= s <= m-1
    int p;  // complement size, p = m - s >= 1

    Instance(int m_, int s_);
};

enum class Regime {
    Infeasible,
    Divisible,
    LargeM,
    NarrowGap,
    WideGap,
    EdgeSmallS,
    EdgeLargeS,
};

enum class InfeasibleReason {
    S1or2,           // s in {1,2} and m >= 2s+1
    S3or4OddM,       // s in {3,4}, odd m >= 7
    SEqMminus2OddM,  // s = m-2, odd m
};

struct Classification {
    Regime tag;
    std::optional<InfeasibleReason> reason;  // set iff tag == Infeasible

    bool feasible() const { return tag != Regime::Infeasible; }
};

// The s circularly consecutive indices ending at i, in ascending circular
// order from the run start (i-s+1, ..., i), each reduced to [1, m].
std::vector<int> side_info(const Instance& inst, int i);

// The p circularly consecutive indices starting at i+1, in ascending
// circular order (i+1, ..., i+p), each reduced to [1, m].
std::vector<int> complement(const Instance& inst, int i);

// Length of the shortest circular run of consecutive indices containing
// every element of `support` (elements in [1, m], support non-empty).
int min_circular_window(int m, const std::vector<int>& support);

// Mask variant: bit j-1 of `mask` represents index j. mask != 0 required.
int min_circular_window_mask(int m, std::uint32_t mask);

// Total, deterministic classification. Priority: validate, then Divisible
// (m mod p == 0), then the infeasibility list, then the regime tags.
Classification classify(const Instance& inst);

const char* regime_name(Regime r);
const char* reason_name(InfeasibleReason r);

// Human-readable one-liner, e.g. "infeasible: odd m, s in {3,4}" or
// "feasible: large-m regime".
std::string describe(const Classification& c);

}  // namespace picod
