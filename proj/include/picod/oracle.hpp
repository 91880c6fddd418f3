// oracle.hpp — exhaustive scalar-linear search for small m: certifies
// infeasibility claims and computes true minimum scalar binary linear code
// lengths.
//
// Validity of a code depends only on the row space of its generator, and
// any valid decentralized code reduces to an independent set of windowed
// rows spanning the same space; the minimum length therefore equals the
// minimum dimension over valid row spaces admitting a windowed generating
// set. The search enumerates exactly those row spaces, each once, via
// canonical greedy generating sequences.
#pragma once

#include <cstdint>
#include <optional>

#include "picod/core.hpp"
#include "picod/verifier.hpp"

namespace picod {

enum class OracleStatus { Feasible, Infeasible, Unknown };

struct OracleStats {
    std::uint64_t spaces_examined = 0;
    std::uint64_t valid_found = 0;
    double seconds = 0.0;
};

struct OracleResult {
    OracleStatus status = OracleStatus::Unknown;
    // Present iff Feasible: the minimum dimension and a windowed generating
    // set realizing it (verify(witness).valid is guaranteed).
    std::optional<int> min_length;
    std::optional<Scheme> witness;
    int searched_up_to_dim = 0;
    OracleStats stats;
};

// Enumerates every row space generable by windowed vectors up to dimension
// min(m, max_dim); m <= 10 required. Returns Feasible with the minimal
// valid space (ties broken by the lexicographically smallest canonical
// generating sequence, so the result is deterministic regardless of the
// number of jobs), Infeasible when the full enumeration (max_dim >= m)
// finds none, and Unknown when max_dim < m cut the search short.
OracleResult oracle_search(const Instance& inst, int max_dim, int jobs = 1);

struct CertifyRow {
    int m = 0;
    int s = 0;
    bool expect_infeasible = false;
    OracleStatus got = OracleStatus::Unknown;
    std::optional<int> min_length;
    bool ok = false;
};

struct CertifyReport {
    std::vector<CertifyRow> rows;
    bool all_ok = false;
};

// Runs oracle_search with max_dim = m over every infeasible-list instance
// with m <= max_m plus the feasible controls (8,4), (9,5), (9,6), and
// checks each outcome against its expectation.
CertifyReport certify_theorem1(int max_m = 9, int jobs = 1);

}  // namespace picod
