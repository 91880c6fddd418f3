#include "picod/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

namespace picod {
namespace {

// Reduced echelon basis over up to 10 bit positions, rows kept sorted by
// leading (most significant) bit, fully back-substituted. Reducing a
// vector against it yields the canonical representative of its coset, so
// equal residues mean equal cosets.
struct Echelon {
    std::array<std::uint16_t, 10> rows{};
    int n = 0;

    std::uint16_t reduce(std::uint16_t x) const {
        for (int k = 0; k < n && x; ++k) {
            std::uint16_t r = rows[k];
            std::uint16_t lead =
                static_cast<std::uint16_t>(1u << (std::bit_width(r) - 1));
            if (x & lead) x ^= r;
        }
        return x;
    }

    // x must already be reduced against the basis and nonzero.
    void insert(std::uint16_t x) {
        std::uint16_t lead =
            static_cast<std::uint16_t>(1u << (std::bit_width(x) - 1));
        for (int k = 0; k < n; ++k)
            if (rows[k] & lead) rows[k] ^= x;
        int pos = n;
        while (pos > 0 && std::bit_width(rows[pos - 1]) <
                              std::bit_width(static_cast<unsigned>(x))) {
            rows[pos] = rows[pos - 1];
            --pos;
        }
        rows[pos] = x;
        ++n;
    }
};

std::uint32_t rotr_m(std::uint32_t x, int sh, int m) {
    const std::uint32_t full = (1u << m) - 1;
    sh %= m;
    if (sh == 0) return x & full;
    return ((x >> sh) | (x << (m - sh))) & full;
}

// Exactly-one-decodable test for the row space described by the basis:
// every user's complement projection must contain exactly one unit vector
// in its span. Unit vectors in a span equal the weight-one rows of its
// fully reduced echelon form.
bool space_valid(const Echelon& basis, int m, int p) {
    for (int i = 1; i <= m; ++i) {
        Echelon proj;
        const std::uint16_t pmask = static_cast<std::uint16_t>((1u << p) - 1);
        for (int k = 0; k < basis.n; ++k) {
            std::uint16_t row = static_cast<std::uint16_t>(
                rotr_m(basis.rows[k], i, m) & pmask);
            row = proj.reduce(row);
            if (row) proj.insert(row);
        }
        int units = 0;
        for (int k = 0; k < proj.n; ++k)
            if (std::popcount(static_cast<unsigned>(proj.rows[k])) == 1)
                ++units;
        if (units != 1) return false;
    }
    return true;
}

struct SharedState {
    int m, p, max_dim;
    std::vector<std::uint16_t> windowed;
    std::atomic<int> best_dim;
    std::atomic<std::size_t> next{0};
    std::mutex merge_mx;
    int merged_best;
    std::vector<std::uint16_t> merged_seq;
    std::atomic<long long> spaces{0};
    std::atomic<long long> valids{0};
};

struct ThreadState {
    std::array<Echelon, 11> basis;
    std::array<std::uint16_t, 10> seq{};
    std::array<std::vector<std::uint16_t>, 11> kids;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    long long spaces = 0, valids = 0;
    int best = 0;
    std::vector<std::uint16_t> best_seq;
};

bool seq_less(int da, const std::uint16_t* a, int db,
              const std::uint16_t* b) {
    if (da != db) return da < db;
    for (int k = 0; k < da; ++k)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

void dfs(SharedState& sh, ThreadState& st, int depth) {
    ++st.spaces;
    int best_now = sh.best_dim.load(std::memory_order_relaxed);
    if (depth >= 1 && depth <= best_now &&
        space_valid(st.basis[static_cast<std::size_t>(depth)], sh.m, sh.p)) {
        ++st.valids;
        if (st.best == 0 ||
            seq_less(depth, st.seq.data(), st.best, st.best_seq.data())) {
            st.best = depth;
            st.best_seq.assign(st.seq.begin(), st.seq.begin() + depth);
        }
        int cur = sh.best_dim.load(std::memory_order_relaxed);
        while (depth < cur && !sh.best_dim.compare_exchange_weak(
                                  cur, depth, std::memory_order_relaxed)) {
        }
        best_now = sh.best_dim.load(std::memory_order_relaxed);
    }
    if (depth >= sh.max_dim || depth + 1 > best_now) return;

    const Echelon& basis = st.basis[static_cast<std::size_t>(depth)];
    const std::uint16_t last =
        depth > 0 ? st.seq[static_cast<std::size_t>(depth - 1)] : 0;
    auto& kids = st.kids[static_cast<std::size_t>(depth)];
    kids.clear();
    ++st.epoch;
    if (st.epoch == 0) {
        std::fill(st.stamp.begin(), st.stamp.end(), 0u);
        st.epoch = 1;
    }
    // A vector extends the canonical generating sequence exactly when it
    // is the first windowed vector (in ascending order) of a coset outside
    // the space, and follows the previous generator.
    for (std::uint16_t w : sh.windowed) {
        std::uint16_t res = basis.reduce(w);
        if (!res) continue;
        if (st.stamp[res] == st.epoch) continue;
        st.stamp[res] = st.epoch;
        if (w > last) kids.push_back(w);
    }
    for (std::uint16_t w : kids) {
        if (depth + 1 > sh.best_dim.load(std::memory_order_relaxed)) break;
        std::size_t d = static_cast<std::size_t>(depth);
        st.basis[d + 1] = st.basis[d];
        st.basis[d + 1].insert(st.basis[d].reduce(w));
        st.seq[d] = w;
        dfs(sh, st, depth + 1);
    }
}

void worker(SharedState& sh) {
    ThreadState st;
    st.stamp.assign(1u << sh.m, 0u);
    for (;;) {
        std::size_t k = sh.next.fetch_add(1, std::memory_order_relaxed);
        if (k >= sh.windowed.size()) break;
        std::uint16_t w = sh.windowed[k];
        st.basis[1] = Echelon{};
        st.basis[1].insert(w);
        st.seq[0] = w;
        dfs(sh, st, 1);
    }
    sh.spaces.fetch_add(st.spaces, std::memory_order_relaxed);
    sh.valids.fetch_add(st.valids, std::memory_order_relaxed);
    if (st.best > 0) {
        std::lock_guard<std::mutex> g(sh.merge_mx);
        if (sh.merged_best == 0 ||
            seq_less(st.best, st.best_seq.data(), sh.merged_best,
                     sh.merged_seq.data())) {
            sh.merged_best = st.best;
            sh.merged_seq = st.best_seq;
        }
    }
}

}  // namespace

OracleResult oracle_search(const Instance& inst, int max_dim, int jobs) {
    if (inst.m > 10)
        throw capacity_error("oracle_search: m must be at most 10");
    if (max_dim < 1) throw input_error("oracle_search: max_dim must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    SharedState sh;
    sh.m = inst.m;
    sh.p = inst.p;
    sh.max_dim = std::min(max_dim, inst.m);
    for (std::uint32_t x = 1; x < (1u << inst.m); ++x)
        if (min_circular_window_mask(inst.m, x) <= inst.s)
            sh.windowed.push_back(static_cast<std::uint16_t>(x));
    sh.best_dim.store(sh.max_dim + 1);
    sh.merged_best = 0;

    int nthreads = std::max(1, jobs);
    nthreads = std::min<int>(nthreads,
                             static_cast<int>(sh.windowed.size()) + 1);
    if (nthreads == 1) {
        worker(sh);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, std::ref(sh));
        for (auto& th : pool) th.join();
    }

    OracleResult out;
    out.searched_up_to_dim = sh.max_dim;
    out.stats.spaces_examined = sh.spaces.load() + 1;  // the empty space
    out.stats.valid_found = sh.valids.load();
    if (sh.merged_best > 0) {
        out.status = OracleStatus::Feasible;
        out.min_length = sh.merged_best;
        Scheme witness{inst, {}};
        for (std::uint16_t g : sh.merged_seq) {
            std::vector<int> sup;
            for (int j = 1; j <= inst.m; ++j)
                if (g & (1u << (j - 1))) sup.push_back(j);
            witness.transmissions.emplace_back(std::move(sup));
        }
        out.witness = std::move(witness);
    } else {
        out.status = (sh.max_dim >= inst.m) ? OracleStatus::Infeasible
                                            : OracleStatus::Unknown;
    }
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
}

CertifyReport certify_theorem1(int max_m, int jobs) {
    struct Probe {
        int m, s;
        bool infeasible;
    };
    static const Probe probes[] = {
        {3, 1, true},  {4, 1, true},  {5, 1, true},  {5, 2, true},
        {6, 2, true},  {7, 2, true},  {7, 3, true},  {9, 3, true},
        {7, 4, true},  {9, 4, true},  {5, 3, true},  {7, 5, true},
        {9, 7, true},  {8, 4, false}, {9, 5, false}, {9, 6, false},
    };
    CertifyReport report;
    report.all_ok = true;
    for (const Probe& pr : probes) {
        if (pr.m > max_m) continue;
        Instance inst(pr.m, pr.s);
        OracleResult res = oracle_search(inst, inst.m, jobs);
        CertifyRow row;
        row.m = pr.m;
        row.s = pr.s;
        row.expect_infeasible = pr.infeasible;
        row.got = res.status;
        row.min_length = res.min_length;
        row.ok = pr.infeasible ? (res.status == OracleStatus::Infeasible)
                               : (res.status == OracleStatus::Feasible);
        report.all_ok = report.all_ok && row.ok;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace picod
