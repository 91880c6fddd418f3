// Unit tests for the GF(2) bit-vector and bit-matrix kernel.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "picod/gf2.hpp"

using picod::gf2::BitMatrix;
using picod::gf2::BitVec;

namespace {

// All 2^k xor-combinations of the rows of m (k = row count; k <= 20).
std::set<std::string> explicit_span(const BitMatrix& m) {
    std::set<std::string> out;
    const int k = m.row_count();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        BitVec acc(m.width);
        for (int r = 0; r < k; ++r)
            if (mask >> r & 1u) acc.xor_with(m.rows[(size_t)r]);
        out.insert(acc.to_string());
    }
    return out;
}

BitMatrix random_matrix(std::mt19937& rng, int width, int rows) {
    BitMatrix m(width);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int r = 0; r < rows; ++r) {
        BitVec v(width);
        for (int c = 1; c <= width; ++c)
            if (bit(rng)) v.set(c);
        m.add_row(v);
    }
    return m;
}

}  // namespace

TEST_CASE("BitVec basics: bits, strings, xor") {
    BitVec v = BitVec::from_string("1011");
    CHECK(v.width == 4);
    CHECK(v.get(1));
    CHECK_FALSE(v.get(2));
    CHECK(v.get(3));
    CHECK(v.get(4));
    CHECK(v.to_string() == "1011");
    CHECK(v.popcount() == 3);
    CHECK(v.lowest_set() == 1);

    BitVec w = BitVec::from_string("0110");
    v.xor_with(w);
    CHECK(v.to_string() == "1101");

    BitVec z(4);
    CHECK(z.is_zero());
    CHECK(z.lowest_set() == 0);
    CHECK_FALSE(v.is_zero());

    BitVec wide(130);
    wide.set(1);
    wide.set(79);
    wide.set(130);
    CHECK(wide.popcount() == 3);
    CHECK(wide.get(79));
    CHECK_FALSE(wide.get(80));
    CHECK(wide.lowest_set() == 1);
}

TEST_CASE("rref canonical forms") {
    CHECK(rref(BitMatrix::from_strings({"110", "011"})) ==
          BitMatrix::from_strings({"101", "011"}));
    CHECK(rref(BitMatrix::from_strings({"000"})) == BitMatrix(3));
    CHECK(rref(BitMatrix::from_strings({"111", "111"})) ==
          BitMatrix::from_strings({"111"}));
    CHECK(rref(BitMatrix(5)) == BitMatrix(5));
}

TEST_CASE("rref structure: pivots ascend, pivot columns are singletons") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        BitMatrix m = random_matrix(rng, 11, 5);
        BitMatrix r = rref(m);
        int prev_pivot = 0;
        for (const BitVec& row : r.rows) {
            int piv = row.lowest_set();
            REQUIRE(piv > prev_pivot);
            prev_pivot = piv;
            int ones_in_col = 0;
            for (const BitVec& other : r.rows)
                if (other.get(piv)) ++ones_in_col;
            CHECK(ones_in_col == 1);
        }
    }
}

TEST_CASE("rref is idempotent and preserves the span") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        BitMatrix m = random_matrix(rng, 9, 4);
        BitMatrix r = rref(m);
        CHECK(rref(r) == r);
        CHECK(explicit_span(m) == explicit_span(r));
        CHECK(rank(m) == r.row_count());
    }
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix::from_strings({"110", "011"})) == 2);
    CHECK(rank(BitMatrix::from_strings({"110", "011", "101"})) == 2);
    CHECK(rank(BitMatrix::from_strings({"000"})) == 0);
    CHECK(rank(BitMatrix(4)) == 0);
}

TEST_CASE("in_span membership") {
    BitMatrix m = BitMatrix::from_strings({"101", "011"});
    CHECK(in_span(m, BitVec::from_string("110")));
    CHECK_FALSE(in_span(m, BitVec::from_string("100")));
    CHECK(in_span(m, BitVec::from_string("000")));

    // Exhaustive agreement with the explicit span.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        BitMatrix a = random_matrix(rng, 10, 4);
        auto span = explicit_span(a);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int probe = 0; probe < 16; ++probe) {
            BitVec v(10);
            for (int c = 1; c <= 10; ++c)
                if (bit(rng)) v.set(c);
            CHECK(in_span(a, v) == (span.count(v.to_string()) > 0));
        }
    }
}

TEST_CASE("project keeps listed columns in order, retains zero rows") {
    BitMatrix m = BitMatrix::from_strings({"1101", "0110"});
    CHECK(project(m, {2, 3}) == BitMatrix::from_strings({"10", "11"}));
    CHECK(project(m, {3, 2}) == BitMatrix::from_strings({"01", "11"}));
    CHECK(project(m, {1}) == BitMatrix::from_strings({"1", "0"}));

    BitMatrix z = BitMatrix::from_strings({"0011"});
    BitMatrix pz = project(z, {1, 2});
    REQUIRE(pz.row_count() == 1);
    CHECK(pz.rows[0].is_zero());
}

TEST_CASE("unit_rows_in_span finds units of the span, not of the row list") {
    CHECK(unit_rows_in_span(BitMatrix::from_strings({"110", "011"})).empty());
    // 110 xor 010 = 100: unit 1 appears only as a combination.
    CHECK(unit_rows_in_span(BitMatrix::from_strings({"110", "010"})) ==
          std::vector<int>{1, 2});
    CHECK(unit_rows_in_span(BitMatrix::from_strings({"100", "010", "001"})) ==
          std::vector<int>{1, 2, 3});
    CHECK(unit_rows_in_span(BitMatrix(6)).empty());

    // Agreement with the explicit span on random matrices.
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        BitMatrix m = random_matrix(rng, 9, 4);
        auto span = explicit_span(m);
        std::vector<int> expect;
        for (int j = 1; j <= 9; ++j) {
            BitVec e(9);
            e.set(j);
            if (span.count(e.to_string())) expect.push_back(j);
        }
        CHECK(unit_rows_in_span(m) == expect);
    }
}
