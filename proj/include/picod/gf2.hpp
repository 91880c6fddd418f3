// gf2.hpp — bit-vector and bit-matrix algebra over GF(2): reduced row
// echelon form, rank, span membership, and column-restricted projections.
//
// Column positions in the public API are 1-based, matching the message
// indexing used by the rest of the library. Values have plain value
// semantics; all operations are pure.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace picod::gf2 {

struct BitVec {
    int width = 0;
    std::vector<std::uint64_t> words;

    BitVec() = default;
    explicit BitVec(int width_);

    // Bit positions are 1-based: pos in [1, width].
    bool get(int pos) const;
    void set(int pos, bool value = true);

    void xor_with(const BitVec& other);  // widths must match
    bool is_zero() const;
    int popcount() const;

    // 1-based position of the lowest set bit, or 0 if the vector is zero.
    int lowest_set() const;

    bool operator==(const BitVec& other) const = default;

    // "1011" reads left to right as positions 1..width.
    static BitVec from_string(const std::string& bits);
    std::string to_string() const;
};

struct BitMatrix {
    int width = 0;
    std::vector<BitVec> rows;

    BitMatrix() = default;
    explicit BitMatrix(int width_) : width(width_) {}

    void add_row(const BitVec& v);  // width must match
    int row_count() const { return static_cast<int>(rows.size()); }

    bool operator==(const BitMatrix& other) const = default;

    static BitMatrix from_strings(const std::vector<std::string>& rows);
};

// Reduced row echelon form: pivot positions strictly increasing, each pivot
// column has a single 1, zero rows removed. Row space is preserved.
BitMatrix rref(const BitMatrix& m);

int rank(const BitMatrix& m);

// True iff v lies in the row space of m (v reduces to zero against rref(m)).
bool in_span(const BitMatrix& m, const BitVec& v);

// Rows of m restricted to the listed 1-based columns, in the listed order.
// Zero rows are retained. Columns must be distinct and in range.
BitMatrix project(const BitMatrix& m, const std::vector<int>& cols);

// The set { j : unit vector e_j is in the row space of m }, ascending,
// computed by reducing each e_j against rref(m).
std::vector<int> unit_rows_in_span(const BitMatrix& m);

}  // namespace picod::gf2
