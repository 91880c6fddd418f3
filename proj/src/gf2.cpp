#include "picod/gf2.hpp"

#include <algorithm>
#include <bit>

#include "picod/core.hpp"

namespace picod::gf2 {

namespace {
constexpr int kWordBits = 64;

int word_count(int width) { return (width + kWordBits - 1) / kWordBits; }
}  // namespace

BitVec::BitVec(int width_) : width(width_), words(word_count(width_), 0) {
    if (width_ < 0) throw input_error("bitvec: negative width");
}

bool BitVec::get(int pos) const {
    if (pos < 1 || pos > width) throw input_error("bitvec: position out of range");
    return (words[(pos - 1) / kWordBits] >> ((pos - 1) % kWordBits)) & 1u;
}

void BitVec::set(int pos, bool value) {
    if (pos < 1 || pos > width) throw input_error("bitvec: position out of range");
    std::uint64_t bit = std::uint64_t{1} << ((pos - 1) % kWordBits);
    if (value)
        words[(pos - 1) / kWordBits] |= bit;
    else
        words[(pos - 1) / kWordBits] &= ~bit;
}

void BitVec::xor_with(const BitVec& other) {
    if (width != other.width) throw input_error("bitvec: width mismatch");
    for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= other.words[w];
}

bool BitVec::is_zero() const {
    for (std::uint64_t w : words)
        if (w != 0) return false;
    return true;
}

int BitVec::popcount() const {
    int n = 0;
    for (std::uint64_t w : words) n += std::popcount(w);
    return n;
}

int BitVec::lowest_set() const {
    for (std::size_t w = 0; w < words.size(); ++w)
        if (words[w] != 0)
            return static_cast<int>(w) * kWordBits + std::countr_zero(words[w]) + 1;
    return 0;
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(static_cast<int>(bits.size()));
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1')
            v.set(static_cast<int>(k) + 1);
        else if (bits[k] != '0')
            throw input_error("bitvec: string must be over {0,1}");
    }
    return v;
}

std::string BitVec::to_string() const {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int pos = 1; pos <= width; ++pos)
        if (get(pos)) out[static_cast<std::size_t>(pos) - 1] = '1';
    return out;
}

void BitMatrix::add_row(const BitVec& v) {
    if (v.width != width) throw input_error("bitmatrix: row width mismatch");
    rows.push_back(v);
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& row_strings) {
    BitMatrix m;
    if (row_strings.empty()) return m;
    m.width = static_cast<int>(row_strings.front().size());
    for (const auto& r : row_strings) m.add_row(BitVec::from_string(r));
    return m;
}

BitMatrix rref(const BitMatrix& m) {
    std::vector<BitVec> rows = m.rows;
    std::vector<int> pivots;  // pivot position of each settled row
    std::size_t settled = 0;
    for (int col = 1; col <= m.width && settled < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = settled; r < rows.size(); ++r) {
            if (rows[r].get(col)) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[settled], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != settled && rows[r].get(col)) rows[r].xor_with(rows[settled]);
        pivots.push_back(col);
        ++settled;
    }
    BitMatrix out(m.width);
    for (std::size_t r = 0; r < settled; ++r) out.add_row(rows[r]);
    return out;
}

int rank(const BitMatrix& m) { return rref(m).row_count(); }

bool in_span(const BitMatrix& m, const BitVec& v) {
    if (v.width != m.width) throw input_error("in_span: width mismatch");
    BitVec residue = v;
    for (const BitVec& row : rref(m).rows) {
        int pivot = row.lowest_set();
        if (pivot != 0 && residue.get(pivot)) residue.xor_with(row);
    }
    return residue.is_zero();
}

BitMatrix project(const BitMatrix& m, const std::vector<int>& cols) {
    std::vector<char> seen(static_cast<std::size_t>(m.width) + 1, 0);
    for (int c : cols) {
        if (c < 1 || c > m.width)
            throw input_error("project: column out of range");
        if (seen[static_cast<std::size_t>(c)]++)
            throw input_error("project: duplicate column");
    }
    BitMatrix out(static_cast<int>(cols.size()));
    for (const BitVec& row : m.rows) {
        BitVec v(out.width);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (row.get(cols[k])) v.set(static_cast<int>(k) + 1);
        out.add_row(v);
    }
    return out;
}

std::vector<int> unit_rows_in_span(const BitMatrix& m) {
    BitMatrix r = rref(m);
    std::vector<int> out;
    for (int j = 1; j <= m.width; ++j) {
        BitVec unit(m.width);
        unit.set(j);
        // Reduce e_j against the echelon rows rather than looking for a
        // literal unit row of the input.
        for (const BitVec& row : r.rows) {
            int pivot = row.lowest_set();
            if (unit.get(pivot)) unit.xor_with(row);
        }
        if (unit.is_zero()) out.push_back(j);
    }
    return out;
}

}  // namespace picod::gf2
