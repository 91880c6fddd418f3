// serialize.hpp — the interchange document for schemes plus its JSON,
// ASCII-figure, and TSV renderings.
#pragma once

#include <string>
#include <vector>

#include "picod/schemes.hpp"
#include "picod/verifier.hpp"

namespace picod {

struct DocumentTransmission {
    std::vector<int> support;  // sorted ascending, 1-based
    int sender = 0;            // 1-based user index
};

struct SchemeDocument {
    int m = 0;
    int s = 0;
    std::vector<DocumentTransmission> transmissions;
    std::vector<int> assignment;  // m entries, assignment[i-1] = d_i
    SchemeRecipe recipe;
    int length = 0;
};

// Verifies the built scheme and freezes resolved senders and the
// assignment into a document. Throws ConstructionError if the scheme does
// not verify as valid.
SchemeDocument make_document(const BuiltScheme& built);

std::string to_json(const SchemeDocument& doc);

// Throws input_error with a field-path diagnostic on malformed input.
SchemeDocument document_from_json(const std::string& text);

// Rebuilds a Scheme (with pinned senders) from a document.
Scheme scheme_from_document(const SchemeDocument& doc);

// Plain-text figure: per transmission, a row of m columns with 'X' at the
// support positions, followed by a row with 'U' under every user that this
// transmission satisfies (a user belongs to the first transmission, in
// scheme order, appearing in the XOR combination that decodes its assigned
// message).
std::string to_ascii_figure(const Scheme& scheme,
                            const VerificationReport& report);

struct TableRow {
    int m = 0;
    int s = 0;
    Regime regime = Regime::Infeasible;
    int length = 0;
    std::string formula;
    bool match = false;
};

// One row per feasible instance in the (inclusive) ranges, sorted by
// (s, m); `match` compares the built length to the closed form for the
// instance's regime.
std::vector<TableRow> make_table(int s_min, int s_max, int m_min, int m_max);

// Stable column order: m, s, regime, length, formula, match; final summary
// line reports the mismatch count.
std::string table_to_tsv(const std::vector<TableRow>& rows);

}  // namespace picod
