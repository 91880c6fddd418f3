// Unit tests for document serialization, figures, and length tables.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "picod/core.hpp"
#include "picod/schemes.hpp"
#include "picod/serialize.hpp"
#include "picod/verifier.hpp"

using namespace picod;

TEST_CASE("make_document freezes senders, assignment, and length") {
    BuiltScheme built = build(Instance{26, 6});
    SchemeDocument doc = make_document(built);
    CHECK(doc.m == 26);
    CHECK(doc.s == 6);
    CHECK(doc.length == 7);
    CHECK(doc.transmissions.size() == 7u);
    CHECK(doc.assignment.size() == 26u);
    for (const DocumentTransmission& t : doc.transmissions) {
        CHECK_FALSE(t.support.empty());
        CHECK(t.sender >= 1);
        CHECK(t.sender <= 26);
        CHECK(std::is_sorted(t.support.begin(), t.support.end()));
    }
    CHECK(doc.recipe.name == "large-m-rounds");
}

TEST_CASE("JSON round-trip is lossless") {
    for (auto [m, s] : std::vector<std::pair<int, int>>{
             {26, 6}, {26, 16}, {26, 20}, {9, 6}, {12, 4}, {10, 7}}) {
        SchemeDocument doc = make_document(build(Instance{m, s}));
        std::string text = to_json(doc);
        SchemeDocument back = document_from_json(text);
        CHECK(back.m == doc.m);
        CHECK(back.s == doc.s);
        CHECK(back.length == doc.length);
        CHECK(back.assignment == doc.assignment);
        CHECK(back.recipe.name == doc.recipe.name);
        CHECK(back.recipe.params == doc.recipe.params);
        REQUIRE(back.transmissions.size() == doc.transmissions.size());
        for (size_t t = 0; t < doc.transmissions.size(); ++t) {
            CHECK(back.transmissions[t].support == doc.transmissions[t].support);
            CHECK(back.transmissions[t].sender == doc.transmissions[t].sender);
        }
        CHECK(to_json(back) == text);
    }
}

TEST_CASE("scheme_from_document reproduces the verified scheme") {
    SchemeDocument doc = make_document(build(Instance{26, 16}));
    Scheme sch = scheme_from_document(doc);
    VerificationReport rep = verify(sch);
    CHECK(rep.valid);
    REQUIRE(rep.assignment.has_value());
    CHECK(*rep.assignment == doc.assignment);
    for (size_t t = 0; t < sch.transmissions.size(); ++t) {
        REQUIRE(sch.transmissions[t].sender.has_value());
        CHECK(*sch.transmissions[t].sender == doc.transmissions[t].sender);
    }
}

TEST_CASE("malformed documents raise field-path diagnostics") {
    CHECK_THROWS_AS(document_from_json("not json"), input_error);
    CHECK_THROWS_AS(document_from_json("{}"), input_error);
    CHECK_THROWS_AS(document_from_json(R"({"m": 9, "s": 4})"), input_error);
    CHECK_THROWS_AS(
        document_from_json(
            R"({"m": 9, "s": 4, "transmissions": [{"support": [], "sender": 1}],
                "assignment": [], "recipe": {"name": "x", "params": []},
                "length": 1})"),
        input_error);
}

TEST_CASE("ascii figure lays out X rows and U rows over m columns") {
    BuiltScheme built = build(Instance{26, 6});
    VerificationReport rep = verify(built.scheme);
    std::string fig = to_ascii_figure(built.scheme, rep);

    int x_rows = 0, u_rows = 0;
    size_t pos = 0;
    std::vector<std::string> lines;
    while (pos < fig.size()) {
        size_t nl = fig.find('\n', pos);
        if (nl == std::string::npos) nl = fig.size();
        lines.push_back(fig.substr(pos, nl - pos));
        pos = nl + 1;
    }
    int u_total = 0;
    for (const std::string& line : lines) {
        if (line.find('X') != std::string::npos) ++x_rows;
        if (line.find('U') != std::string::npos) {
            ++u_rows;
            for (char ch : line) u_total += ch == 'U';
        }
    }
    CHECK(x_rows == 7);
    CHECK(u_rows == 7);
    CHECK(u_total == 26);  // every user satisfied exactly once
}

TEST_CASE("make_table covers the grid and counts no mismatches") {
    std::vector<TableRow> rows = make_table(6, 6, 13, 48);
    CHECK_FALSE(rows.empty());
    int mismatches = 0;
    for (const TableRow& r : rows) {
        CHECK(r.s == 6);
        CHECK(r.m >= 13);
        CHECK(r.m <= 48);
        if (!r.match) ++mismatches;
        if (r.regime == Regime::LargeM) {
            int rr = r.m / 12, v = r.m % 12;
            int extra = v == 0 ? 0 : v == 1 ? 2 : v == 2 ? 1 : v == 3 ? 3
                        : v <= 6 ? 2 : v <= 10 ? 3 : 4;
            CHECK(r.length == 3 * rr + extra);
        }
    }
    CHECK(mismatches == 0);

    std::string tsv = table_to_tsv(rows);
    CHECK(tsv.find("m\ts\tregime\tlength\tformula\tmatch") != std::string::npos);
    CHECK(tsv.find("mismatches: 0") != std::string::npos);
}

TEST_CASE("table rows are sorted by (s, m) and skip infeasible instances") {
    std::vector<TableRow> rows = make_table(3, 5, 6, 20);
    int prev_s = -1, prev_m = -1;
    for (const TableRow& r : rows) {
        CHECK(classify(Instance{r.m, r.s}).feasible());
        bool ordered = r.s > prev_s || (r.s == prev_s && r.m > prev_m);
        CHECK(ordered);
        prev_s = r.s;
        prev_m = r.m;
    }
}
