#include "picod/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "picod/gf2.hpp"

namespace picod {

using ojson = nlohmann::ordered_json;

SchemeDocument make_document(const BuiltScheme& built) {
    VerificationReport report = verify(built.scheme);
    if (!report.valid)
        throw ConstructionError("make_document: scheme is not valid");
    SchemeDocument doc;
    doc.m = built.scheme.instance.m;
    doc.s = built.scheme.instance.s;
    doc.length = built.scheme.length();
    doc.recipe = built.recipe;
    doc.assignment = *report.assignment;
    for (std::size_t t = 0; t < built.scheme.transmissions.size(); ++t) {
        DocumentTransmission dt;
        dt.support = built.scheme.transmissions[t].support;
        dt.sender = *report.senders[t];
        doc.transmissions.push_back(std::move(dt));
    }
    return doc;
}

std::string to_json(const SchemeDocument& doc) {
    ojson j;
    j["m"] = doc.m;
    j["s"] = doc.s;
    j["length"] = doc.length;
    j["transmissions"] = ojson::array();
    for (const DocumentTransmission& dt : doc.transmissions) {
        ojson t;
        t["support"] = dt.support;
        t["sender"] = dt.sender;
        j["transmissions"].push_back(std::move(t));
    }
    j["assignment"] = doc.assignment;
    ojson params = ojson::object();
    for (const auto& [key, value] : doc.recipe.params) params[key] = value;
    j["recipe"] = {{"name", doc.recipe.name}, {"params", std::move(params)}};
    return j.dump(2) + "\n";
}

namespace {

const ojson& need(const ojson& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(path + "." + key + ": missing field");
    return *it;
}

int need_int(const ojson& j, const std::string& path) {
    if (!j.is_number_integer())
        throw input_error(path + ": expected an integer");
    return j.get<int>();
}

std::vector<int> need_int_array(const ojson& j, const std::string& path) {
    if (!j.is_array()) throw input_error(path + ": expected an array");
    std::vector<int> out;
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(
            need_int(j[k], path + "[" + std::to_string(k) + "]"));
    return out;
}

}  // namespace

SchemeDocument document_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("document: ") + e.what());
    }
    if (!j.is_object()) throw input_error("document: expected a JSON object");

    SchemeDocument doc;
    doc.m = need_int(need(j, "m", "document"), "document.m");
    doc.s = need_int(need(j, "s", "document"), "document.s");
    doc.length = need_int(need(j, "length", "document"), "document.length");

    const ojson& txs = need(j, "transmissions", "document");
    if (!txs.is_array())
        throw input_error("document.transmissions: expected an array");
    for (std::size_t t = 0; t < txs.size(); ++t) {
        const std::string path =
            "document.transmissions[" + std::to_string(t) + "]";
        const ojson& jt = txs[t];
        if (!jt.is_object()) throw input_error(path + ": expected an object");
        DocumentTransmission dt;
        dt.support = need_int_array(need(jt, "support", path),
                                    path + ".support");
        dt.sender = need_int(need(jt, "sender", path), path + ".sender");
        doc.transmissions.push_back(std::move(dt));
    }

    doc.assignment = need_int_array(need(j, "assignment", "document"),
                                    "document.assignment");

    const ojson& jr = need(j, "recipe", "document");
    if (!jr.is_object())
        throw input_error("document.recipe: expected an object");
    const ojson& jn = need(jr, "name", "document.recipe");
    if (!jn.is_string())
        throw input_error("document.recipe.name: expected a string");
    doc.recipe.name = jn.get<std::string>();
    const ojson& jp = need(jr, "params", "document.recipe");
    if (!jp.is_object())
        throw input_error("document.recipe.params: expected an object");
    for (auto it = jp.begin(); it != jp.end(); ++it) {
        if (!it.value().is_number_integer())
            throw input_error("document.recipe.params." + it.key() +
                              ": expected an integer");
        doc.recipe.params.emplace_back(it.key(),
                                       it.value().get<long long>());
    }
    doc.recipe.expected_length = doc.length;
    return doc;
}

Scheme scheme_from_document(const SchemeDocument& doc) {
    Instance inst(doc.m, doc.s);
    Scheme sch{inst, {}};
    for (const DocumentTransmission& dt : doc.transmissions) {
        Transmission t(dt.support);
        t.sender = dt.sender;
        sch.transmissions.push_back(std::move(t));
    }
    return sch;
}

namespace {

// For each satisfied user, the transmissions XOR'd to decode its assigned
// message, found by eliminating the complement projection with combination
// bookkeeping; the user is attributed to the first transmission involved.
std::vector<int> attribution(const Scheme& scheme,
                             const VerificationReport& report) {
    const Instance& inst = scheme.instance;
    const int ell = scheme.length();
    std::vector<int> owner(static_cast<std::size_t>(inst.m), 0);
    if (!report.assignment) return owner;

    gf2::BitMatrix gen = generator(scheme);
    for (int i = 1; i <= inst.m; ++i) {
        std::vector<int> comp = complement(inst, i);
        const int p = static_cast<int>(comp.size());
        gf2::BitMatrix proj = gf2::project(gen, comp);
        // Augmented rows [projection | transmission tag], pivots restricted
        // to the projection columns.
        std::vector<gf2::BitVec> rows;
        std::vector<int> pivots;
        for (int t = 0; t < ell; ++t) {
            gf2::BitVec row(p + ell);
            for (int c = 1; c <= p; ++c)
                if (proj.rows[static_cast<std::size_t>(t)].get(c))
                    row.set(c, true);
            row.set(p + t + 1, true);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (row.get(pivots[k])) row.xor_with(rows[k]);
            int piv = 0;
            for (int c = 1; c <= p; ++c)
                if (row.get(c)) {
                    piv = c;
                    break;
                }
            if (piv != 0) {
                rows.push_back(row);
                pivots.push_back(piv);
            }
        }
        const int d = (*report.assignment)[static_cast<std::size_t>(i - 1)];
        auto pos = std::find(comp.begin(), comp.end(), d);
        if (pos == comp.end()) continue;
        gf2::BitVec v(p + ell);
        v.set(static_cast<int>(pos - comp.begin()) + 1, true);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (v.get(pivots[k])) v.xor_with(rows[k]);
        for (int t = 0; t < ell; ++t)
            if (v.get(p + t + 1)) {
                owner[static_cast<std::size_t>(i - 1)] = t + 1;
                break;
            }
    }
    return owner;
}

}  // namespace

std::string to_ascii_figure(const Scheme& scheme,
                            const VerificationReport& report) {
    const int m = scheme.instance.m;
    const int ell = scheme.length();
    std::vector<int> owner = attribution(scheme, report);

    std::ostringstream out;
    if (m >= 100) {
        for (int c = 1; c <= m; ++c)
            out << (c >= 100 ? char('0' + (c / 100) % 10) : ' ');
        out << '\n';
    }
    if (m >= 10) {
        for (int c = 1; c <= m; ++c)
            out << (c >= 10 ? char('0' + (c / 10) % 10) : ' ');
        out << '\n';
    }
    for (int c = 1; c <= m; ++c) out << char('0' + c % 10);
    out << '\n';

    for (int t = 1; t <= ell; ++t) {
        const auto& sup =
            scheme.transmissions[static_cast<std::size_t>(t - 1)].support;
        std::string xrow(static_cast<std::size_t>(m), '.');
        for (int j : sup) xrow[static_cast<std::size_t>(j - 1)] = 'X';
        out << xrow << '\n';
        std::string urow(static_cast<std::size_t>(m), '.');
        bool any = false;
        for (int i = 1; i <= m; ++i)
            if (owner[static_cast<std::size_t>(i - 1)] == t) {
                urow[static_cast<std::size_t>(i - 1)] = 'U';
                any = true;
            }
        if (any) out << urow << '\n';
    }
    return out.str();
}

std::vector<TableRow> make_table(int s_min, int s_max, int m_min, int m_max) {
    std::vector<TableRow> rows;
    for (int s = s_min; s <= s_max; ++s) {
        for (int m = m_min; m <= m_max; ++m) {
            if (s < 1 || m < 2 || s >= m) continue;
            Instance inst(m, s);
            Classification c = classify(inst);
            if (!c.feasible()) continue;
            LengthFormula f = length_formula(inst);
            TableRow row;
            row.m = m;
            row.s = s;
            row.regime = c.tag;
            row.formula = f.text;
            try {
                BuiltScheme built = build(inst);
                row.length = built.scheme.length();
                row.match = f.exact ? (row.length == f.value)
                                    : (row.length <= f.value);
            } catch (const ConstructionError&) {
                // No scheme exists (or none within the target bound); the
                // row stays in the table as a recorded mismatch.
                row.length = -1;
                row.match = false;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string table_to_tsv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "m\ts\tregime\tlength\tformula\tmatch\n";
    int mismatches = 0;
    for (const TableRow& r : rows) {
        if (!r.match) ++mismatches;
        out << r.m << '\t' << r.s << '\t' << regime_name(r.regime) << '\t';
        if (r.length < 0)
            out << '-';
        else
            out << r.length;
        out << '\t' << r.formula << '\t' << (r.match ? "yes" : "no") << '\n';
    }
    out << "# mismatches: " << mismatches << '\n';
    return out.str();
}

}  // namespace picod
