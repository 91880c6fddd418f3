// picod — classify, build, verify, tabulate, and exhaustively certify
// GF(2) schemes for pliable index coding with circular side information.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "picod/core.hpp"
#include "picod/oracle.hpp"
#include "picod/schemes.hpp"
#include "picod/serialize.hpp"
#include "picod/verifier.hpp"

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInternal = 3;
constexpr int kExitInvalid = 4;
constexpr int kExitUnknown = 5;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw picod::input_error("cannot open output file: " + out_path);
    f << text;
}

int cmd_classify(int m, int s, const std::string& format,
                 const std::string& out_path) {
    picod::Instance inst(m, s);
    picod::Classification c = picod::classify(inst);
    if (format == "json") {
        ojson j;
        j["m"] = m;
        j["s"] = s;
        j["feasible"] = c.feasible();
        j["regime"] = picod::regime_name(c.tag);
        j["reason"] =
            c.reason ? ojson(picod::reason_name(*c.reason)) : ojson(nullptr);
        j["description"] = picod::describe(c);
        emit(j.dump(2) + "\n", out_path);
    } else {
        emit(picod::describe(c) + "\n", out_path);
    }
    return c.feasible() ? kExitOk : kExitInfeasible;
}

int cmd_build(int m, int s, const std::string& format,
              const std::string& out_path) {
    picod::Instance inst(m, s);
    picod::BuiltScheme built = picod::build(inst);
    picod::SchemeDocument doc = picod::make_document(built);
    if (format == "ascii") {
        picod::VerificationReport rep = picod::verify(built.scheme);
        emit(picod::to_ascii_figure(built.scheme, rep), out_path);
    } else {
        emit(picod::to_json(doc), out_path);
    }
    return kExitOk;
}

ojson report_to_json(const picod::VerificationReport& rep) {
    ojson j;
    j["decentralized"] = rep.decentralized_ok;
    j["correct"] = rep.correct;
    j["secure"] = rep.secure;
    j["valid"] = rep.valid;
    j["assignment"] = rep.assignment ? ojson(*rep.assignment) : ojson(nullptr);
    ojson senders = ojson::array();
    for (const auto& sd : rep.senders)
        senders.push_back(sd ? ojson(*sd) : ojson(nullptr));
    j["senders"] = std::move(senders);
    j["decodable"] = rep.decodable;
    return j;
}

int cmd_verify(const std::string& path, const std::string& format,
               const std::string& out_path) {
    std::ifstream f(path);
    if (!f) throw picod::input_error("cannot open document: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    picod::SchemeDocument doc = picod::document_from_json(buf.str());
    picod::Scheme scheme = picod::scheme_from_document(doc);
    picod::VerificationReport rep = picod::verify(scheme);

    if (format == "json") {
        emit(report_to_json(rep).dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "decentralized: " << (rep.decentralized_ok ? "yes" : "no")
            << "\ncorrect: " << (rep.correct ? "yes" : "no")
            << "\nsecure: " << (rep.secure ? "yes" : "no")
            << "\nvalid: " << (rep.valid ? "yes" : "no") << '\n';
        for (std::size_t i = 0; i < rep.decodable.size(); ++i) {
            out << "user " << (i + 1) << ": {";
            for (std::size_t k = 0; k < rep.decodable[i].size(); ++k)
                out << (k ? "," : "") << rep.decodable[i][k];
            out << "}\n";
        }
        emit(out.str(), out_path);
    }
    return rep.valid ? kExitOk : kExitInvalid;
}

int cmd_table(int s_min, int s_max, int m_min, int m_max,
              const std::string& format, const std::string& out_path) {
    std::vector<picod::TableRow> rows =
        picod::make_table(s_min, s_max, m_min, m_max);
    if (format == "json") {
        ojson j = ojson::array();
        for (const auto& r : rows) {
            ojson row;
            row["m"] = r.m;
            row["s"] = r.s;
            row["regime"] = picod::regime_name(r.regime);
            row["length"] = r.length;
            row["formula"] = r.formula;
            row["match"] = r.match;
            j.push_back(std::move(row));
        }
        emit(j.dump(2) + "\n", out_path);
    } else {
        emit(picod::table_to_tsv(rows), out_path);
    }
    return kExitOk;
}

int cmd_oracle(int m, int s, int max_dim, int jobs,
               const std::string& out_path) {
    picod::Instance inst(m, s);
    if (max_dim <= 0) max_dim = m;
    picod::OracleResult res = picod::oracle_search(inst, max_dim, jobs);

    ojson j;
    j["m"] = m;
    j["s"] = s;
    j["note"] = "minimum over scalar binary linear schemes";
    switch (res.status) {
        case picod::OracleStatus::Feasible: j["status"] = "feasible"; break;
        case picod::OracleStatus::Infeasible:
            j["status"] = "infeasible";
            break;
        case picod::OracleStatus::Unknown: j["status"] = "unknown"; break;
    }
    j["min_length"] =
        res.min_length ? ojson(*res.min_length) : ojson(nullptr);
    if (res.witness) {
        ojson w = ojson::array();
        for (const auto& t : res.witness->transmissions)
            w.push_back(t.support);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["searched_up_to_dim"] = res.searched_up_to_dim;
    j["stats"] = {{"spaces_examined", res.stats.spaces_examined},
                  {"valid_found", res.stats.valid_found},
                  {"seconds", res.stats.seconds}};
    emit(j.dump(2) + "\n", out_path);

    switch (res.status) {
        case picod::OracleStatus::Feasible: return kExitOk;
        case picod::OracleStatus::Infeasible: return kExitInfeasible;
        case picod::OracleStatus::Unknown: return kExitUnknown;
    }
    return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Builder, verifier, and exhaustive-search oracle for secure "
        "decentralized pliable index coding with circular side information"};
    app.require_subcommand(1);

    int m = 0, s = 0;
    int s_min = 0, s_max = 0, m_min = 0, m_max = 0;
    int max_dim = 0, jobs = 1;
    std::uint64_t seed = picod::search_seed();
    std::string format, out_path, doc_path;

    CLI::App* c_classify =
        app.add_subcommand("classify", "Classify an (m, s) instance");
    c_classify->add_option("m", m, "number of messages")->required();
    c_classify->add_option("s", s, "side-information window size")->required();
    c_classify->add_option("--format", format, "output format (json|ascii)");
    c_classify->add_option("--out", out_path, "write output to a file");

    CLI::App* c_build = app.add_subcommand(
        "build", "Construct a valid scheme and print its document");
    c_build->add_option("m", m, "number of messages")->required();
    c_build->add_option("s", s, "side-information window size")->required();
    c_build->add_option("--format", format, "output format (json|ascii)");
    c_build->add_option("--seed", seed, "seed for the fallback search")
        ->envname("PICOD_SEED");
    c_build->add_option("--out", out_path, "write output to a file");

    CLI::App* c_verify =
        app.add_subcommand("verify", "Verify a scheme document");
    c_verify->add_option("path", doc_path, "scheme document (JSON)")
        ->required();
    c_verify->add_option("--format", format, "output format (json|ascii)");
    c_verify->add_option("--out", out_path, "write output to a file");

    CLI::App* c_table = app.add_subcommand(
        "table", "Built lengths versus closed forms over a grid");
    c_table->add_option("s_min", s_min, "smallest s")->required();
    c_table->add_option("s_max", s_max, "largest s")->required();
    c_table->add_option("m_min", m_min, "smallest m")->required();
    c_table->add_option("m_max", m_max, "largest m")->required();
    c_table->add_option("--format", format, "output format (tsv|json)");
    c_table->add_option("--out", out_path, "write output to a file");

    CLI::App* c_oracle = app.add_subcommand(
        "oracle", "Exhaustive minimum-length search (m <= 10)");
    c_oracle->add_option("m", m, "number of messages")->required();
    c_oracle->add_option("s", s, "side-information window size")->required();
    c_oracle->add_option("--max-dim", max_dim,
                         "search cap on the scheme dimension (default m)");
    c_oracle->add_option("--jobs", jobs, "worker threads");
    c_oracle->add_option("--out", out_path, "write output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        picod::set_search_seed(seed);
        if (c_classify->parsed())
            return cmd_classify(m, s, format, out_path);
        if (c_build->parsed()) return cmd_build(m, s, format, out_path);
        if (c_verify->parsed())
            return cmd_verify(doc_path, format, out_path);
        if (c_table->parsed())
            return cmd_table(s_min, s_max, m_min, m_max, format, out_path);
        if (c_oracle->parsed())
            return cmd_oracle(m, s, max_dim, jobs, out_path);
    } catch (const picod::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const picod::ConstructionError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const picod::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const picod::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
