#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "storagecode/code.hpp"
#include "storagecode/families.hpp"
#include "storagecode/ideals.hpp"

using namespace storagecode;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 0xC0DEull;

// exit contract: 0 pass, 1 verification failure, 2 usage/parse, 3 I/O, 4 resource
int exit_code_for(errc k) {
    switch (k) {
        case errc::io: return 3;
        case errc::resource: return 4;
        case errc::repair_unsound: return 1;
        default: return 2;
    }
}

AlgebraElement load_element(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open " + path);
    return parse_polynomial(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot open " + path + " for writing");
    out << content;
    if (!out) fail(errc::io, "write to " + path + " failed");
}

FamilyInstance build_family(const std::string& name, int r, int k) {
    if (name == "hamming") return hamming_element(r);
    if (name == "seven_eighths") return seven_eighths_element(k);
    if (name == "generalized") return generalized_element(r, k);
    fail(errc::bad_parameter, "unknown family " + name);
}

std::string report_text(const CodeReport& rep) {
    std::ostringstream os;
    os << "arity            " << rep.arity << "\n";
    os << "code_length      " << rep.code_length << "\n";
    os << "code_dim         " << rep.code_dim << "\n";
    os << "rate             " << rep.rate.str() << " = " << rep.rate.to_double() << "\n";
    os << "triangle_free    " << (rep.triangle_free ? "true" : "false") << "\n";
    os << "degree           " << rep.degree << "\n";
    os << "edge_count       " << rep.edge_count << "\n";
    os << "ceiling          "
       << (rep.ceiling_from_necessary_conditions ? rep.ceiling_from_necessary_conditions->str()
                                                 : std::string("none"))
       << "\n";
    os << "edgeless         " << (rep.edgeless ? "true" : "false") << "\n";
    return os.str();
}

int cmd_family(const std::string& name, int r, int k, const std::string& out_path) {
    FamilyInstance inst = build_family(name, r, k);
    const std::string poly = format_polynomial(inst.element) + "\n";
    const std::string sidecar = instance_json(inst) + "\n";
    if (out_path.empty()) {
        std::cout << poly << sidecar;
    } else {
        write_file(out_path, poly);
        write_file(out_path + ".json", sidecar);
        std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
    }
    return 0;
}

int cmd_rate(const std::string& in_path, int max_k, bool as_json, const std::string& out_path) {
    AlgebraElement f = load_element(in_path);
    ConnectionSet s = connection_set_from_element(f);
    CodeReport rep = code_rate(s, max_k);
    const std::string body = as_json ? report_json(rep) : report_text(rep);
    if (out_path.empty())
        std::cout << body;
    else
        write_file(out_path, body);
    return 0;
}

int cmd_verify(const std::string& in_path, std::uint64_t seed, int samples, int max_k,
               bool as_json) {
    AlgebraElement f = load_element(in_path);
    ConnectionSet s = connection_set_from_element(f);

    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;

    const bool tf = is_triangle_free(s);
    checks.push_back({"triangle_free", tf, tf ? "no dependent triple" : "dependent triple found"});

    auto ceiling = necessary_conditions(s, max_k);
    checks.push_back({"necessary_conditions", true,
                      ceiling ? "ceiling " + ceiling->str() : "no condition applies"});

    CodeAnalysis an = analyze_code(s, true);
    const std::size_t dim = an.code->dim();
    std::size_t bad = 0;
    const auto words = sample_codewords(*an.code, std::size_t(samples), seed);
    for (const auto& c : words)
        if (!check_storage_property(s, c)) ++bad;
    checks.push_back({"storage_property",
                      bad == 0,
                      std::to_string(words.size()) + " sampled codewords, " + std::to_string(bad) +
                          " failures, seed " + std::to_string(seed)});

    // multiplication-operator route must agree with the coset-matrix route
    const std::size_t idim = ideal_dim(principal_ideal(f));
    const std::size_t adim = annihilator_dim(f);
    const bool rank_ok = idim == an.rank;
    const bool ann_ok = adim == s.vertex_count() - an.rank;
    checks.push_back({"rank_equals_ideal_dim", rank_ok,
                      "rank " + std::to_string(an.rank) + ", ideal dim " + std::to_string(idim)});
    checks.push_back({"nullity_equals_annihilator_dim", ann_ok,
                      "code dim " + std::to_string(dim) + ", annihilator dim " +
                          std::to_string(adim)});

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;

    if (as_json) {
        ordered_json j;
        j["input"] = in_path;
        j["arity"] = s.arity;
        j["seed"] = seed;
        j["samples"] = samples;
        j["pass"] = all;
        j["checks"] = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            j["checks"].push_back(std::move(jc));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.detail
                      << ")\n";
        std::cout << (all ? "all checks passed" : "verification failed") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_table(const std::string& name, int r_min, int r_max, int k_min, int k_max, int max_k,
              bool as_json) {
    struct Row {
        FamilyInstance inst;
        CodeReport rep;
    };
    std::vector<Row> rows;
    const bool wants_r = name == "hamming" || name == "generalized";
    const bool wants_k = name == "seven_eighths" || name == "generalized";
    if (wants_r && r_min < 0) fail(errc::bad_parameter, "family " + name + " needs --r-min/--r-max");
    if (wants_k && k_min < 0) fail(errc::bad_parameter, "family " + name + " needs --k-min/--k-max");
    for (int r = wants_r ? r_min : 0; r <= (wants_r ? r_max : 0); ++r)
        for (int k = wants_k ? k_min : 0; k <= (wants_k ? k_max : 0); ++k) {
            Row row{build_family(name, r, k), {}};
            row.rep = code_rate(connection_set_from_element(row.inst.element), max_k);
            rows.push_back(std::move(row));
        }

    if (as_json) {
        ordered_json j = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json jr;
            jr["family"] = family_tag(row.inst.family);
            if (row.inst.family != Family::seven_eighths) jr["r"] = row.inst.r;
            if (row.inst.family != Family::hamming) jr["k"] = row.inst.k;
            jr["arity"] = row.rep.arity;
            jr["vertices"] = row.rep.code_length;
            jr["degree"] = row.rep.degree;
            jr["rate"] = row.rep.rate.str();
            jr["rate_float"] = row.rep.rate.to_double();
            jr["rate_lower"] = row.inst.rate_lower.str();
            jr["rate_upper"] = row.inst.rate_upper.str();
            jr["triangle_free"] = row.rep.triangle_free;
            j.push_back(std::move(jr));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("%-14s %3s %3s %5s %9s %7s %12s %10s %12s %12s %3s\n", "family", "r", "k",
                    "n", "N", "degree", "rate", "rate_f", "lower", "upper", "tf");
        for (const auto& row : rows) {
            const bool has_r = row.inst.family != Family::seven_eighths;
            const bool has_k = row.inst.family != Family::hamming;
            std::printf("%-14s %3s %3s %5d %9lld %7lld %12s %10.6f %12s %12s %3s\n",
                        family_tag(row.inst.family).c_str(),
                        has_r ? std::to_string(row.inst.r).c_str() : "-",
                        has_k ? std::to_string(row.inst.k).c_str() : "-", row.rep.arity,
                        static_cast<long long>(row.rep.code_length),
                        static_cast<long long>(row.rep.degree), row.rep.rate.str().c_str(),
                        row.rep.rate.to_double(), row.inst.rate_lower.str().c_str(),
                        row.inst.rate_upper.str().c_str(), row.rep.triangle_free ? "yes" : "no");
        }
    }
    return 0;
}

int cmd_ideal_verify(int n, std::uint64_t seed, int partitions, bool as_json) {
    Section3Report rep = verify_section3(n, seed, partitions);
    if (as_json) {
        std::cout << section3_json(rep) << "\n";
    } else {
        std::cout << "n=" << rep.n << " seed=" << rep.seed << " partitions="
                  << rep.partition_count << "\n";
        for (const auto& item : rep.items) {
            std::cout << (item.pass ? "pass" : "FAIL") << "  " << item.name << "  ("
                      << item.checks << " checks)\n";
            for (const auto& ce : item.counterexamples) std::cout << "      " << ce << "\n";
        }
        std::cout << (rep.pass ? "all items passed" : "verification failed") << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_export(const std::string& in_path, const std::string& edges, const std::string& dimacs,
               const std::string& codewords, const std::string& conn) {
    if (edges.empty() && dimacs.empty() && codewords.empty() && conn.empty())
        fail(errc::bad_parameter, "export needs at least one output flag");
    AlgebraElement f = load_element(in_path);
    ConnectionSet s = connection_set_from_element(f);
    auto open_out = [](const std::string& path) {
        std::ofstream out(path);
        if (!out) fail(errc::io, "cannot open " + path + " for writing");
        return out;
    };
    if (!conn.empty()) {
        auto out = open_out(conn);
        write_connection_set(out, s);
    }
    if (!edges.empty()) {
        auto out = open_out(edges);
        write_edge_list(out, s);
    }
    if (!dimacs.empty()) {
        auto out = open_out(dimacs);
        write_dimacs(out, s);
    }
    if (!codewords.empty()) {
        CodeAnalysis an = analyze_code(s, true);
        auto out = open_out(codewords);
        write_codewords(out, *an.code);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle-free Cayley-graph storage codes over F_2^n"};
    app.require_subcommand(1);

    std::string name, in_path, out_path;
    int r = -1, k = -1, max_k = 3, n = 2;
    int r_min = -1, r_max = -1, k_min = -1, k_max = -1;
    int samples = 100, partitions = 50;
    std::uint64_t seed = kDefaultSeed;
    bool as_json = false;

    auto* fam = app.add_subcommand("family", "construct a family element");
    fam->add_option("--name", name, "hamming | seven_eighths | generalized")->required();
    fam->add_option("--r", r, "hamming/generalized parameter");
    fam->add_option("--k", k, "seven_eighths/generalized parameter");
    fam->add_option("--out", out_path, "polynomial output path (sidecar gets .json)");

    auto* rate = app.add_subcommand("rate", "exact rate report for a polynomial file");
    rate->add_option("--in", in_path, "polynomial file")->required();
    rate->add_option("--max-k", max_k, "necessary-condition depth");
    rate->add_option("--out", out_path, "write report here instead of stdout");
    rate->add_flag("--json", as_json, "JSON output");

    auto* ver = app.add_subcommand("verify", "run all checks on a polynomial file");
    ver->add_option("--in", in_path, "polynomial file")->required();
    ver->add_option("--seed", seed, "codeword sampling seed");
    ver->add_option("--samples", samples, "codeword sample count");
    ver->add_option("--max-k", max_k, "necessary-condition depth");
    ver->add_flag("--json", as_json, "JSON output");

    auto* tab = app.add_subcommand("table", "rate table over a parameter range");
    tab->add_option("--family", name, "hamming | seven_eighths | generalized")->required();
    tab->add_option("--r-min", r_min, "first r");
    tab->add_option("--r-max", r_max, "last r");
    tab->add_option("--k-min", k_min, "first k");
    tab->add_option("--k-max", k_max, "last k");
    tab->add_option("--max-k", max_k, "necessary-condition depth");
    tab->add_flag("--json", as_json, "JSON output");

    auto* iv = app.add_subcommand("ideal-verify", "ideal identity suite");
    iv->add_option("--n", n, "ambient arity, 2..12")->required();
    iv->add_option("--seed", seed, "partition sampling seed");
    iv->add_option("--partitions", partitions, "random partitions to draw");
    iv->add_flag("--json", as_json, "JSON output");

    auto* exp = app.add_subcommand("export", "graph and code exports");
    std::string edges, dimacs, codewords, conn;
    exp->add_option("--in", in_path, "polynomial file")->required();
    exp->add_option("--edges", edges, "edge list output");
    exp->add_option("--dimacs", dimacs, "DIMACS output");
    exp->add_option("--codewords", codewords, "codeword basis output");
    exp->add_option("--connection-set", conn, "connection set output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (fam->parsed()) return cmd_family(name, r, k, out_path);
        if (rate->parsed()) return cmd_rate(in_path, max_k, as_json, out_path);
        if (ver->parsed()) return cmd_verify(in_path, seed, samples, max_k, as_json);
        if (tab->parsed()) {
            if (r_min >= 0 && r_max < 0) r_max = r_min;
            if (k_min >= 0 && k_max < 0) k_max = k_min;
            return cmd_table(name, r_min, r_max, k_min, k_max, max_k, as_json);
        }
        if (iv->parsed()) return cmd_ideal_verify(n, seed, partitions, as_json);
        if (exp->parsed()) return cmd_export(in_path, edges, dimacs, codewords, conn);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
