// commring - construct finite rings, build commuting graphs, solve exact
// (signed) domination, and verify the claim catalog over an enumerated
// corpus. All outputs are deterministic; see README for formats.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commring/enumerate.hpp"
#include "commring/errors.hpp"
#include "commring/graph_io.hpp"
#include "commring/harness.hpp"
#include "commring/ring_io.hpp"

namespace {

using namespace commring;

constexpr int kExitFail = 1;       // verify found failing checks
constexpr int kExitUsage = 2;
constexpr int kExitFile = 3;       // cannot read or write a file
constexpr int kExitValidation = 4; // input parses but violates a contract
constexpr int kExitBudget = 5;

long long default_budget() {
    if (const char* env = std::getenv("COMMRING_NODE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw Error("COMMRING_NODE_BUDGET must be a positive integer");
    }
    return 1'000'000'000;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw Error("write failed: " + path);
}

std::optional<std::vector<int>> parse_group(const std::string& sel) {
    if (sel.empty()) return std::nullopt;
    std::vector<int> factors;
    size_t pos = 0;
    while (pos < sel.size()) {
        size_t next = sel.find('x', pos);
        std::string tok = sel.substr(pos, next == std::string::npos
                                              ? std::string::npos
                                              : next - pos);
        try {
            factors.push_back(std::stoi(tok));
        } catch (...) {
            throw UnsupportedOrder("bad group selector: " + sel);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return factors;
}

int cmd_ring_make(const std::string& type, int p, int order,
                  const std::string& name, const std::string& out_path) {
    FiniteRing r;
    if (type == "E") {
        if (p <= 0) throw Error("--type E needs --p");
        r = presentation_E(p);
    } else if (type == "F") {
        if (p <= 0) throw Error("--type F needs --p");
        r = presentation_F(p);
    } else if (type == "zero") {
        if (order <= 0) throw Error("--type zero needs --order");
        r = zero_ring(order);
    } else if (type == "Zn") {
        if (order <= 0) throw Error("--type Zn needs --order");
        r = cyclic_ring(order);
    } else {
        throw Error("unknown ring type: " + type + " (E, F, zero, Zn)");
    }
    if (!name.empty()) r.name = name;
    write_ring_file(r, out_path);
    std::cout << r.name << ": order " << r.n << " -> " << out_path << "\n";
    return 0;
}

int cmd_ring_enum(const EnumerationSpec& spec, const std::string& out_dir) {
    EnumerationResult res = enumerate_rings(spec);
    write_corpus(out_dir, spec, res);
    std::cout << "order " << spec.order << ": " << res.rings.size()
              << " classes, "
              << (res.exhaustive ? "exhaustive" : "NOT exhaustive")
              << ", nodes " << res.nodes << "\n";
    if (!res.exhaustive) {
        std::cerr << "node budget exhausted; corpus is partial\n";
        return kExitBudget;
    }
    return 0;
}

int cmd_graph_build(const std::string& ring_path, bool complement_graph,
                    const std::string& format, const std::string& out_path) {
    FiniteRing r = read_ring_file(ring_path);
    SimpleGraph g = commuting_graph(r);
    if (complement_graph) g = complement(g);
    if (format == "dimacs") write_output(write_dimacs(g), out_path);
    else if (format == "dot") write_output(write_dot(g), out_path);
    else throw Error("unknown format: " + format + " (dimacs, dot)");
    return 0;
}

int cmd_solve(bool signed_variant, const std::string& in_path) {
    SimpleGraph g = read_dimacs_file(in_path);
    std::ostringstream out;
    if (signed_variant) {
        SignedCertificate cert = gamma_signed_exact(g);
        out << "gamma_s " << cert.gamma_s << "\n";
        out << "minus";
        for (int v : cert.minus_set) out << " " << v + 1;
        out << "\n";
    } else {
        DominationCertificate cert = gamma_exact(g);
        out << "gamma " << cert.gamma << "\n";
        out << "witness";
        for (int v : cert.witness) out << " " << v + 1;
        out << "\n";
    }
    std::cout << out.str();
    return 0;
}

int cmd_verify(const HarnessOptions& options, const std::string& report_path) {
    HarnessResult res = run_harness(options);
    std::string jsonl = to_jsonl(res.reports);
    std::ostream& summary = report_path.empty() ? std::cerr : std::cout;
    write_output(jsonl, report_path);
    summary << "checks: " << res.reports.size() << " pass " << res.pass
            << " fail " << res.fail << " vacuous " << res.vacuous << "\n";
    return res.ok() ? 0 : kExitFail;
}

int cmd_export(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
    SimpleGraph g = read_dimacs_file(in_path);
    if (format == "dimacs") write_output(write_dimacs(g), out_path);
    else if (format == "dot") write_output(write_dot(g), out_path);
    else throw Error("unknown format: " + format + " (dimacs, dot)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring commuting-graph laboratory"};
    app.require_subcommand(1);

    // ring make / ring enum
    auto* ring = app.add_subcommand("ring", "construct or enumerate rings");
    ring->require_subcommand(1);

    auto* make = ring->add_subcommand("make", "write one constructed ring");
    std::string make_type, make_name, make_out;
    int make_p = 0, make_order = 0;
    make->add_option("--type", make_type, "E, F, zero or Zn")->required();
    make->add_option("--p", make_p, "prime parameter for E/F");
    make->add_option("--order", make_order, "order for zero/Zn");
    make->add_option("--name", make_name, "override the ring label");
    make->add_option("-o,--out", make_out, "output .ring file")->required();

    auto* enumc = ring->add_subcommand(
        "enum", "enumerate rings of one order up to isomorphism");
    EnumerationSpec spec;
    std::string enum_group, enum_out;
    enumc->add_option("--order", spec.order, "ring order (2..16)")->required();
    enumc->add_flag("--noncommutative", spec.require_noncommutative,
                    "keep only non-commutative rings");
    enumc->add_flag("--center-zero", spec.require_zero_center,
                    "keep only rings with Z(R) = {0}");
    enumc->add_option("--group", enum_group,
                      "additive group as invariant factors, e.g. 4x2");
    enumc->add_option("--budget", spec.node_budget,
                      "search node budget (default 1e9 or "
                      "COMMRING_NODE_BUDGET)");
    enumc->add_option("--jobs", spec.jobs, "worker threads");
    enumc->add_option("-o,--out", enum_out, "corpus directory")->required();

    // graph build
    auto* graph = app.add_subcommand("graph", "build commuting graphs");
    graph->require_subcommand(1);
    auto* build = graph->add_subcommand("build", "emit the commuting graph");
    std::string build_ring, build_format = "dimacs", build_out;
    bool build_complement = false;
    build->add_option("--ring", build_ring, "input .ring file")->required();
    build->add_flag("--complement", build_complement,
                    "emit the complement instead");
    build->add_option("--format", build_format, "dimacs or dot");
    build->add_option("-o,--out", build_out, "output file (default stdout)");

    // solve gamma / gamma-s
    auto* solve = app.add_subcommand("solve", "exact domination solvers");
    solve->require_subcommand(1);
    auto* sg = solve->add_subcommand("gamma", "domination number");
    std::string sg_in;
    sg->add_option("--in", sg_in, "DIMACS graph")->required();
    auto* sgs = solve->add_subcommand("gamma-s", "signed domination number");
    std::string sgs_in;
    sgs->add_option("--in", sgs_in, "DIMACS graph")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the claim checks");
    HarnessOptions hopt;
    std::string verify_report;
    verify->add_option("--suite", hopt.suites,
                       "all, prelim, exclusions, theoremA, p2, theoremB, "
                       "products, signed");
    verify->add_option("--max-order", hopt.max_order, "corpus order cap");
    verify->add_option("--corpus", hopt.corpus_dir,
                       "corpus directory (reused when present, else filled)");
    verify->add_option("--report", verify_report,
                       "JSONL report path (default stdout)");
    verify->add_option("--jobs", hopt.jobs, "worker threads");
    verify->add_option("--budget", hopt.node_budget, "search node budget");

    // export
    auto* exportc = app.add_subcommand("export", "convert a DIMACS graph");
    std::string export_in, export_format = "dot", export_out;
    exportc->add_option("--in", export_in, "DIMACS graph")->required();
    exportc->add_option("--format", export_format, "dimacs or dot");
    exportc->add_option("-o,--out", export_out, "output file (default stdout)");

    try {
        spec.node_budget = default_budget();
        hopt.node_budget = spec.node_budget;
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? 0 : kExitUsage;
        }

        if (make->parsed())
            return cmd_ring_make(make_type, make_p, make_order, make_name,
                                 make_out);
        if (enumc->parsed()) {
            spec.group = parse_group(enum_group);
            return cmd_ring_enum(spec, enum_out);
        }
        if (build->parsed())
            return cmd_graph_build(build_ring, build_complement, build_format,
                                   build_out);
        if (sg->parsed()) return cmd_solve(false, sg_in);
        if (sgs->parsed()) return cmd_solve(true, sgs_in);
        if (verify->parsed()) return cmd_verify(hopt, verify_report);
        if (exportc->parsed())
            return cmd_export(export_in, export_format, export_out);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const AxiomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::string what = e.what();
        bool file_error = what.find("cannot open") != std::string::npos ||
                          what.find("write failed") != std::string::npos;
        std::cerr << "error: " << what << "\n";
        return file_error ? kExitFile : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
