// fapx: exact oracles and approximation schemes for max-min partition,
// the ECP-to-4-way reduction, and the clique-number relaxation example.
//
// Exit codes: 0 success, 2 parse/parameter error, 3 oracle guard exceeded,
// 4 property violation (claim4 disagreement).

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fapx/fapx.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fapx::ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fapx::PartitionInstance load_instance(const std::string& path, std::optional<int> k_override) {
    auto inst = fapx::parse_instance(slurp(path));
    if (k_override) return fapx::PartitionInstance(inst.sizes(), *k_override);
    return inst;
}

// ECP files are a bare whitespace-separated list of positive integers.
fapx::EcpInstance load_ecp(const std::string& path) {
    std::istringstream in(slurp(path));
    std::vector<fapx::BigInt> values;
    std::string tok;
    while (in >> tok) {
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw fapx::ParseError("malformed element '" + tok + "'");
        values.emplace_back(tok);
    }
    return fapx::EcpInstance(std::move(values));
}

std::string witness_line(const fapx::Assignment& a) {
    std::ostringstream out;
    out << "witness=";
    for (std::size_t i = 0; i < a.bin_of.size(); ++i) {
        if (i) out << ' ';
        out << a.bin_of[i];
    }
    return out.str();
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutStream(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw fapx::ParseError("cannot open output file '" + path + "'");
        os = &file;
    }
    std::ostream& get() { return *os; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact oracles and approximation schemes for max-min partition"};
    app.require_subcommand(1);

    std::string file, out_path, t_text, eps_text, cap_text;
    bool witness = false;
    std::optional<int> k_override;

    auto* exact = app.add_subcommand("exact", "exact max-min partition oracle");
    exact->add_option("--file", file, "instance file")->required();
    exact->add_option("--k", k_override, "override the instance's bin count");
    exact->add_flag("--witness", witness, "also print an optimal assignment");

    auto* ffptas = app.add_subcommand("ffptas", "fractional-relative scheme for 2 bins");
    ffptas->add_option("--file", file, "instance file")->required();
    ffptas->add_option("--t", t_text, "tolerance t as p/q")->required();
    ffptas->add_flag("--witness", witness, "also print the assignment");

    auto* fptas = app.add_subcommand("fptas", "compiled integral scheme for 2 bins");
    fptas->add_option("--file", file, "instance file")->required();
    fptas->add_option("--eps", eps_text, "accuracy eps as p/q")->required();
    fptas->add_flag("--witness", witness, "also print the assignment");

    auto* kway = app.add_subcommand("kway", "trimmed-DP scheme for 2..4 bins");
    kway->add_option("--file", file, "instance file")->required();
    kway->add_option("--eps", eps_text, "accuracy eps as p/q")->required();
    kway->add_option("--k", k_override, "override the instance's bin count");
    kway->add_flag("--witness", witness, "also print the assignment");

    auto* subset = app.add_subcommand("subset-sum", "trimmed-list subset-sum scheme");
    subset->add_option("--file", file, "instance file (item sizes; the k line is ignored)")
        ->required();
    subset->add_option("--cap", cap_text, "capacity (nonnegative integer)")->required();
    subset->add_option("--eps", eps_text, "accuracy eps as p/q")->required();
    subset->add_flag("--witness", witness, "also print the chosen items");

    auto* reduce = app.add_subcommand("reduce", "map an equal-cardinality partition "
                                                "instance to a 4-way instance");
    reduce->add_option("--file", file, "list of positive integers")->required();
    reduce->add_option("--out", out_path, "output prefix for .x2/.x4 files")->required();

    int max_m = 2;
    std::uint64_t max_value = 3;
    auto* claim4 = app.add_subcommand("claim4", "exhaustively check the reduction's "
                                                "three-way equivalence");
    claim4->add_option("--max-m", max_m, "half-cardinality bound (instances have up to 2m elements)")
        ->check(CLI::Range(1, 4));
    claim4->add_option("--max-value", max_value, "element value bound")->check(CLI::Range(1, 1000));
    claim4->add_option("--out", out_path, "CSV destination (default stdout)");

    int restarts = 20, max_iters = 2000;
    double tol = 1e-9;
    auto* motzkin = app.add_subcommand("motzkin", "clique-number relaxation on a graph");
    motzkin->add_option("--file", file, "graph file")->required();
    motzkin->add_option("--restarts", restarts, "random restarts for the ascent");
    motzkin->add_option("--max-iters", max_iters, "iteration cap per start");
    motzkin->add_option("--tol", tol, "fixed-point tolerance");
    motzkin->add_option("--out", out_path, "CSV destination (default stdout)");

    fapx::BenchConfig cfg;
    std::vector<std::string> t_grid_text, eps_grid_text;
    auto* bench = app.add_subcommand("bench", "deterministic scheme-vs-oracle benchmark CSV");
    bench->add_option("--seed", cfg.seed, "PRNG seed");
    bench->add_option("--count", cfg.count, "number of instances");
    bench->add_option("--max-m", cfg.max_m, "item counts drawn from 1..max-m");
    bench->add_option("--max-size", cfg.max_size, "sizes drawn from 1..max-size");
    bench->add_option("--k", cfg.k, "bin count for the k-way scheme");
    bench->add_option("--t", t_grid_text, "tolerance grid (repeatable)");
    bench->add_option("--eps", eps_grid_text, "accuracy grid (repeatable)");
    bench->add_flag("--time", cfg.include_time, "add a wall-time column (breaks byte determinism)");
    bench->add_option("--out", out_path, "CSV destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly, misuse maps to 2
    }

    try {
        if (*exact) {
            const auto inst = load_instance(file, k_override);
            const auto res = fapx::exact_maxmin_partition(inst);
            std::cout << "optint=" << res.value << " optfrac="
                      << fapx::rat_to_string(fapx::make_rat(inst.total(), inst.bins()))
                      << "\n";
            if (witness) std::cout << witness_line(res.witness) << "\n";
        } else if (*ffptas) {
            const auto inst = load_instance(file, std::nullopt);
            const auto outcome = fapx::ffptas_p2(inst, fapx::parse_rat(t_text));
            if (!outcome) {
                std::cout << "None\n";
            } else {
                std::cout << "Value " << fapx::rat_to_string(outcome->value) << "\n";
                if (witness && outcome->witness)
                    std::cout << witness_line(*outcome->witness) << "\n";
            }
        } else if (*fptas) {
            const auto inst = load_instance(file, std::nullopt);
            const auto res =
                fapx::fptas_from_ffptas(fapx::p2_adapter(), inst, fapx::parse_rat(eps_text));
            std::cout << fapx::rat_to_string(res.value) << "\n";
            if (witness && res.witness) std::cout << witness_line(*res.witness) << "\n";
        } else if (*kway) {
            const auto inst = load_instance(file, k_override);
            const auto res = fapx::fptas_kway_maxmin(inst, fapx::parse_rat(eps_text));
            std::cout << res.value << "\n";
            if (witness) std::cout << witness_line(res.witness) << "\n";
        } else if (*subset) {
            const auto inst = load_instance(file, std::nullopt);
            const auto cap = fapx::parse_rat(cap_text);
            if (fapx::rat_den(cap) != 1)
                throw fapx::ParameterError("capacity must be an integer");
            const auto pick =
                fapx::subset_sum_fptas(inst.sizes(), fapx::rat_num(cap), fapx::parse_rat(eps_text));
            std::cout << pick.value << "\n";
            if (witness) {
                std::cout << "items=";
                for (std::size_t i = 0; i < pick.items.size(); ++i)
                    std::cout << (i ? " " : "") << pick.items[i];
                std::cout << "\n";
            }
        } else if (*reduce) {
            const auto bundle = fapx::build_reduction(load_ecp(file));
            std::ofstream x2(out_path + ".x2", std::ios::binary);
            std::ofstream x4(out_path + ".x4", std::ios::binary);
            if (!x2 || !x4)
                throw fapx::ParseError("cannot write output files at prefix '" + out_path + "'");
            x2 << fapx::format_instance(fapx::PartitionInstance(bundle.x2, 2));
            x4 << fapx::format_instance(bundle.x4);
            std::cout << "t=" << fapx::rat_to_string(bundle.t_threshold) << "\n";
        } else if (*claim4) {
            OutStream out(out_path);
            out.get() << fapx::kClaimCsvHeader << "\n";
            bool all_equivalent = true;
            for (const auto& x1 : fapx::enumerate_ecp_instances(
                     2 * static_cast<std::size_t>(max_m), fapx::BigInt(max_value))) {
                const auto rep = fapx::verify_claim_aux(x1);
                out.get() << fapx::claim_report_csv_row(rep) << "\n";
                all_equivalent = all_equivalent && rep.equivalent;
            }
            if (!all_equivalent) {
                std::cerr << "claim4: equivalence violated\n";
                return 4;
            }
        } else if (*motzkin) {
            const auto g = fapx::parse_graph(slurp(file));
            const auto omega = fapx::clique_number(g);
            const auto formula = fapx::opt_frac_ms(g);
            const auto rep = fapx::replicator_maximize(g, restarts, max_iters, tol);
            const double gap = formula.convert_to<double>() - rep.value;
            OutStream out(out_path);
            out.get() << "n,edges,omega,formula_value,replicator_value,gap\n";
            out.get() << g.vertex_count() << ',' << g.edge_count() << ',' << omega << ','
                      << fapx::rat_to_string(formula) << ',';
            const auto flags = out.get().flags();
            out.get().precision(12);
            out.get() << rep.value << ',' << gap << "\n";
            out.get().flags(flags);
        } else if (*bench) {
            if (!t_grid_text.empty()) cfg.t_grid.clear();
            for (const auto& s : t_grid_text) cfg.t_grid.push_back(fapx::parse_rat(s));
            if (!eps_grid_text.empty()) cfg.eps_grid.clear();
            for (const auto& s : eps_grid_text) cfg.eps_grid.push_back(fapx::parse_rat(s));
            OutStream out(out_path);
            fapx::run_bench(cfg, out.get());
        }
    } catch (const fapx::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fapx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fapx::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
