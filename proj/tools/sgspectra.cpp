// sgspectra: command-line interface for spectral analysis of signed graphs.
//
// Exit codes: 0 success, 1 domain error (name on stderr), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sgs/bicyclic.hpp"
#include "sgs/catalog.hpp"
#include "sgs/enumerate.hpp"
#include "sgs/error.hpp"
#include "sgs/perturb.hpp"
#include "sgs/spectra.hpp"
#include "sgs/switching.hpp"

using namespace sgs;

namespace {

SignedGraph load_graph(const std::string& path) {
    if (path == "-") return SignedGraph::read_sg(std::cin);
    std::ifstream in(path);
    if (!in) raise("FormatError", "cannot open " + path);
    return SignedGraph::read_sg(in);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::uint64_t env_seed() {
    const char* s = std::getenv("SIGNED_SPECTRA_SEED");
    if (!s) return 1;
    return std::strtoull(s, nullptr, 10);
}

int parse_edge(const std::string& s, int& u, int& v) {
    char comma;
    std::istringstream is(s);
    if (!(is >> u >> comma >> v) || comma != ',') return -1;
    return 0;
}

void print_perturb(const PerturbationReport& rep) {
    std::ostringstream before, after;
    rep.before.write_sg(before);
    rep.after.write_sg(after);
    std::cout << "op: " << rep.op << "\n"
              << "hypothesis: " << rep.hypothesis << "\n"
              << "lambda-before: " << num(rep.lambda_before) << "\n"
              << "lambda-after: " << num(rep.lambda_after) << "\n"
              << "monotone: " << (rep.monotone ? "true" : "false") << "\n"
              << "before:\n"
              << before.str() << "after:\n"
              << after.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of signed graphs"};
    app.require_subcommand(1);

    std::string file = "-";
    bool use_schwenk = false, tsv = false, serial = false, widen = false;
    bool emit_charpoly = false, emit_index = false;
    std::string emit_path;
    int which = 1, nn = 10, top_k = 10, n_min = 36, n_max = 36;
    long samples = 10000;
    std::uint64_t seed = env_seed();
    std::string op, edge_s, targets_s;

    auto* c_index = app.add_subcommand("index", "largest adjacency eigenvalue");
    c_index->add_option("file", file, "input .sg file or -");

    auto* c_spec = app.add_subcommand("spectrum", "all adjacency eigenvalues, descending");
    c_spec->add_option("file", file);

    auto* c_char = app.add_subcommand("charpoly", "exact characteristic polynomial");
    c_char->add_flag("--schwenk", use_schwenk, "use the vertex recursion instead of Faddeev-LeVerrier");
    c_char->add_option("file", file);

    auto* c_bal = app.add_subcommand("balance", "balance test with certificate");
    c_bal->add_option("file", file);

    auto* c_canon = app.add_subcommand("canon", "switching normal form of an unbalanced bicyclic graph");
    c_canon->add_option("file", file);

    auto* c_cls = app.add_subcommand("classify", "base extraction and bicyclic type");
    c_cls->add_option("file", file);

    auto* c_fam = app.add_subcommand("family", "the five extremal families");
    c_fam->add_option("--which", which, "family index 1..5")->required();
    c_fam->add_option("--n", nn, "order")->required();
    c_fam->add_option("--emit", emit_path, "write the graph to this .sg file");
    c_fam->add_flag("--charpoly", emit_charpoly, "print the characteristic polynomial formula");
    c_fam->add_flag("--index", emit_index, "print the index (largest root of f_i)");

    auto* c_pert = app.add_subcommand("perturb", "index-monotone graph perturbations");
    c_pert->add_option("--op", op, "relocate|alpha|collapse|add-neg-edge")->required();
    c_pert->add_option("--edge", edge_s, "u,v")->required();
    c_pert->add_option("--targets", targets_s, "a,b,c (relocate only)");
    c_pert->add_option("file", file);

    auto* c_enum = app.add_subcommand("enumerate", "all unbalanced bicyclic graphs of order n");
    c_enum->add_option("--n", nn, "order (5..9)")->required();
    c_enum->add_option("--top", top_k, "list size");
    c_enum->add_flag("--tsv", tsv, "machine-readable top list");
    c_enum->add_flag("--serial", serial, "disable the parallel driver");

    auto* c_ord = app.add_subcommand("verify-ordering", "strict index chain over a range of n");
    c_ord->add_option("--n-min", n_min)->required();
    c_ord->add_option("--n-max", n_max)->required();
    c_ord->add_flag("--serial", serial);

    auto* c_exc = app.add_subcommand("verify-exclusions", "sampled exclusion bound check");
    c_exc->add_option("--n", nn)->required();
    c_exc->add_option("--samples", samples);
    c_exc->add_option("--seed", seed, "sampling seed (default SIGNED_SPECTRA_SEED or 1)");
    c_exc->add_flag("--serial", serial);

    auto* c_match = app.add_subcommand("match-table1", "reconstruct catalog rows by exact polynomial match");
    c_match->add_option("--n", nn)->required();
    c_match->add_flag("--widen", widen, "deeper trees, three attachment vertices");
    c_match->add_flag("--tsv", tsv);
    c_match->add_flag("--serial", serial);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*c_index) {
            IndexResult r = index_of(load_graph(file));
            std::cout << "lambda: " << num(r.lambda) << "\n";
            std::cout << "multiple: " << (r.multiple ? "true" : "false") << "\n";
            std::cout << "vector:";
            for (double x : r.vec) std::cout << ' ' << num(x);
            std::cout << "\n";
        } else if (*c_spec) {
            Spectrum s = eigenvalues(load_graph(file));
            for (size_t i = 0; i < s.values.size(); ++i)
                std::cout << (i ? " " : "") << num(s.values[i]);
            std::cout << "\n";
        } else if (*c_char) {
            SignedGraph g = load_graph(file);
            Polynomial p = use_schwenk ? charpoly_schwenk(g, 0) : charpoly_exact(g);
            std::cout << p.to_coeff_line() << "\n";
        } else if (*c_bal) {
            BalanceCertificate cert = is_balanced(load_graph(file));
            if (cert.balanced) {
                std::cout << "balanced\n" << theta_to_string(cert.theta) << "\n";
            } else {
                std::cout << "unbalanced\n";
                for (const auto& c : cert.negative_cycles) {
                    for (size_t i = 0; i < c.vertices.size(); ++i)
                        std::cout << (i ? " " : "") << c.vertices[i];
                    std::cout << "\n";
                }
            }
        } else if (*c_canon) {
            SignedGraph g = load_graph(file);
            auto [base, shape] = base_of(g);
            normalize_signature(g, shape).write_sg(std::cout);
        } else if (*c_cls) {
            SignedGraph g = load_graph(file);
            auto [base, shape] = base_of(g);
            std::cout << "type: " << bicyclic_type_name(shape.type) << "\n";
            std::cout << "params:";
            int np = shape.type == BicyclicType::Infinity ? 2 : 3;
            for (int i = 0; i < np; ++i) std::cout << ' ' << shape.params[static_cast<size_t>(i)];
            std::cout << "\nbase:";
            for (int v : shape.base_vertices) std::cout << ' ' << v;
            std::cout << "\ncycle-signs:";
            for (int s : shape.cycle_signs) std::cout << ' ' << (s > 0 ? '+' : '-');
            std::cout << "\n";
        } else if (*c_fam) {
            if (emit_charpoly)
                std::cout << family_charpoly_formula(which, nn).to_coeff_line() << "\n";
            if (emit_index) std::cout << num(family_index(which, nn)) << "\n";
            if (!emit_charpoly && !emit_index && emit_path.empty()) {
                construct_family(which, nn).write_sg(std::cout);
            } else if (!emit_path.empty()) {
                if (emit_path == "-") {
                    construct_family(which, nn).write_sg(std::cout);
                } else {
                    std::ofstream out(emit_path);
                    if (!out) raise("FormatError", "cannot write " + emit_path);
                    construct_family(which, nn).write_sg(out);
                }
            }
        } else if (*c_pert) {
            SignedGraph g = load_graph(file);
            int u, v;
            if (parse_edge(edge_s, u, v) != 0) raise("FormatError", "--edge expects u,v");
            if (op == "relocate") {
                std::vector<int> targets;
                std::istringstream ts(targets_s);
                std::string tok;
                while (std::getline(ts, tok, ','))
                    if (!tok.empty()) targets.push_back(std::stoi(tok));
                print_perturb(perturb_report("relocate", g, relocate_edges(g, u, v, targets), "-"));
            } else if (op == "alpha") {
                AlphaCase c = check_alpha_hypotheses(g, u, v);
                print_perturb(
                    perturb_report("alpha", g, alpha_transform(g, u, v), alpha_case_name(c)));
            } else if (op == "collapse") {
                print_perturb(perturb_report("collapse", g, collapse_tree_to_star(g, u), "-"));
            } else if (op == "add-neg-edge") {
                print_perturb(
                    perturb_report("add-neg-edge", g, add_negative_edge(g, u, v), "-"));
            } else {
                raise("FormatError", "unknown --op " + op);
            }
        } else if (*c_enum) {
            EnumerationReport rep = enumerate_unbalanced_bicyclic(nn, top_k, !serial);
            if (tsv) {
                for (size_t i = 0; i < rep.top.size(); ++i)
                    std::cout << "top-" << (i + 1) << '\t' << num(rep.top[i].lambda) << '\t'
                              << charpoly_exact(rep.top[i].graph).to_coeff_line() << "\n";
            } else {
                std::cout << "n: " << rep.n << "\n"
                          << "underlying-graphs: " << rep.underlying_graphs << "\n"
                          << "signed-classes: " << rep.signed_classes << " (infinity "
                          << rep.count_infinity << ", dumbbell " << rep.count_dumbbell
                          << ", theta " << rep.count_theta << ")\n"
                          << "seconds: " << num(rep.seconds) << "\n";
                for (size_t i = 0; i < rep.top.size(); ++i) {
                    std::cout << "top-" << (i + 1) << ": lambda " << num(rep.top[i].lambda)
                              << "\n";
                    std::ostringstream os;
                    rep.top[i].graph.write_sg(os);
                    std::cout << os.str();
                }
            }
        } else if (*c_ord) {
            OrderingReport rep = verify_ordering(n_min, n_max, !serial);
            for (int n = rep.n_lo; n <= rep.n_hi; ++n) {
                const auto& l = rep.lambdas[static_cast<size_t>(n - rep.n_lo)];
                std::cout << "OK n=" << n << ":";
                for (int i = 0; i < 5; ++i)
                    std::cout << (i ? " > " : " ") << num(l[static_cast<size_t>(i)]);
                std::cout << "\n";
            }
            std::cout << "first-n-with-full-chain: " << rep.first_chain_n << "\n";
        } else if (*c_exc) {
            ExclusionReport rep = verify_exclusions(nn, samples, seed, !serial);
            std::cout << "n: " << rep.n << "\nsamples: " << rep.samples
                      << "\nseed: " << rep.seed << "\nskipped-family: " << rep.skipped_family
                      << "\ndumbbell-samples: " << rep.dumbbell_samples
                      << "\nlambda5: " << num(rep.lambda5)
                      << "\nmax-lambda-outside: " << num(rep.max_lambda_outside)
                      << "\nviolations: 0\n";
        } else if (*c_match) {
            CatalogMatchReport rep = match_table1(nn, widen, !serial);
            if (tsv) {
                for (const auto& r : rep.rows) {
                    if (r.match_count == 0) continue;
                    double lam = eigen_sym_values(r.examples[0].adjacency())[0];
                    std::cout << r.label << '\t' << num(lam) << '\t'
                              << charpoly_exact(r.examples[0]).to_coeff_line() << "\n";
                }
            } else {
                std::cout << "n: " << rep.n << "\ncandidate-classes: " << rep.candidates
                          << "\n";
                for (const auto& r : rep.rows) {
                    std::cout << r.label << ": "
                              << (r.match_count == 0
                                      ? "none"
                                      : (r.match_count == 1 ? "unique" : "multiple"))
                              << " (" << r.match_count << ")\n";
                }
            }
        }
    } catch (const SgError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
