#include "qca/cache.hpp"
#include "qca/cluster.hpp"
#include "qca/json_io.hpp"
#include "qca/quantum.hpp"
#include "qca/shuffle.hpp"
#include "qca/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace qca;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

// generator names y<i> / z<i>, comma separated
std::vector<int> parse_word(const Context& ctx, const std::string& s) {
    std::vector<int> slots;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.size() < 2 || (tok[0] != 'y' && tok[0] != 'z'))
            throw std::domain_error("bad generator name: " + tok);
        const int idx = std::stoi(tok.substr(1));
        const int slot = tok[0] == 'y' ? ctx.slot_y(idx) : ctx.slot_z(idx);
        if (slot < 0) throw std::domain_error("generator is the unit by convention: " + tok);
        slots.push_back(slot);
    }
    return slots;
}

int print_report(const Report& rep) {
    for (const auto& line : rep.lines)
        std::cout << (line.pass ? "ok   " : "FAIL ") << line.name
                  << (line.detail.empty() ? "" : " # " + line.detail) << "\n";
    std::cout << "summary " << (rep.lines.size() - rep.fail_count()) << "/" << rep.lines.size()
              << " passed\n";
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the quantum cluster algebra structure of U_v^+(w)"};
    app.require_subcommand(1);

    int n = 5;
    std::string variant = "full";
    std::string cache_dir = ".qca-cache";
    if (const char* env = std::getenv("QCA_CACHE_DIR")) cache_dir = env;
    app.add_option("--n", n, "rank (odd for full, even for qprime)");
    app.add_option("--variant", variant, "full|qprime")->check(CLI::IsMember({"full", "qprime"}));
    app.add_option("--cache-dir", cache_dir, "cache directory for dual-canonical-basis degrees ('' disables)");

    auto* cmd_shuffle = app.add_subcommand("shuffle-expand", "dual generator in the shuffle basis");
    int gen_k = 1;
    cmd_shuffle->add_option("--k", gen_k, "generator index 1..2n")->required();

    auto* cmd_straighten = app.add_subcommand("straighten", "normal form of a product of generators");
    std::string word_arg;
    cmd_straighten->add_option("--word", word_arg, "comma separated names, e.g. z1,y1")->required();

    auto* cmd_dcb = app.add_subcommand("dcb", "dual canonical basis of one degree");
    std::string degree_arg;
    cmd_dcb->add_option("--degree", degree_arg, "comma separated simple-root coefficients")->required();

    auto* cmd_delta = app.add_subcommand("delta", "cluster variable Delta_{i,j}");
    int di = 1, dj = 1;
    bool dquantum = false, dclassical = false;
    cmd_delta->add_option("--i", di)->required();
    cmd_delta->add_option("--j", dj)->required();
    cmd_delta->add_flag("--quantum", dquantum, "quantum variable (dual PBW JSON)");
    cmd_delta->add_flag("--classical", dclassical, "classical polynomial text");

    auto* cmd_verify = app.add_subcommand("verify", "identity suites");
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite, "straightening|form|dcb|recursion|specialization|mutation|all")
        ->check(CLI::IsMember(
            {"straightening", "form", "dcb", "recursion", "specialization", "mutation", "all"}));

    auto* cmd_mutate = app.add_subcommand("mutate", "mutate the base quantum seed");
    std::string at_arg;
    cmd_mutate->add_option("--at", at_arg, "comma separated mutable vertices")->required();

    auto* cmd_graph = app.add_subcommand("exchange-graph", "full exchange graph (small rank)");
    std::string format = "text";
    cmd_graph->add_option("--format", format, "text|dot|json")->check(CLI::IsMember({"text", "dot", "json"}));

    auto* cmd_compat = app.add_subcommand("check-compatible", "compatible pair of the base quantum seed");

    auto* cmd_context = app.add_subcommand("context", "betas and generator table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Context ctx(n, variant_from_name(variant));
        PbwAlgebra alg(ctx);

        std::optional<DcbCache> cache;
        if (!cache_dir.empty()) cache.emplace(cache_dir);
        const DcbCache* cache_ptr = cache ? &*cache : nullptr;

        if (cmd_shuffle->parsed()) {
            if (gen_k < 1 || gen_k > ctx.num_gens()) throw std::domain_error("--k out of range");
            std::cout << shuffle_to_json(dual_generator_shuffle(ctx, gen_k - 1)).dump(1) << "\n";
            return kExitOk;
        }
        if (cmd_straighten->parsed()) {
            DualPBWElement e = alg.straighten_word(parse_word(ctx, word_arg));
            std::cout << pbw_to_json(ctx, e).dump(1) << "\n";
            return kExitOk;
        }
        if (cmd_dcb->parsed()) {
            std::vector<int> d = parse_int_list(degree_arg);
            if (static_cast<int>(d.size()) != ctx.rank())
                throw std::domain_error("--degree needs rank-many coefficients");
            Root gamma;
            gamma.d = d;
            DcbSolver solver(alg);
            auto elements = solve_degree_cached(solver, gamma, cache_ptr);
            json out = json::array();
            for (const auto& [a, b] : elements)
                out.push_back({{"a", a}, {"element", pbw_to_json(ctx, b)}});
            std::cout << out.dump(1) << "\n";
            return kExitOk;
        }
        if (cmd_delta->parsed()) {
            if (dquantum && dclassical) throw std::domain_error("choose one of --quantum/--classical");
            if (dclassical) {
                std::cout << delta_classical(ctx, di, dj).str() << "\n";
            } else {
                DcbSolver solver(alg);
                std::cout << pbw_to_json(ctx, solver.delta_v(di, dj)).dump(1) << "\n";
            }
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            DcbSolver solver(alg);
            Report rep;
            if (suite == "straightening") {
                rep.merge(verify_euler(ctx));
                rep.merge(verify_straightening_oracle(alg));
                rep.merge(verify_leading_coefficients(alg));
            } else if (suite == "form") {
                rep.merge(verify_form(ctx));
            } else if (suite == "dcb") {
                rep.merge(verify_dcb(solver, cache_ptr));
            } else if (suite == "recursion") {
                rep.merge(verify_recursion(solver));
            } else if (suite == "specialization") {
                rep.merge(verify_specialization(solver));
            } else if (suite == "mutation") {
                rep.merge(verify_mutation(solver));
            } else {
                rep.merge(verify_all(solver, cache_ptr));
            }
            return print_report(rep);
        }
        if (cmd_mutate->parsed()) {
            QuantumSeed seed = base_quantum_seed(ctx, alg);
            QuantumTorus torus(seed.lambda);
            for (int k : parse_int_list(at_arg)) seed = quantum_mutate(torus, seed, k);
            std::cout << quantum_seed_to_json(seed).dump(1) << "\n";
            return kExitOk;
        }
        if (cmd_graph->parsed()) {
            ExchangeGraph g = exchange_graph(ctx);
            if (format == "dot") {
                std::cout << exchange_graph_dot(g);
            } else if (format == "json") {
                json out = {{"vertices", g.vertex_count},
                            {"regular", g.regular},
                            {"edges", g.edges},
                            {"variables", g.variables}};
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << "vertices " << g.vertex_count << "\nedges " << g.edges.size()
                          << "\nmutable variables " << g.variables.size() << "\n";
            }
            return kExitOk;
        }
        if (cmd_compat->parsed()) {
            IntMat lm = lambda_matrix(ctx, alg);
            auto diag = check_compatible(base_b_matrix(ctx.rank()), lm);
            if (!diag) {
                std::cout << "incompatible\n";
                return kExitVerifyFailed;
            }
            std::cout << "compatible, diagonal:";
            for (long d : *diag) std::cout << " " << d;
            std::cout << "\n";
            return kExitOk;
        }
        if (cmd_context->parsed()) {
            std::cout << context_to_json(ctx).dump(1) << "\n";
            return kExitOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "internal bound exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitUsage;
}
