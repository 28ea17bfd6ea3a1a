// Acceptance suite: one binary, one pass/fail line per criterion.  Each
// criterion is exact (zero tolerance); run a single criterion by passing its
// number as the only argument.

#include "qca/cluster.hpp"
#include "qca/quantum.hpp"
#include "qca/shuffle.hpp"
#include "qca/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

using namespace qca;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

bool report_clean(const Report& rep, std::string& detail) {
    std::size_t fails = rep.fail_count();
    detail = std::to_string(rep.lines.size() - fails) + "/" + std::to_string(rep.lines.size()) +
             " identities";
    if (fails) {
        for (const auto& l : rep.lines)
            if (!l.pass) {
                detail += "; first failure: " + l.name;
                break;
            }
    }
    return fails == 0;
}

bool criterion_euler(std::string& detail) {
    static const long table[] = {1, 1, 2, 5, 16, 61, 272};
    Context ctx7(7, Variant::full);
    bool ok = true;
    for (int len = 1; len <= 7; ++len)
        if (static_cast<long>(interval_shuffle_expansion(ctx7, 1, len).term_count()) != table[len - 1])
            ok = false;
    Report rep = verify_euler(ctx7);
    Context ctx6(6, Variant::qprime);
    rep.merge(verify_euler(ctx6));
    std::string sub;
    ok = report_clean(rep, sub) && ok;
    detail = "lengths 1..7 and all generator expansions; " + sub;
    return ok;
}

bool criterion_straightening(std::string& detail) {
    Report rep;
    for (auto [n, variant] : {std::pair{3, Variant::full}, std::pair{5, Variant::full},
                              std::pair{7, Variant::full}, std::pair{4, Variant::qprime},
                              std::pair{6, Variant::qprime}}) {
        Context ctx(n, variant);
        PbwAlgebra alg(ctx);
        rep.merge(verify_straightening_oracle(alg));
    }
    return report_clean(rep, detail);
}

bool criterion_leading(std::string& detail) {
    Report rep;
    for (int n : {5, 7}) {
        Context ctx(n, Variant::full);
        PbwAlgebra alg(ctx);
        rep.merge(verify_leading_coefficients(alg));
    }
    return report_clean(rep, detail);
}

bool criterion_form(std::string& detail) {
    Report rep;
    {
        Context ctx(5, Variant::full);
        rep.merge(verify_form(ctx, 4));
    }
    {
        // generator norms and orthogonality at n = 7 as well
        Context ctx(7, Variant::full);
        rep.merge(verify_form(ctx, 2));
    }
    return report_clean(rep, detail);
}

bool criterion_dcb(std::string& detail) {
    Context ctx(5, Variant::full);
    PbwAlgebra alg(ctx);
    DcbSolver solver(alg);
    return report_clean(verify_dcb(solver), detail);
}

bool criterion_recursion(std::string& detail) {
    Report rep;
    for (int n : {5, 7}) {
        Context ctx(n, Variant::full);
        PbwAlgebra alg(ctx);
        DcbSolver solver(alg);
        rep.merge(verify_recursion(solver));
    }
    return report_clean(rep, detail);
}

bool criterion_specialization(std::string& detail) {
    Report rep;
    for (int n : {5, 7}) {
        Context ctx(n, Variant::full);
        PbwAlgebra alg(ctx);
        DcbSolver solver(alg);
        rep.merge(verify_specialization(solver));
    }
    return report_clean(rep, detail);
}

bool criterion_exchange_graph(std::string& detail) {
    Context ctx(3, Variant::full);
    ExchangeGraph g = exchange_graph(ctx);
    std::set<std::string> expect;
    for (int i = 1; i <= 3; ++i) expect.insert(YZPoly::Z(3, i).str());
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) expect.insert(delta_classical(ctx, i, j).str());
    std::set<std::string> got(g.variables.begin(), g.variables.end());
    detail = "clusters=" + std::to_string(g.vertex_count) +
             " variables=" + std::to_string(g.variables.size());
    return g.vertex_count == 14 && g.regular && got == expect && g.variables.size() == 9;
}

bool criterion_compatible(std::string& detail) {
    Report rep;
    for (int n : {3, 5}) {
        Context ctx(n, Variant::full);
        PbwAlgebra alg(ctx);
        DcbSolver solver(alg);
        Report m = verify_mutation(solver);
        // keep only the lambda and compatibility lines here
        for (const auto& l : m.lines)
            if (l.name.rfind("mutation/", 0) == 0) rep.lines.push_back(l);
    }
    return report_clean(rep, detail);
}

bool criterion_chain(std::string& detail) {
    Report rep;
    for (int n : {3, 5}) {
        Context ctx(n, Variant::full);
        PbwAlgebra alg(ctx);
        DcbSolver solver(alg);
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) rep.merge(verify_quantum_chain(solver, i, j));
    }
    return report_clean(rep, detail);
}

bool criterion_properties(std::string& detail) {
    Report rep;
    {
        Context ctx(5, Variant::full);
        PbwAlgebra alg(ctx);
        rep.merge(verify_properties(alg, 500));
        DcbSolver solver(alg);
        DcbSolver other(alg, OrderData::TieBreak::lex);
        bool ok = true;
        for (int i = 1; i <= 5; ++i)
            for (int j = i; j <= 5; ++j)
                if (solver.element(solver.delta_leading_exp(i, j)) !=
                    other.element(other.delta_leading_exp(i, j)))
                    ok = false;
        rep.add("property/extension-independence", ok);
    }
    {
        Context ctx(4, Variant::qprime);
        PbwAlgebra alg(ctx);
        rep.merge(verify_properties(alg, 250));
    }
    return report_clean(rep, detail);
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "Euler numbers of the dual generator expansions", criterion_euler},
        {2, "straightening oracle in the shuffle algebra (n=3,5,7; qprime 4,6)", criterion_straightening},
        {3, "leading coefficient v^{(beta_lo,beta_hi)} for all pairs (n=5,7)", criterion_leading},
        {4, "Kashiwara form: norms, orthogonality, dual PBW duality", criterion_form},
        {5, "dual canonical basis closed forms at n=5", criterion_dcb},
        {6, "recursion/exchange/commutator identities, all pairs (n=5,7)", criterion_recursion},
        {7, "classical limit and determinant cross-checks (n=5,7)", criterion_specialization},
        {8, "exchange graph at n=3: 14 clusters, 3-regular, 9 variables", criterion_exchange_graph},
        {9, "compatible pair (B, Lambda) at n=3,5", criterion_compatible},
        {10, "quantum mutation chains reproduce the Delta variables (n=3,5)", criterion_chain},
        {11, "property suites (associativity, Serre, confluence, sigma, extensions)", criterion_properties},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.number != only) continue;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                .count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << c.number << " [" << ms << " ms] "
                  << c.title << (detail.empty() ? "" : " -- " + detail) << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
