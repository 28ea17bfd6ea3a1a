#include <doctest.h>

#include "qca/cluster.hpp"

#include <set>

using namespace qca;

TEST_CASE("classical delta polynomials") {
    Context ctx(3, Variant::full);
    CHECK(delta_classical(ctx, 1, 1) == YZPoly::Y(3, 1));
    CHECK(delta_classical(ctx, 1, 2) == YZPoly::Y(3, 1) * YZPoly::Y(3, 2) - YZPoly::Z(3, 3));
    CHECK(delta_classical(ctx, 1, 3).str() == "Y1*Y2*Y3 - Y1*Z1 - Y3*Z3 + Z2");
}

TEST_CASE("determinant and exchange cross-checks") {
    for (int n : {3, 5}) {
        Context ctx(n, Variant::full);
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                INFO("pair " << i << "," << j);
                CHECK(delta_determinant_check(ctx, i, j));
            }
    }
}

TEST_CASE("base seed mutation values") {
    Context ctx(3, Variant::full);
    Seed s = base_seed(ctx);
    // mutation at Z_i of the base seed yields Y_i
    for (int i = 1; i <= 3; ++i) {
        Seed t = mutate(ctx, s, i);
        CHECK(t.values[static_cast<std::size_t>(i - 1)] == YZPoly::Y(3, i));
        // involution
        Seed u = mutate(ctx, t, i);
        CHECK(u == s);
    }
    CHECK_THROWS_AS(mutate(ctx, s, 4), std::domain_error);
}

TEST_CASE("mutation chains produce the delta variables") {
    for (int n : {3, 5}) {
        Context ctx(n, Variant::full);
        Seed s0 = base_seed(ctx);
        for (int i = 1; i <= n; ++i) {
            Seed s = s0;
            for (int j = i; j <= n; ++j) {
                s = mutate(ctx, s, j);
                CHECK(s.values[static_cast<std::size_t>(j - 1)] == delta_classical(ctx, i, j));
            }
        }
    }
}

TEST_CASE("exchange graph for n=3") {
    Context ctx(3, Variant::full);
    ExchangeGraph g = exchange_graph(ctx);
    CHECK(g.vertex_count == 14);
    CHECK(g.regular);
    CHECK(g.edges.size() == 21); // 14 * 3 / 2
    CHECK(g.variables.size() == 9);
    Context big(5, Variant::full);
    CHECK_THROWS_AS(exchange_graph(big), std::domain_error);
}

TEST_CASE("exchange graph for rank 4") {
    // the next Catalan number; every exchange division stays exact, which is
    // the symbolic form of the Laurent phenomenon for the polynomial values
    Context ctx(4, Variant::qprime);
    ExchangeGraph g = exchange_graph(ctx);
    CHECK(g.vertex_count == 42);
    CHECK(g.regular);
    CHECK(g.edges.size() == 84); // 42 * 4 / 2
    CHECK(g.variables.size() == 4 + 10);
}

TEST_CASE("odd-vertex mutations recover the initial cluster") {
    for (int n : {3, 5}) {
        Context ctx(n, Variant::full);
        Seed s = base_seed(ctx);
        for (int i = 1; i <= n; i += 2) s = mutate(ctx, s, i);
        for (int i = 1; i <= n; ++i)
            CHECK(s.values[static_cast<std::size_t>(i - 1)] ==
                  (i % 2 == 1 ? YZPoly::Y(n, i) : YZPoly::Z(n, i)));
    }
}

TEST_CASE("laurent phenomenon in the base cluster") {
    // every cluster variable is a Laurent polynomial in Z_1..Z_n with
    // P-coefficients; verified by clearing the z-denominator
    Context ctx(3, Variant::full);
    ExchangeGraph g = exchange_graph(ctx);
    // the 9 mutable variables are Z1,Z2,Z3 and the 6 delta polynomials
    std::set<std::string> expect;
    for (int i = 1; i <= 3; ++i) expect.insert(YZPoly::Z(3, i).str());
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) expect.insert(delta_classical(ctx, i, j).str());
    std::set<std::string> got(g.variables.begin(), g.variables.end());
    CHECK(got == expect);
}

TEST_CASE("dot emission") {
    Context ctx(3, Variant::full);
    std::string dot = seed_quiver_dot(ctx, base_b_matrix(3));
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("z1 -> z2") != std::string::npos);
    CHECK(dot.find("z3 -> z2") != std::string::npos);
    CHECK(dot.find("p1 -> z1") != std::string::npos);
    CHECK(dot.find("z2 -> p2") != std::string::npos);
    ExchangeGraph g = exchange_graph(ctx);
    std::string gd = exchange_graph_dot(g);
    CHECK(gd.find("digraph") == 0);
}
