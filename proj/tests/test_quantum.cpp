#include <doctest.h>

#include "qca/quantum.hpp"

using namespace qca;

TEST_CASE("lambda matrix for n=3 matches the hand computation") {
    Context ctx(3, Variant::full);
    PbwAlgebra alg(ctx);
    IntMat lm = lambda_matrix(ctx, alg);
    // variables ordered z1 z2 z3 p1 p2 p3
    CHECK(lm.at(0, 1) == 1);  // z1 z2 = v z2 z1
    CHECK(lm.at(0, 2) == 0);
    CHECK(lm.at(1, 2) == -1); // z2 z3 = v^{-1} z3 z2
    CHECK(lm.at(0, 3) == -1); // z1 p1 = v^{-1} p1 z1
    CHECK(lm.at(0, 4) == 0);
    CHECK(lm.at(0, 5) == 1);  // z1 p3 = v p3 z1
    CHECK(lm.at(2, 3) == 1);
    CHECK(lm.at(2, 5) == -1);
    CHECK(lm.at(1, 3) == 0);
    CHECK(lm.at(3, 4) == 0);  // the p_i commute pairwise at n=3
    CHECK(lm.at(3, 5) == 0);
    CHECK(lm.at(4, 5) == 0);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) CHECK(lm.at(r, c) == -lm.at(c, r));
}

TEST_CASE("compatible pair") {
    for (int n : {3, 5}) {
        Context ctx(n, Variant::full);
        PbwAlgebra alg(ctx);
        IntMat lm = lambda_matrix(ctx, alg);
        IntMat b = base_b_matrix(n);
        auto diag = check_compatible(b, lm);
        REQUIRE(diag.has_value());
        for (long d : *diag) CHECK(d == 2);
        // zero matrix is not compatible
        IntMat zero(2 * n, 2 * n);
        CHECK_FALSE(check_compatible(b, zero).has_value());
    }
}

TEST_CASE("torus arithmetic") {
    IntMat lm(2, 2);
    lm.at(0, 1) = 1;
    lm.at(1, 0) = -1;
    QuantumTorus torus(lm);
    TorusElement x1 = TorusElement::monomial({1, 0}, HalfLaurent::one());
    TorusElement x2 = TorusElement::monomial({0, 1}, HalfLaurent::one());
    // X1 X2 = v X2 X1
    CHECK(torus.mul(x1, x2) == TorusElement::monomial({1, 1}, HalfLaurent::one()));
    CHECK(torus.mul(x2, x1) == TorusElement::monomial({1, 1}, HalfLaurent::v_pow(-2)));
    // division round trip
    TorusElement f = torus.mul(x1 + x2, x1);
    CHECK(torus.div_right(f, x1) == x1 + x2);
    TorusElement g = torus.mul(x1 + x2.scaled(HalfLaurent::v_pow(3)), x1 + x2);
    CHECK(torus.div_right(g, x1 + x2) == x1 + x2.scaled(HalfLaurent::v_pow(3)));
}

TEST_CASE("quantum mutation is involutive and stays Laurent") {
    Context ctx(3, Variant::full);
    PbwAlgebra alg(ctx);
    QuantumSeed s0 = base_quantum_seed(ctx, alg);
    QuantumTorus torus(s0.lambda);
    for (int k = 1; k <= 3; ++k) {
        QuantumSeed s1 = quantum_mutate(torus, s0, k);
        QuantumSeed s2 = quantum_mutate(torus, s1, k);
        CHECK(s2.b == s0.b);
        CHECK(s2.lambda == s0.lambda);
        for (std::size_t t = 0; t < s0.values.size(); ++t) CHECK(s2.values[t] == s0.values[t]);
        // compatibility is preserved
        CHECK(check_compatible(s1.b, s1.lambda).has_value());
    }
}

TEST_CASE("mutated variables quasi-commute per the mutated lambda") {
    Context ctx(3, Variant::full);
    PbwAlgebra alg(ctx);
    QuantumSeed s = base_quantum_seed(ctx, alg);
    QuantumTorus torus(s.lambda);
    s = quantum_mutate(torus, s, 1);
    s = quantum_mutate(torus, s, 2);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            TorusElement xy = torus.mul(s.values[static_cast<std::size_t>(r)],
                                        s.values[static_cast<std::size_t>(c)]);
            TorusElement yx = torus.mul(s.values[static_cast<std::size_t>(c)],
                                        s.values[static_cast<std::size_t>(r)]);
            CHECK(xy == yx.scaled(HalfLaurent::v_pow(static_cast<int>(2 * s.lambda.at(r, c)))));
        }
}

TEST_CASE("single mutation realizes v^{1/2} y_1") {
    Context ctx(3, Variant::full);
    PbwAlgebra alg(ctx);
    DcbSolver solver(alg);
    Report rep = verify_quantum_chain(solver, 1, 1);
    REQUIRE(rep.lines.size() == 1);
    CHECK(rep.lines[0].pass);
}

TEST_CASE("quantum chains at n=3") {
    Context ctx(3, Variant::full);
    PbwAlgebra alg(ctx);
    DcbSolver solver(alg);
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            Report rep = verify_quantum_chain(solver, i, j);
            for (const auto& l : rep.lines) {
                INFO(l.name << " " << l.detail);
                CHECK(l.pass);
            }
        }
}
