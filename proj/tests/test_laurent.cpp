#include <doctest.h>

#include "qca/laurent.hpp"

#include <random>

using namespace qca;

namespace {

HalfLaurent random_laurent(std::mt19937& rng, bool integer_grid = true) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), coef(-9, 9);
    HalfLaurent f;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        int e = expo(rng);
        if (integer_grid) e *= 2;
        f += HalfLaurent::v_pow(e, Int(coef(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("quantum integers match the defining quotient") {
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(1) == HalfLaurent::one());
    CHECK(quantum_integer(2) == HalfLaurent::v_pow(2) + HalfLaurent::v_pow(-2));
    CHECK(quantum_integer(3) == HalfLaurent::v_pow(4) + HalfLaurent::one() + HalfLaurent::v_pow(-4));
    for (int k = 1; k <= 8; ++k) {
        // (v^k - v^-k) = [k] * (v - v^-1)
        HalfLaurent lhs = HalfLaurent::v_pow(2 * k) - HalfLaurent::v_pow(-2 * k);
        HalfLaurent den = HalfLaurent::v_pow(2) - HalfLaurent::v_pow(-2);
        CHECK(lhs.div_exact(den) == quantum_integer(k));
        CHECK(quantum_integer(k).bar() == quantum_integer(k));
    }
}

TEST_CASE("quantum binomials") {
    CHECK(quantum_binomial(2, 1) == quantum_integer(2));
    CHECK(quantum_binomial(5, 0) == HalfLaurent::one());
    HalfLaurent b42 = quantum_binomial(4, 2);
    HalfLaurent expected = HalfLaurent::v_pow(8) + HalfLaurent::v_pow(4) + HalfLaurent(Int(2)) +
                           HalfLaurent::v_pow(-4) + HalfLaurent::v_pow(-8);
    CHECK(b42 == expected);
    CHECK_THROWS_AS(quantum_binomial(3, 4), std::domain_error);
    for (int k = 0; k <= 9; ++k)
        for (int l = 0; l <= k; ++l) {
            HalfLaurent b = quantum_binomial(k, l);
            CHECK(b.bar() == b);
            CHECK(b.eval_at_one() == int_binomial(k, l));
            for (const auto& [e, c] : b.terms()) CHECK(c > 0);
        }
}

TEST_CASE("bar is a ring involution") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        HalfLaurent f = random_laurent(rng, false), g = random_laurent(rng, false);
        CHECK(f.bar().bar() == f);
        CHECK((f * g).bar() == f.bar() * g.bar());
        CHECK((f + g).bar() == f.bar() + g.bar());
    }
}

TEST_CASE("ring laws and exact division") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        HalfLaurent f = random_laurent(rng, false), g = random_laurent(rng, false),
                    h = random_laurent(rng, false);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        if (!g.is_zero()) CHECK((f * g).div_exact(g) == f);
    }
}

TEST_CASE("decompose_antisymmetric") {
    HalfLaurent f = HalfLaurent::v_pow(-2) - HalfLaurent::v_pow(2);
    CHECK(decompose_antisymmetric(f) == HalfLaurent::v_pow(-2));
    CHECK(decompose_antisymmetric(HalfLaurent::zero()).is_zero());
    HalfLaurent g = HalfLaurent::v_pow(-6, Int(2)) - HalfLaurent::v_pow(6, Int(2)) +
                    HalfLaurent::v_pow(-2) - HalfLaurent::v_pow(2);
    CHECK(decompose_antisymmetric(g) ==
          HalfLaurent::v_pow(-6, Int(2)) + HalfLaurent::v_pow(-2));
    CHECK_THROWS_AS(decompose_antisymmetric(HalfLaurent::one()), std::domain_error);

    // round trip h -> h - bar(h) -> h for h supported on negative powers
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> nterms(0, 4), expo(1, 6), coef(-9, 9);
        HalfLaurent h;
        const int k = nterms(rng);
        for (int t = 0; t < k; ++t) h += HalfLaurent::v_pow(-2 * expo(rng), Int(coef(rng)));
        CHECK(decompose_antisymmetric(h - h.bar()) == h);
    }
}

TEST_CASE("serialization helpers") {
    HalfLaurent f = HalfLaurent::v_pow(3, Int(-2)) + HalfLaurent::one();
    CHECK(f.str() == "-2*v^(3/2) + 1");
    CHECK(HalfLaurent::zero().str() == "0");
    CHECK(!f.has_integer_exponents());
}
