#include <doctest.h>

#include "qca/json_io.hpp"

#include <random>

using namespace qca;

TEST_CASE("laurent serialization round trip") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> nterms(0, 6), expo(-8, 8), coef(-99, 99);
    for (int trial = 0; trial < 100; ++trial) {
        HalfLaurent f;
        for (int t = 0, k = nterms(rng); t < k; ++t)
            f += HalfLaurent::v_pow(expo(rng), Int(coef(rng)));
        CHECK(laurent_from_json(laurent_to_json(f)) == f);
    }
    // big coefficients survive the decimal-string encoding
    HalfLaurent big = HalfLaurent::v_pow(3, Int("123456789012345678901234567890"));
    CHECK(laurent_from_json(laurent_to_json(big)) == big);
}

TEST_CASE("pbw element round trip") {
    Context ctx(5, Variant::full);
    PbwAlgebra alg(ctx);
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> slot(0, ctx.num_gens() - 1), len(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> w;
        for (int t = 0, L = len(rng); t < L; ++t) w.push_back(slot(rng));
        DualPBWElement x = alg.straighten_word(w);
        CHECK(pbw_from_json(ctx, pbw_to_json(ctx, x)) == x);
    }
    Context other(3, Variant::full);
    CHECK_THROWS_AS(pbw_from_json(other, pbw_to_json(ctx, alg.unit())), std::domain_error);
}

TEST_CASE("shuffle serialization is sorted by word") {
    Context ctx(3, Variant::full);
    ShuffleElement x;
    x.add_term(make_word({2, 1}), HalfLaurent::one());
    x.add_term(make_word({1, 2}), HalfLaurent::v_pow(2));
    json j = shuffle_to_json(x);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["word"] == json::array({1, 2}));
    CHECK(j[1]["word"] == json::array({2, 1}));
}

TEST_CASE("context dump") {
    Context ctx(5, Variant::full);
    json j = context_to_json(ctx);
    CHECK(j["n"] == 5);
    CHECK(j["variant"] == "full");
    CHECK(j["generators"].size() == 10);
    CHECK(j["word"].size() == 10);
}
