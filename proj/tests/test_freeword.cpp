#include <doctest.h>

#include "qca/freeword.hpp"

#include <random>

using namespace qca;

namespace {

FreeElement serre_combination(int i, int j) {
    FreeElement ei = FreeElement::generator(i), ej = FreeElement::generator(j);
    return ei * ei * ej - (ei * ej * ei).scaled(quantum_integer(2)) + ej * ei * ei;
}

FreeElement random_word(const Context& ctx, std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> letter(1, ctx.rank());
    std::string w;
    for (int t = 0; t < len; ++t) w.push_back(static_cast<char>(letter(rng)));
    return FreeElement::monomial(std::move(w), HalfLaurent::one());
}

} // namespace

TEST_CASE("x_interval base cases") {
    Context ctx(3, Variant::full);
    CHECK(x_interval(ctx, 1, 1) == FreeElement::generator(1));
    // X_{1,2} = E_2 E_1 - v^{-1} E_1 E_2
    FreeElement x12 = x_interval(ctx, 1, 2);
    FreeElement expected = FreeElement::generator(2) * FreeElement::generator(1) -
                           (FreeElement::generator(1) * FreeElement::generator(2))
                               .scaled(HalfLaurent::v_pow(-2));
    CHECK(x12 == expected);
}

TEST_CASE("x_interval embeds onto the scaled alternating expansion") {
    Context ctx(5, Variant::full);
    const HalfLaurent scale = HalfLaurent::one() - HalfLaurent::v_pow(-4); // 1 - v^{-2}
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= 5; ++j) {
            ShuffleElement lhs = embed_shuffle(ctx, x_interval(ctx, i, j));
            ShuffleElement rhs = interval_shuffle_expansion(ctx, i, j).scaled(scale.pow(j - i));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("e_prime basics") {
    Context ctx(3, Variant::full);
    FreeElement e1 = FreeElement::generator(1), e2 = FreeElement::generator(2);
    CHECK(e_prime(ctx, 1, e1) == FreeElement::unit());
    CHECK(e_prime(ctx, 2, e1).is_zero());
    CHECK(e_prime(ctx, 1, e1 * e2) == e2);
    // Leibniz: E_1'(E_2 E_1) = v^{(a1,a2)} E_2
    CHECK(e_prime(ctx, 1, e2 * e1) == e2.scaled(HalfLaurent::v_pow(-2)));
}

TEST_CASE("kashiwara form values") {
    Context ctx(5, Variant::full);
    KashiwaraForm kf(ctx);
    FreeElement e1 = FreeElement::generator(1), e2 = FreeElement::generator(2);
    CHECK(kf.form(e1, e1) == HalfLaurent::one());
    CHECK(kf.form(e1, e2).is_zero());
    FreeElement x12 = x_interval(ctx, 1, 2);
    CHECK(kf.form(x12, x12) == HalfLaurent::one() - HalfLaurent::v_pow(-4));
    // (E(beta), E(beta)) = (1 - v^{-2})^{j-i} for interval roots
    const HalfLaurent base = HalfLaurent::one() - HalfLaurent::v_pow(-4);
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= 5; ++j) {
            FreeElement x = x_interval(ctx, i, j);
            CHECK(kf.form(x, x) == base.pow(j - i));
        }
}

TEST_CASE("form is symmetric and vanishes across degrees") {
    Context ctx(3, Variant::full);
    KashiwaraForm kf(ctx);
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> len(1, 4);
        FreeElement x = random_word(ctx, rng, len(rng));
        FreeElement y = random_word(ctx, rng, len(rng));
        CHECK(kf.form(x, y) == kf.form(y, x));
        if (x.degree(3) != y.degree(3)) CHECK(kf.form(x, y).is_zero());
    }
}

TEST_CASE("form kills the Serre relations (well-definedness)") {
    Context ctx(5, Variant::full);
    KashiwaraForm kf(ctx);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> len(0, 2), vertex(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int i = vertex(rng);
        int j = i + 1;
        if (trial % 2) std::swap(i, j);
        FreeElement s = serre_combination(i, j);
        FreeElement y = random_word(ctx, rng, len(rng)) * s * random_word(ctx, rng, len(rng));
        // pair against arbitrary words of the same degree
        Root deg = y.degree(5);
        std::string w;
        for (int t = 0; t < 5; ++t)
            for (int c = 0; c < deg.d[static_cast<std::size_t>(t)]; ++c)
                w.push_back(static_cast<char>(t + 1));
        std::shuffle(w.begin(), w.end(), rng);
        FreeElement x = FreeElement::monomial(w, HalfLaurent::one());
        CHECK(kf.form(x, y).is_zero());
        CHECK(kf.form(y, x).is_zero());
    }
}
