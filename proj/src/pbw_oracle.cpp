#include "qca/shuffle.hpp"
#include "qca/verify.hpp"

#include <sstream>

namespace qca {

namespace {

std::string pair_name(const Context& ctx, int hi, int lo) {
    return ctx.gen(hi).dual_name() + "*" + ctx.gen(lo).dual_name();
}

} // namespace

// Checks every straightening relation as an exact identity in the quantum
// shuffle algebra.  The dual table is checked on the E*(beta) expansions; the
// primal table (transcribed verbatim) is checked on the X_{i,j} expansions.
// X and E* expansions differ by (1-v^{-2}) powers, so the two heavy shuffle
// products per pair are computed once and reused.
Report verify_straightening_oracle(PbwAlgebra& alg) {
    const Context& ctx = alg.context();
    Report rep;

    std::vector<ShuffleElement> exp;
    std::vector<HalfLaurent> xscale; // E* -> X scaling per generator
    const HalfLaurent base = HalfLaurent::one() - HalfLaurent::v_pow(-4);
    for (int k = 0; k < ctx.num_gens(); ++k) {
        exp.push_back(dual_generator_shuffle(ctx, k));
        xscale.push_back(base.pow(ctx.gen(k).hi - ctx.gen(k).lo));
    }

    auto word_product = [&](const std::vector<int>& word, const HalfLaurent& scale) {
        ShuffleElement acc = ShuffleElement::monomial(ShuffleWord(), scale);
        for (int s : word) acc = shuffle_product(ctx, acc, exp[static_cast<std::size_t>(s)]);
        return acc;
    };

    std::vector<std::vector<const RewriteRule*>> primal(
        static_cast<std::size_t>(ctx.num_gens() * ctx.num_gens()));
    for (const RewriteRule& r : alg.primal_rules())
        primal[static_cast<std::size_t>(r.hi * ctx.num_gens() + r.lo)].push_back(&r);

    for (int hi = 0; hi < ctx.num_gens(); ++hi) {
        for (int lo = 0; lo < hi; ++lo) {
            const ShuffleElement hi_lo = shuffle_product(ctx, exp[static_cast<std::size_t>(hi)],
                                                         exp[static_cast<std::size_t>(lo)]);
            const ShuffleElement lo_hi = shuffle_product(ctx, exp[static_cast<std::size_t>(lo)],
                                                         exp[static_cast<std::size_t>(hi)]);

            const RewriteRule& d = alg.dual_rule(hi, lo);
            ShuffleElement rhs = lo_hi.scaled(d.lead);
            for (const auto& [c, w] : d.corrections) rhs += word_product(w, c);
            rep.add("dual/" + pair_name(ctx, hi, lo), hi_lo == rhs, d.is_plain() ? "commutation" : "listed");

            const HalfLaurent pair_scale = xscale[static_cast<std::size_t>(hi)] * xscale[static_cast<std::size_t>(lo)];
            const auto& prs = primal[static_cast<std::size_t>(hi * ctx.num_gens() + lo)];
            ShuffleElement plhs = hi_lo.scaled(pair_scale);
            ShuffleElement prhs = lo_hi.scaled(pair_scale);
            if (prs.empty()) {
                rep.add("primal/" + pair_name(ctx, hi, lo), plhs == prhs, "commutation");
            } else {
                const RewriteRule& r = *prs.front();
                prhs = prhs.scaled(r.lead);
                for (const auto& [c, w] : r.corrections) {
                    HalfLaurent cs = c;
                    for (int s : w) cs *= xscale[static_cast<std::size_t>(s)];
                    prhs += word_product(w, cs);
                }
                rep.add("primal/" + pair_name(ctx, hi, lo), plhs == prhs, "listed");
            }
        }
    }
    return rep;
}

// The coefficient of the swapped pair in every straightened product equals
// v^{(beta_lo, beta_hi)}.
Report verify_leading_coefficients(PbwAlgebra& alg) {
    const Context& ctx = alg.context();
    Report rep;
    for (int hi = 0; hi < ctx.num_gens(); ++hi)
        for (int lo = 0; lo < hi; ++lo) {
            const RewriteRule& r = alg.dual_rule(hi, lo);
            const int expected = ctx.cartan_form(ctx.gen(lo).beta, ctx.gen(hi).beta);
            const bool ok = r.lead == HalfLaurent::v_pow(2 * expected);
            std::ostringstream os;
            os << "lead=" << r.lead.str() << " form=" << expected;
            rep.add("leadcoeff/" + pair_name(ctx, hi, lo), ok, os.str());
        }
    return rep;
}

} // namespace qca
