#include "qca/json_io.hpp"

#include <sstream>

namespace qca {

json laurent_to_json(const HalfLaurent& f) {
    json out = json::array();
    for (const auto& [e, c] : f.terms()) out.push_back({e, c.str()});
    return out;
}

HalfLaurent laurent_from_json(const json& j) {
    HalfLaurent f;
    for (const auto& t : j) f += HalfLaurent::v_pow(t.at(0).get<int>(), Int(t.at(1).get<std::string>()));
    return f;
}

json shuffle_to_json(const ShuffleElement& x) {
    json out = json::array();
    for (const auto& [w, c] : x.sorted_terms()) {
        json word = json::array();
        for (char l : w) word.push_back(static_cast<int>(l));
        out.push_back({{"word", word}, {"coeff", laurent_to_json(c)}});
    }
    return out;
}

json pbw_to_json(const Context& ctx, const DualPBWElement& x) {
    json terms = json::array();
    for (const auto& [a, c] : x.terms())
        terms.push_back({{"a", a}, {"coeff", laurent_to_json(c)}});
    return {{"n", ctx.rank()},
            {"variant", variant_name(ctx.variant())},
            {"basis", "dualPBW"},
            {"terms", terms}};
}

DualPBWElement pbw_from_json(const Context& ctx, const json& j) {
    if (j.at("n").get<int>() != ctx.rank() ||
        j.at("variant").get<std::string>() != variant_name(ctx.variant()))
        throw std::domain_error("pbw_from_json: context mismatch");
    DualPBWElement x;
    for (const auto& t : j.at("terms"))
        x.add_term(t.at("a").get<ExpVec>(), laurent_from_json(t.at("coeff")));
    return x;
}

json context_to_json(const Context& ctx) {
    json gens = json::array();
    for (int k = 0; k < ctx.num_gens(); ++k) {
        const GenInfo& g = ctx.gen(k);
        gens.push_back({{"slot", k},
                        {"beta", g.beta.d},
                        {"interval", {g.lo, g.hi}},
                        {"dual", g.dual_name()}});
    }
    return {{"n", ctx.rank()},
            {"variant", variant_name(ctx.variant())},
            {"word", ctx.reduced_word()},
            {"generators", gens}};
}

json intmat_to_json(const IntMat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

json quantum_seed_to_json(const QuantumSeed& seed) {
    json values = json::array();
    for (const auto& v : seed.values) {
        json terms = json::array();
        for (const auto& [c, f] : v.terms())
            terms.push_back({{"exponents", c}, {"prefactor", laurent_to_json(f)}});
        values.push_back(terms);
    }
    return {{"B", intmat_to_json(seed.b)}, {"Lambda", intmat_to_json(seed.lambda)}, {"frame", values}};
}

} // namespace qca
