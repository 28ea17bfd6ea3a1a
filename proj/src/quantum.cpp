#include "qca/quantum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qca {

TorusElement TorusElement::monomial(ExpVec c, HalfLaurent f) {
    TorusElement e;
    if (!f.is_zero()) e.terms_.emplace(std::move(c), std::move(f));
    return e;
}

void TorusElement::add_term(const ExpVec& c, const HalfLaurent& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElement TorusElement::operator+(const TorusElement& rhs) const {
    TorusElement r(*this);
    for (const auto& [c, f] : rhs.terms_) r.add_term(c, f);
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& rhs) const {
    TorusElement r(*this);
    for (const auto& [c, f] : rhs.terms_) r.add_term(c, -f);
    return r;
}

TorusElement TorusElement::scaled(const HalfLaurent& f) const {
    TorusElement r;
    if (f.is_zero()) return r;
    for (const auto& [c, g] : terms_) r.terms_.emplace(c, g * f);
    return r;
}

HalfLaurent QuantumTorus::twist(const ExpVec& c, const ExpVec& d) const {
    long e = 0;
    for (int r = 1; r < lambda_.rows; ++r) {
        if (c[static_cast<std::size_t>(r)] == 0) continue;
        for (int s = 0; s < r; ++s)
            e += static_cast<long>(c[static_cast<std::size_t>(r)]) * d[static_cast<std::size_t>(s)] *
                 lambda_.at(r, s);
    }
    return HalfLaurent::v_pow(static_cast<int>(2 * e));
}

TorusElement QuantumTorus::mul(const TorusElement& x, const TorusElement& y) const {
    TorusElement out;
    for (const auto& [c, f] : x.terms())
        for (const auto& [d, g] : y.terms()) {
            ExpVec e = c;
            for (std::size_t t = 0; t < e.size(); ++t) e[t] += d[t];
            out.add_term(e, f * g * twist(c, d));
        }
    return out;
}

TorusElement QuantumTorus::div_right(const TorusElement& x, const TorusElement& y) const {
    if (y.is_zero()) throw std::domain_error("QuantumTorus: division by zero");
    TorusElement rem = x, quot;
    const ExpVec yexp = std::prev(y.terms().end())->first;
    const HalfLaurent ycoef = std::prev(y.terms().end())->second;
    long guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 5'000'000) throw std::runtime_error("QuantumTorus: division does not terminate");
        const ExpVec rexp = std::prev(rem.terms().end())->first;
        const HalfLaurent rcoef = std::prev(rem.terms().end())->second;
        ExpVec t = rexp;
        for (std::size_t s = 0; s < t.size(); ++s) t[s] -= yexp[s];
        const HalfLaurent tc = rcoef.div_exact(ycoef * twist(t, yexp));
        TorusElement term = TorusElement::monomial(t, tc);
        rem = rem - mul(term, y);
        quot = quot + term;
        if (!rem.is_zero() && !(std::prev(rem.terms().end())->first < rexp))
            throw std::runtime_error("QuantumTorus: division failed to reduce");
    }
    return quot;
}

HalfLaurent QuantumTorus::normalization(const ExpVec& c) const {
    long e = 0;
    for (int r = 0; r < lambda_.rows; ++r)
        for (int s = r + 1; s < lambda_.rows; ++s)
            e += static_cast<long>(c[static_cast<std::size_t>(r)]) * c[static_cast<std::size_t>(s)] *
                 lambda_.at(s, r);
    return HalfLaurent::v_pow(static_cast<int>(e));
}

IntMat lambda_matrix(const Context& ctx, PbwAlgebra& alg) {
    const int n = ctx.rank();
    std::vector<DualPBWElement> vars;
    for (int i = 1; i <= n; ++i) vars.push_back(alg.gen_element(ctx.slot_z(i)));
    for (int i = 1; i <= n; ++i) vars.push_back(alg.p_element(i));
    IntMat lambda(2 * n, 2 * n);
    for (int k = 0; k < 2 * n; ++k)
        for (int l = k + 1; l < 2 * n; ++l) {
            auto e = alg.v_commutation_exponent(vars[static_cast<std::size_t>(k)],
                                                vars[static_cast<std::size_t>(l)]);
            if (!e.has_value()) throw std::runtime_error("lambda_matrix: pair is not v-commutative");
            lambda.at(k, l) = *e;
            lambda.at(l, k) = -*e;
        }
    return lambda;
}

std::optional<std::vector<long>> check_compatible(const IntMat& b, const IntMat& lambda) {
    if (b.rows != lambda.rows) throw std::domain_error("check_compatible: dimension mismatch");
    std::vector<long> diag;
    for (int c = 0; c < b.cols; ++c) {
        for (int l = 0; l < lambda.cols; ++l) {
            long m = 0;
            for (int r = 0; r < b.rows; ++r) m += b.at(r, c) * lambda.at(r, l);
            if (l == c) {
                if (m <= 0) return std::nullopt;
                diag.push_back(m);
            } else if (m != 0) {
                return std::nullopt;
            }
        }
    }
    return diag;
}

int frozen_scaling_twice(const Context& ctx, int i) {
    const Root gamma = ctx.deg_y(i) + ctx.deg_z(i);
    const int ff = ctx.cartan_form(gamma, gamma);
    if (ff % 2 != 0) throw std::runtime_error("frozen scaling off the v^{1/2} grid");
    return ff / 2;
}

QuantumSeed base_quantum_seed(const Context& ctx, PbwAlgebra& alg) {
    QuantumSeed s;
    s.b = base_b_matrix(ctx.rank());
    s.lambda = lambda_matrix(ctx, alg);
    for (int i = 1; i <= ctx.rank(); ++i) frozen_scaling_twice(ctx, i); // grid check
    for (int k = 0; k < 2 * ctx.rank(); ++k) {
        ExpVec e(static_cast<std::size_t>(2 * ctx.rank()), 0);
        e[static_cast<std::size_t>(k)] = 1;
        s.values.push_back(TorusElement::monomial(std::move(e), HalfLaurent::one()));
    }
    return s;
}

namespace {

// normalization scalar over the *current* Lambda
HalfLaurent current_normalization(const QuantumSeed& seed, const ExpVec& c) {
    long e = 0;
    for (int r = 0; r < seed.lambda.rows; ++r)
        for (int s = r + 1; s < seed.lambda.rows; ++s)
            e += static_cast<long>(c[static_cast<std::size_t>(r)]) * c[static_cast<std::size_t>(s)] *
                 seed.lambda.at(s, r);
    return HalfLaurent::v_pow(static_cast<int>(e));
}

} // namespace

QuantumSeed quantum_mutate(const QuantumTorus& torus, const QuantumSeed& seed, int k) {
    const int rows = seed.b.rows, cols = seed.b.cols;
    if (k < 1 || k > cols) throw std::domain_error("quantum_mutate: vertex is not mutable");
    if (!check_compatible(seed.b, seed.lambda)) throw std::domain_error("quantum_mutate: incompatible seed");
    const int kc = k - 1;

    auto monomial_value = [&](const ExpVec& d, const HalfLaurent& scale) {
        // normalized product of current cluster variables, slot order
        TorusElement acc = TorusElement::monomial(ExpVec(static_cast<std::size_t>(rows), 0),
                                                  scale * current_normalization(seed, d));
        for (int r = 0; r < rows; ++r)
            for (int t = 0; t < d[static_cast<std::size_t>(r)]; ++t)
                acc = torus.mul(acc, seed.values[static_cast<std::size_t>(r)]);
        return acc;
    };

    TorusElement numer;
    for (int sign : {+1, -1}) {
        ExpVec c(static_cast<std::size_t>(rows), 0);
        c[static_cast<std::size_t>(kc)] = -1;
        for (int r = 0; r < rows; ++r) {
            const long e = seed.b.at(r, kc) * sign;
            if (e > 0) c[static_cast<std::size_t>(r)] += static_cast<int>(e);
        }
        long alpha = 0; // (1/2) Lambda_cur(c, e_k), doubled below
        for (int r = 0; r < rows; ++r) alpha += static_cast<long>(c[static_cast<std::size_t>(r)]) * seed.lambda.at(r, kc);
        ExpVec d = c;
        d[static_cast<std::size_t>(kc)] += 1;
        numer = numer + monomial_value(d, HalfLaurent::v_pow(static_cast<int>(alpha)));
    }
    QuantumSeed out;
    out.values = seed.values;
    out.values[static_cast<std::size_t>(kc)] =
        torus.div_right(numer, seed.values[static_cast<std::size_t>(kc)]);

    // B' by matrix mutation, Lambda' = E^T Lambda E with the epsilon = +1 matrix
    out.b = IntMat(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (r == kc || c == kc) {
                out.b.at(r, c) = -seed.b.at(r, c);
            } else {
                const long brk = seed.b.at(r, kc), bkc = seed.b.at(kc, c);
                out.b.at(r, c) = seed.b.at(r, c) + (std::abs(brk) * bkc + brk * std::abs(bkc)) / 2;
            }
        }
    IntMat e(rows, rows);
    for (int r = 0; r < rows; ++r) e.at(r, r) = 1;
    for (int r = 0; r < rows; ++r)
        e.at(r, kc) = r == kc ? -1 : std::max(0L, -seed.b.at(r, kc));
    out.lambda = IntMat(rows, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < rows; ++c) {
            long s = 0;
            for (int t = 0; t < rows; ++t)
                for (int u = 0; u < rows; ++u) s += e.at(t, r) * seed.lambda.at(t, u) * e.at(u, c);
            out.lambda.at(r, c) = s;
        }
    return out;
}

DualPBWElement substitute_frame(PbwAlgebra& alg, const TorusElement& x) {
    const Context& ctx = alg.context();
    const int n = ctx.rank();
    DualPBWElement out;
    for (const auto& [c, f] : x.terms()) {
        int scale_twice = 0;
        for (int k = 0; k < 2 * n; ++k) {
            const int e = c[static_cast<std::size_t>(k)];
            if (e < 0) throw std::domain_error("substitute_frame: negative exponent");
            scale_twice += k < n ? e : e * frozen_scaling_twice(ctx, k - n + 1);
        }
        DualPBWElement acc = alg.unit().scaled(f * HalfLaurent::v_pow(scale_twice));
        for (int k = 1; k <= n; ++k)
            for (int t = 0; t < c[static_cast<std::size_t>(k - 1)]; ++t)
                acc = alg.mul_gen(acc, ctx.slot_z(k));
        for (int i = 1; i <= n; ++i)
            for (int t = 0; t < c[static_cast<std::size_t>(n + i - 1)]; ++t)
                acc = alg.mul(acc, alg.p_element(i));
        out = out + acc;
    }
    return out;
}

Report verify_quantum_chain(DcbSolver& solver, int i, int j) {
    PbwAlgebra& alg = solver.algebra();
    const Context& ctx = alg.context();
    const int n = ctx.rank();
    Report rep;
    std::ostringstream tag;
    tag << "(" << i << "," << j << ")";

    QuantumSeed seed = base_quantum_seed(ctx, alg);
    QuantumTorus torus(seed.lambda);
    if (!check_compatible(seed.b, seed.lambda)) {
        rep.add("chain" + tag.str(), false, "base seed incompatible");
        return rep;
    }
    for (int k = i; k <= j; ++k) seed = quantum_mutate(torus, seed, k);
    const TorusElement& x = seed.values[static_cast<std::size_t>(j - 1)];

    ExpVec den(static_cast<std::size_t>(2 * n), 0);
    for (const auto& [c, f] : x.terms())
        for (std::size_t t = 0; t < den.size(); ++t) den[t] = std::max(den[t], -c[t]);
    TorusElement denom = TorusElement::monomial(den, HalfLaurent::one());
    DualPBWElement lhs = substitute_frame(alg, torus.mul(x, denom));

    const Root s = ctx.interval_sums(i, j).s;
    const int ss = ctx.cartan_form(s, s);
    if (ss % 2 != 0) {
        rep.add("chain" + tag.str(), false, "(s,s)/2 not integral");
        return rep;
    }
    DualPBWElement rhs =
        alg.mul(solver.delta_v(i, j).scaled(HalfLaurent::v_pow(ss / 2)), substitute_frame(alg, denom));
    rep.add("chain" + tag.str(), lhs == rhs);
    return rep;
}

} // namespace qca
