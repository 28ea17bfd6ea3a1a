#pragma once

#include "qca/pbw.hpp"
#include "qca/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qca {

// Thrown when two independent computations of the same element disagree.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// The partial order on exponent vectors: a <| b iff b - a is a nonnegative
// integer combination of the degree-neutral step vectors
//   v_i = e_{z_{i-1}} + e_{z_{i+1}} - e_{y_i} - e_{z_i},
// with the z_0 = z_{n+1} = 1 convention dropping the boundary summands.
// Straightening corrections move strictly upward in this order.
class OrderData {
public:
    explicit OrderData(const Context& ctx);

    const std::vector<ExpVec>& step_vectors() const { return steps_; }

    // a <| b; decided exactly (the y-components determine the coefficients).
    bool leq(const ExpVec& a, const ExpVec& b) const;

    enum class TieBreak { revlex, lex };
    // Fixed linear extension: graded by descending y-weight, tie-broken
    // deterministically.
    bool extension_less(const ExpVec& a, const ExpVec& b, TieBreak tb = TieBreak::revlex) const;

    // All b >= a (in the order) with nonnegative entries.
    std::vector<ExpVec> upset(const ExpVec& a) const;

private:
    const Context& ctx_;
    std::vector<ExpVec> steps_;
    int y_weight(const ExpVec& a) const;
};

// All a in N^{2n} with sum a_k beta_k = gamma, sorted by the linear extension
// (smallest first).
std::vector<ExpVec> enumerate_degree(const Context& ctx, const Root& gamma,
                                     OrderData::TieBreak tb = OrderData::TieBreak::revlex);

// Triangular solver for the dual canonical basis.
class DcbSolver {
public:
    DcbSolver(PbwAlgebra& alg, OrderData::TieBreak tb = OrderData::TieBreak::revlex);

    const Context& context() const { return alg_.context(); }
    PbwAlgebra& algebra() { return alg_; }
    const OrderData& order() const { return order_; }

    // B[a]*: unitriangular over dual PBW with v^{-1}Z[v^{-1}] corrections and
    // sigma-eigenvector with eigenvalue v^{N(a)}.
    const DualPBWElement& element(const ExpVec& a);

    // Solve a full graded piece; returns the elements in extension order
    // (smallest exponent first).
    std::vector<std::pair<ExpVec, DualPBWElement>> solve_degree(const Root& gamma);

    // Quantum cluster variable Delta^v_{i,j}, computed both by the triangular
    // solver and by the recursion, with exact agreement enforced.
    const DualPBWElement& delta_v(int i, int j);

    // Leading exponent vector of Delta^v_{i,j}.
    ExpVec delta_leading_exp(int i, int j) const;

    // Exponent a with x*y = v^a y*x.
    std::optional<int> v_commutation_exponent(const DualPBWElement& x, const DualPBWElement& y) {
        return alg_.v_commutation_exponent(x, y);
    }

    // Recursion, exchange, and commutator identities of the quantum minors
    // (families a-d) for one pair (i,j).
    Report verify_delta_identities(int i, int j);

    // Allows preloading cached elements (see cache.hpp); key is the exponent.
    void preload(const ExpVec& a, DualPBWElement b) { solved_.emplace(a, std::move(b)); }
    const std::map<ExpVec, DualPBWElement>& solved() const { return solved_; }

private:
    PbwAlgebra& alg_;
    OrderData order_;
    OrderData::TieBreak tb_;
    std::map<ExpVec, DualPBWElement> solved_;
    std::map<std::pair<int, int>, DualPBWElement> deltas_;

    void solve_chain(std::vector<ExpVec> exponents);
    DualPBWElement delta_recursive(int i, int j);
};

} // namespace qca
