#pragma once

#include "qca/cluster.hpp"
#include "qca/dcb.hpp"
#include "qca/laurent.hpp"
#include "qca/pbw.hpp"
#include "qca/report.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qca {

// Element of the quantum torus over the initial frame: Laurent combination of
// the slot-ordered monomials X_1^{c_1} ... X_{2n}^{c_{2n}} with X_k X_l =
// v^{Lambda_{kl}} X_l X_k.
class TorusElement {
public:
    using TermMap = std::map<ExpVec, HalfLaurent>;

    TorusElement() = default;
    static TorusElement monomial(ExpVec c, HalfLaurent f);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(const ExpVec& c, const HalfLaurent& f);
    TorusElement operator+(const TorusElement& rhs) const;
    TorusElement operator-(const TorusElement& rhs) const;
    TorusElement scaled(const HalfLaurent& f) const;
    bool operator==(const TorusElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const TorusElement& rhs) const { return !(*this == rhs); }

private:
    TermMap terms_;
};

// The quantum torus of the initial frame; owns the Lambda matrix of the
// initial cluster and implements the twisted product and exact division.
class QuantumTorus {
public:
    explicit QuantumTorus(IntMat lambda) : lambda_(std::move(lambda)) {}

    const IntMat& lambda() const { return lambda_; }
    int size() const { return lambda_.rows; }

    TorusElement mul(const TorusElement& x, const TorusElement& y) const;
    // x / y from the right: returns q with q*y = x; throws when not Laurent.
    TorusElement div_right(const TorusElement& x, const TorusElement& y) const;

    // v^{(1/2) sum_{r<s} c_r c_s Lambda_{sr}} (the normalization scalar that
    // makes the slot-ordered monomial bar-invariant).
    HalfLaurent normalization(const ExpVec& c) const;

private:
    IntMat lambda_;
    HalfLaurent twist(const ExpVec& c, const ExpVec& d) const; // X^c * X^d = twist * X^{c+d}
};

// Lambda matrix of the base quantum cluster {z_1..z_n, p_1..p_n}: entries are
// the computed v-commutation exponents; throws when a pair fails to
// v-commute.
IntMat lambda_matrix(const Context& ctx, PbwAlgebra& alg);

// Berenstein-Zelevinsky compatibility: B^T Lambda = (D 0) with positive
// diagonal D; returns the diagonal entries or nullopt.
std::optional<std::vector<long>> check_compatible(const IntMat& b, const IntMat& lambda);

// Quantum seed: exchange matrix, current Lambda, and current cluster values
// expressed in the initial torus.
struct QuantumSeed {
    IntMat b;                        // (2n) x n
    IntMat lambda;                   // (2n) x (2n), current cluster
    std::vector<TorusElement> values; // 2n values (frozen tail never mutates)
};

// Base quantum seed: X_k = the k-th initial frame generator.
QuantumSeed base_quantum_seed(const Context& ctx, PbwAlgebra& alg);

// One BZ mutation step at mutable vertex k (1-based); involutive.
QuantumSeed quantum_mutate(const QuantumTorus& torus, const QuantumSeed& seed, int k);

// Verification that the chain of mutations at i, i+1, ..., j reproduces
// v^{(s_{i,j},s_{i,j})/4} Delta^v_{i,j} after clearing the z-denominator.
Report verify_quantum_chain(DcbSolver& solver, int i, int j);

// The substitution map Phi from nonnegative torus monomials into U_v^+(w):
// X_k -> v^{1/2} z_k (k <= n), X_{n+i} -> v^{(|y_i|+|z_i|,|y_i|+|z_i|)/4} p_i.
DualPBWElement substitute_frame(PbwAlgebra& alg, const TorusElement& x);

// Twice the exponent of the frozen-variable scaling v^{(1/4)(...)}; checked
// integral at startup.
int frozen_scaling_twice(const Context& ctx, int i);

} // namespace qca
