#pragma once

#include "qca/context.hpp"
#include "qca/poly.hpp"
#include "qca/report.hpp"

#include <string>
#include <vector>

namespace qca {

// Integer matrix with row-major storage.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
    long& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    long at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Classical seed: extended exchange matrix over n mutable + n frozen rows and
// the mutable variable values as polynomials in Y, Z.  Frozen variables are
// the P_i and never change.
struct Seed {
    IntMat b;                    // (2n) x n, rows = [mutable z-vertices, frozen p-vertices]
    std::vector<YZPoly> values;  // n mutable values

    bool operator==(const Seed& o) const { return b == o.b && values == o.values; }
};

// Base seed: mutable alternating quiver isomorphic to Q (arrows odd -> even)
// plus one arrow per frozen vertex, P_i -> Z_i for odd i and Z_i -> P_i for
// even i; b_{st} = +1 for an arrow s -> t.
Seed base_seed(const Context& ctx);

// The same extended exchange matrix without values (shared with the quantum
// seed construction).
IntMat base_b_matrix(int rank);

// Standard matrix mutation plus the binomial exchange on values; involutive.
Seed mutate(const Context& ctx, const Seed& seed, int k); // k: 1-based mutable vertex

// Delta_{i,j} by the determinant recursion; exact polynomial in Z[Y,Z].
YZPoly delta_classical(const Context& ctx, int i, int j);

// Fraction-field determinant of Definition "c-matrix" form plus the exchange
// identity Delta_{i,j} Z_j = P_j Delta_{i,j-1} + Z_{j+1} P_{j-1} Delta_{i,j-2}.
bool delta_determinant_check(const Context& ctx, int i, int j);

struct ExchangeGraph {
    int vertex_count = 0;
    bool regular = true;            // every seed has exactly n distinct neighbors
    std::vector<std::pair<int, int>> edges; // vertex ids, i < j
    std::vector<std::string> variables;     // distinct mutable variable values (canonical strings)
    std::vector<std::vector<std::string>> clusters; // per vertex, sorted value strings
};

// Full exchange graph by breadth-first mutation, seeds deduplicated up to
// relabeling; feasible for small rank only.
ExchangeGraph exchange_graph(const Context& ctx, int max_rank = 4);

// DOT emission (digraph; node/edge statements only).
std::string seed_quiver_dot(const Context& ctx, const IntMat& b);
std::string exchange_graph_dot(const ExchangeGraph& g);

} // namespace qca
