#pragma once

#include "qca/ints.hpp"

#include <array>
#include <string>
#include <vector>

namespace qca {

// Element of the type-A root lattice, stored as the coefficient vector of the
// simple roots.
struct Root {
    std::vector<int> d;

    Root() = default;
    explicit Root(int rank) : d(static_cast<std::size_t>(rank), 0) {}

    int rank() const { return static_cast<int>(d.size()); }
    int height() const;
    bool is_zero() const;

    Root operator+(const Root& rhs) const;
    Root operator-(const Root& rhs) const;
    bool operator==(const Root& rhs) const { return d == rhs.d; }
    bool operator!=(const Root& rhs) const { return d != rhs.d; }
    bool operator<(const Root& rhs) const { return d < rhs.d; }

    // [lo,hi] interval root alpha_lo + ... + alpha_hi (1-based); lo > hi gives 0.
    static Root interval(int rank, int lo, int hi);
    static Root simple(int rank, int i) { return interval(rank, i, i); }

    std::string str() const; // e.g. "a1+a2+a3"
};

enum class Variant { full, qprime };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

enum class GenKind { u, v, w, x };

// One slot of the PBW generator sequence.
struct GenInfo {
    Root beta;        // degree
    int lo = 0, hi = 0; // interval [lo,hi] with beta = alpha_lo+...+alpha_hi
    GenKind kind = GenKind::u;
    bool dual_is_y = false; // dual generator is y_{vertex} (else z_{vertex})
    int vertex = 0;         // 1..n
    std::string dual_name() const;
};

// Root-system and word combinatorics for the fixed Weyl group element, shared
// by every other module.  Immutable after construction.
class Context {
public:
    Context(int rank, Variant variant);

    int rank() const { return rank_; }
    Variant variant() const { return variant_; }
    int num_gens() const { return 2 * rank_; }

    const std::vector<int>& reduced_word() const { return word_; }
    const std::vector<Root>& betas() const { return betas_; }
    const GenInfo& gen(int slot) const { return gens_.at(static_cast<std::size_t>(slot)); }

    // Slot (0-based position in the PBW order) of y_i / z_i; -1 when the
    // index falls on the z_0 = z_{n+1} = 1 convention.
    int slot_y(int i) const;
    int slot_z(int i) const;

    int cartan_form(const Root& a, const Root& b) const;
    // N(gamma) = (gamma,gamma)/2 - height(gamma)
    int norm(const Root& gamma) const;
    int norm_of_exp(const ExpVec& a) const;

    Root deg_y(int i) const; // |y_i|, i in 1..n
    Root deg_z(int i) const; // |z_i|; z_0 and z_{n+1} give the zero root
    Root deg_of_exp(const ExpVec& a) const;

    struct IntervalSums {
        Root s, o, e;
    };
    // s_{i,j}, o_{i,j}, e_{i,j}; empty interval (i > j) gives zeros.
    IntervalSums interval_sums(int i, int j) const;

    // A_{i,j}: -1 for j-i <= 3, -2 for j-i >= 4; requires j-i >= 2.
    static int a_coeff(int i, int j);

    std::string describe() const;

private:
    int rank_;
    Variant variant_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> word_; // 2n vertex indices, 1-based
    std::vector<Root> betas_;
    std::vector<GenInfo> gens_;
    std::vector<int> slot_of_y_, slot_of_z_; // by vertex, 1-based

    Root reflect(int i, const Root& r) const; // simple reflection s_i
    void build_word();
    void build_betas();
    void classify_generators();
    void cross_check() const;
};

} // namespace qca
