#pragma once

#include "qca/context.hpp"
#include "qca/laurent.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qca {

// Thrown when the rewriting engine exceeds its iteration budget; signals a
// broken rule table, never expected on valid input.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Rewrite rule for a wrongly ordered product of two generators:
//   g_hi * g_lo  =  lead * [g_lo g_hi]  +  sum_j coeff_j * [word_j]
// where word_j is an ordered factor sequence of length 1 or 2.
struct RewriteRule {
    int hi = -1, lo = -1; // slots, hi > lo
    HalfLaurent lead;
    std::vector<std::pair<HalfLaurent, std::vector<int>>> corrections;

    bool is_plain() const { return corrections.empty() && lead.is_one(); }
};

// Element of U_v^+(w) in dual PBW coordinates: a finitely supported map from
// exponent vectors a to the coefficient of E[a]*.
class DualPBWElement {
public:
    using TermMap = std::map<ExpVec, HalfLaurent>;

    DualPBWElement() = default;

    static DualPBWElement zero() { return {}; }
    static DualPBWElement monomial(ExpVec a, HalfLaurent c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    HalfLaurent coeff(const ExpVec& a) const;

    void add_term(const ExpVec& a, const HalfLaurent& c);
    DualPBWElement operator+(const DualPBWElement& rhs) const;
    DualPBWElement operator-(const DualPBWElement& rhs) const;
    DualPBWElement scaled(const HalfLaurent& c) const;
    bool operator==(const DualPBWElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const DualPBWElement& rhs) const { return terms_ != rhs.terms_; }

    bool is_homogeneous(const Context& ctx) const;
    Root degree(const Context& ctx) const; // requires homogeneous, nonzero

    std::string str(const Context& ctx) const;

private:
    TermMap terms_;
};

// b(a) = sum_k C(a_k, 2); the twist between the ordered generator product and
// the dual PBW basis element E[a]*.
long b_function(const ExpVec& a);

// The straightening engine and dual-PBW arithmetic for one Context.  The
// rule table is immutable; the memo table makes a single instance
// thread-confined (use one instance per thread for concurrent work).
class PbwAlgebra {
public:
    explicit PbwAlgebra(const Context& ctx);

    const Context& context() const { return ctx_; }

    // Complete dual rule table, every unordered pair (hi > lo).
    const RewriteRule& dual_rule(int hi, int lo) const;
    std::vector<RewriteRule> straightening_table() const;

    // Primal-side rule table (verbatim transcription), used only by the
    // shuffle-oracle cross-check.
    const std::vector<RewriteRule>& primal_rules() const { return primal_rules_; }

    // Straighten an arbitrarily ordered product of dual generators.
    DualPBWElement straighten_word(const std::vector<int>& slots,
                                   const HalfLaurent& coeff = HalfLaurent::one());

    DualPBWElement gen_element(int slot);
    DualPBWElement unit() { return DualPBWElement::monomial(ExpVec(static_cast<std::size_t>(ctx_.num_gens()), 0), HalfLaurent::one()); }
    // p_i = y_i z_i - v^{-1} z_{i-1} z_{i+1} (odd i; factors swapped for even i)
    DualPBWElement p_element(int i);

    DualPBWElement mul(const DualPBWElement& x, const DualPBWElement& y);
    DualPBWElement mul_gen(const DualPBWElement& x, int slot); // x * E*(beta_slot)

    // sigma: reverse factors, bar coefficients, multiply by v^{a_k N(beta_k)}.
    DualPBWElement sigma(const DualPBWElement& x);

    // x*y = v^{(result)/1} y*x; nullopt when no single exponent exists.
    std::optional<int> v_commutation_exponent(const DualPBWElement& x, const DualPBWElement& y);

    // Queue-based rewriting with an explicit strategy, used by the confluence
    // property tests as an independent route through the rule system.
    enum class Strategy { leftmost, rightmost };
    DualPBWElement straighten_queue(const std::vector<int>& slots, Strategy strategy,
                                    long budget = 20'000'000);

    void set_budget(long ops) { budget_ = ops; }
    void clear_cache();

private:
    const Context& ctx_;
    std::vector<RewriteRule> rules_;        // flat 2n x 2n, entry hi*2n+lo used for hi > lo
    std::vector<RewriteRule> primal_rules_; // listed primal relations only

    // plain-product coordinates: map a -> coefficient of E*(b1)^{a_1}...
    using PMap = std::map<ExpVec, HalfLaurent>;
    std::unordered_map<ExpVec, PMap, ExpVecHash> memo_; // key: a with slot appended
    long budget_ = 100'000'000;
    long ops_ = 0;

    const PMap& mul_gen_plain(const ExpVec& a, int slot);
    DualPBWElement from_plain(const PMap& p) const;

    void build_tables();
};

// Commutative polynomial in Y_1..Y_n, Z_1..Z_n with integer coefficients;
// exponent vectors are laid out [Y_1..Y_n, Z_1..Z_n].
class YZPoly;

// Specialization at v = 1; throws on half-integer exponents.
YZPoly specialize_v1(const Context& ctx, const DualPBWElement& x);

} // namespace qca
