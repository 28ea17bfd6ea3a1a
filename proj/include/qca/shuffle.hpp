#pragma once

#include "qca/context.hpp"
#include "qca/laurent.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace qca {

// A word in the quantum shuffle algebra F; letters are vertex indices stored
// as bytes, so words up to 15 letters stay in SSO storage.
using ShuffleWord = std::string;

ShuffleWord make_word(std::initializer_list<int> letters);
std::string word_str(const ShuffleWord& w);

// Finitely supported Laurent combination of shuffle words.
class ShuffleElement {
public:
    using TermMap = std::unordered_map<ShuffleWord, HalfLaurent>;

    ShuffleElement() = default;
    static ShuffleElement zero() { return {}; }
    static ShuffleElement unit() { return monomial(ShuffleWord(), HalfLaurent::one()); }
    static ShuffleElement monomial(ShuffleWord w, HalfLaurent c);
    static ShuffleElement letter(int i);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ShuffleWord& w, const HalfLaurent& c);
    void add_term_shifted(const ShuffleWord& w, const HalfLaurent& c, int twice_shift);
    ShuffleElement& operator+=(const ShuffleElement& rhs);
    ShuffleElement& operator-=(const ShuffleElement& rhs);
    ShuffleElement operator+(const ShuffleElement& rhs) const;
    ShuffleElement operator-(const ShuffleElement& rhs) const;
    ShuffleElement scaled(const HalfLaurent& c) const;

    bool operator==(const ShuffleElement& rhs) const;
    bool operator!=(const ShuffleElement& rhs) const { return !(*this == rhs); }

    // Letter multiset as a root-lattice element; requires homogeneity.
    bool is_homogeneous(int rank) const;
    Root degree(int rank) const;

    // Deterministic (lexicographic) term order for output.
    std::vector<std::pair<ShuffleWord, HalfLaurent>> sorted_terms() const;
    std::string str() const;

private:
    TermMap terms_;
};

// Quantum shuffle product, bilinear in both arguments.
ShuffleElement shuffle_product(const Context& ctx, const ShuffleElement& x, const ShuffleElement& y);

// Shuffle product of two single words with multiplicity-aware exponents.
void shuffle_words_into(const Context& ctx, const ShuffleWord& a, const ShuffleWord& b,
                        const HalfLaurent& coeff, ShuffleElement& out);

// E*(beta_k) expanded in the shuffle basis: the 0/1 sum over alternating
// permutations of the generator's interval.
ShuffleElement dual_generator_shuffle(const Context& ctx, int slot);

// Same expansion for an arbitrary interval [lo,hi].
ShuffleElement interval_shuffle_expansion(const Context& ctx, int lo, int hi);

// Number of alternating permutations for an interval of length h+1.
long euler_count(int h);

// True iff every shuffle coefficient of the homogeneous x is bar-invariant;
// by Leclerc's criterion this certifies sigma(x) = v^{N(|x|)} x.
bool is_sigma_selfdual(const Context& ctx, const ShuffleElement& x);

} // namespace qca
