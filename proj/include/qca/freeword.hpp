#pragma once

#include "qca/context.hpp"
#include "qca/laurent.hpp"
#include "qca/shuffle.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace qca {

// Combination of words in the Chevalley generators E_i; a word is a string of
// generator subscripts.  Elements are representatives modulo the quantized
// Serre relations.
class FreeElement {
public:
    using TermMap = std::unordered_map<std::string, HalfLaurent>;

    FreeElement() = default;
    static FreeElement zero() { return {}; }
    static FreeElement unit() { return monomial(std::string(), HalfLaurent::one()); }
    static FreeElement monomial(std::string w, HalfLaurent c);
    static FreeElement generator(int i);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(const std::string& w, const HalfLaurent& c);

    FreeElement operator+(const FreeElement& rhs) const;
    FreeElement operator-(const FreeElement& rhs) const;
    FreeElement operator*(const FreeElement& rhs) const; // concatenation product
    FreeElement scaled(const HalfLaurent& c) const;
    bool operator==(const FreeElement& rhs) const;
    bool operator!=(const FreeElement& rhs) const { return !(*this == rhs); }

    bool is_homogeneous(int rank) const;
    Root degree(int rank) const;

    std::vector<std::pair<std::string, HalfLaurent>> sorted_terms() const;
    std::string str() const;

private:
    TermMap terms_;
};

// X_{i,j} built by the interval recursion; X_{i,i} = E_i.
FreeElement x_interval(const Context& ctx, int i, int j);

// Kashiwara's operator E_i' extended by the Leibniz rule.
FreeElement e_prime(const Context& ctx, int i, const FreeElement& x);

// Push a free-word element through the embedding E_i -> w[i].
ShuffleElement embed_shuffle(const Context& ctx, const FreeElement& x);

// Kashiwara's bilinear form, computed by peeling the second argument via the
// adjointness (E_i'(x), y) = (x, E_i y).  Memoized on word pairs.
class KashiwaraForm {
public:
    explicit KashiwaraForm(const Context& ctx) : ctx_(ctx) {}

    HalfLaurent form(const FreeElement& x, const FreeElement& y);
    void clear_cache() { memo_.clear(); }

private:
    const Context& ctx_;
    std::unordered_map<std::string, HalfLaurent> memo_; // key: xword '\xff' yword

    HalfLaurent form_words(const std::string& x, const std::string& y);
};

} // namespace qca
