#pragma once

#include "qca/ints.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace qca {

// Exact Laurent polynomial in v^{1/2} over arbitrary-precision integers.
// Exponents are stored doubled, so the term c*v^{e/2} is kept as (e, c); this
// puts every half-integer power of v on an integer grid.  Terms are sorted by
// ascending doubled exponent and never carry a zero coefficient.
class HalfLaurent {
public:
    using Term = std::pair<int, Int>; // (twice_exponent, coefficient)

    HalfLaurent() = default;
    explicit HalfLaurent(Int constant);

    static HalfLaurent zero() { return HalfLaurent(); }
    static HalfLaurent one() { return HalfLaurent(Int(1)); }
    // v^{twice/2}, i.e. v_pow(2) == v and v_pow(1) == v^{1/2}.
    static HalfLaurent v_pow(int twice, Int coeff = Int(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }

    // All exponents lie on the integer grid (no stray half powers).
    bool has_integer_exponents() const;

    Int coefficient(int twice_exponent) const;
    int min_twice_exp() const; // requires nonzero
    int max_twice_exp() const; // requires nonzero

    HalfLaurent operator-() const;
    HalfLaurent operator+(const HalfLaurent& rhs) const;
    HalfLaurent operator-(const HalfLaurent& rhs) const;
    HalfLaurent operator*(const HalfLaurent& rhs) const;
    HalfLaurent& operator+=(const HalfLaurent& rhs);
    HalfLaurent& operator-=(const HalfLaurent& rhs);
    HalfLaurent& operator*=(const HalfLaurent& rhs);

    // *this += rhs * v^{twice_shift/2}, merging in place.
    void add_shifted(const HalfLaurent& rhs, int twice_shift);

    bool operator==(const HalfLaurent& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const HalfLaurent& rhs) const { return terms_ != rhs.terms_; }

    // bar involution v^{1/2} -> v^{-1/2}
    HalfLaurent bar() const;

    HalfLaurent pow(int e) const; // e >= 0

    // Exact division; throws std::domain_error when rhs does not divide this.
    HalfLaurent div_exact(const HalfLaurent& rhs) const;

    // Specialization at v = 1 (sum of coefficients).
    Int eval_at_one() const;

    // If *this == c * v^{twice/2} for a single term, return that term.
    bool is_monomial() const { return terms_.size() == 1; }

    std::string str() const; // human-readable, e.g. "v^2 + 1 + v^-2"

private:
    std::vector<Term> terms_;

    void prune();
    static HalfLaurent from_sorted(std::vector<Term> t);
    friend struct HalfLaurentBuilder;
};

std::ostream& operator<<(std::ostream& os, const HalfLaurent& f);

// [k] = (v^k - v^{-k})/(v - v^{-1})
HalfLaurent quantum_integer(int k);
// [k]!
HalfLaurent quantum_factorial(int k);
// [k]! / ([l]! [k-l]!), exact polynomial division; requires 0 <= l <= k.
HalfLaurent quantum_binomial(int k, int l);

// Given f with bar(f) = -f and integer exponents, returns the unique h
// supported on strictly negative powers of v with h - bar(h) = f.
HalfLaurent decompose_antisymmetric(const HalfLaurent& f);

} // namespace qca
