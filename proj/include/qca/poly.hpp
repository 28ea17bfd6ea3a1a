#pragma once

#include "qca/ints.hpp"

#include <map>
#include <string>

namespace qca {

// Commutative polynomial over Z in Y_1..Y_n, Z_1..Z_n.  Exponent vectors are
// laid out [Y_1..Y_n, Z_1..Z_n]; term order for printing is lex descending in
// that variable order.
class YZPoly {
public:
    using TermMap = std::map<ExpVec, Int>;

    YZPoly() = default;
    explicit YZPoly(int rank) : rank_(rank) {}

    static YZPoly constant(int rank, Int c);
    static YZPoly Y(int rank, int i);
    static YZPoly Z(int rank, int i); // Z(0) and Z(n+1) give the constant 1
    // P_i = Y_i Z_i - Z_{i-1} Z_{i+1}
    static YZPoly P(int rank, int i);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    void add_term(const ExpVec& mono, const Int& c);
    YZPoly operator+(const YZPoly& rhs) const;
    YZPoly operator-(const YZPoly& rhs) const;
    YZPoly operator*(const YZPoly& rhs) const;
    YZPoly operator-() const;
    bool operator==(const YZPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const YZPoly& rhs) const { return !(*this == rhs); }

    // Exact division; throws std::domain_error when not divisible.
    YZPoly div_exact(const YZPoly& rhs) const;

    std::string str() const; // e.g. "Y1*Y2*Y3 - Y1*Z1 - Y3*Z3 + Z2"

private:
    int rank_ = 0;
    TermMap terms_;
};

} // namespace qca
