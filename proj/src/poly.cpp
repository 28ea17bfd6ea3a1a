#include "qca/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qca {

YZPoly YZPoly::constant(int rank, Int c) {
    YZPoly p(rank);
    if (c != 0) p.terms_.emplace(ExpVec(static_cast<std::size_t>(2 * rank), 0), std::move(c));
    return p;
}

YZPoly YZPoly::Y(int rank, int i) {
    if (i < 1 || i > rank) throw std::domain_error("YZPoly::Y: index out of range");
    YZPoly p(rank);
    ExpVec m(static_cast<std::size_t>(2 * rank), 0);
    m[static_cast<std::size_t>(i - 1)] = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
}

YZPoly YZPoly::Z(int rank, int i) {
    if (i == 0 || i == rank + 1) return constant(rank, 1);
    if (i < 0 || i > rank + 1) throw std::domain_error("YZPoly::Z: index out of range");
    YZPoly p(rank);
    ExpVec m(static_cast<std::size_t>(2 * rank), 0);
    m[static_cast<std::size_t>(rank + i - 1)] = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
}

YZPoly YZPoly::P(int rank, int i) { return Y(rank, i) * Z(rank, i) - Z(rank, i - 1) * Z(rank, i + 1); }

bool YZPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    if (c != 1) return false;
    for (int e : m)
        if (e != 0) return false;
    return true;
}

void YZPoly::add_term(const ExpVec& mono, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

YZPoly YZPoly::operator+(const YZPoly& rhs) const {
    YZPoly r(*this);
    for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
    return r;
}

YZPoly YZPoly::operator-(const YZPoly& rhs) const {
    YZPoly r(*this);
    for (const auto& [m, c] : rhs.terms_) r.add_term(m, -c);
    return r;
}

YZPoly YZPoly::operator-() const {
    YZPoly r(rank_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

YZPoly YZPoly::operator*(const YZPoly& rhs) const {
    YZPoly r(rank_ ? rank_ : rhs.rank_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            ExpVec m = ma;
            for (std::size_t t = 0; t < m.size(); ++t) m[t] += mb[t];
            r.add_term(m, ca * cb);
        }
    return r;
}

YZPoly YZPoly::div_exact(const YZPoly& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("YZPoly: division by zero");
    YZPoly rem(*this);
    YZPoly quot(rank_);
    const auto dlead = std::prev(rhs.terms_.end()); // lex-largest
    while (!rem.is_zero()) {
        const ExpVec rexp = rem.terms_.rbegin()->first;
        const Int rcoef = rem.terms_.rbegin()->second;
        ExpVec m = rexp;
        for (std::size_t t = 0; t < m.size(); ++t) {
            m[t] -= dlead->first[t];
            if (m[t] < 0) throw std::domain_error("YZPoly: inexact division (monomial)");
        }
        if (rcoef % dlead->second != 0)
            throw std::domain_error("YZPoly: inexact division (coefficient)");
        Int c = rcoef / dlead->second;
        YZPoly term(rank_);
        term.terms_.emplace(std::move(m), std::move(c));
        rem = rem - term * rhs;
        quot = quot + term;
        if (!rem.is_zero() && !(rem.terms_.rbegin()->first < rexp))
            throw std::domain_error("YZPoly: inexact division");
    }
    return quot;
}

std::string YZPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const ExpVec& m = it->first;
        bool any = false;
        std::ostringstream vars;
        for (std::size_t t = 0; t < m.size(); ++t) {
            if (m[t] == 0) continue;
            if (any) vars << "*";
            const int idx = static_cast<int>(t) % rank_ + 1;
            vars << (static_cast<int>(t) < rank_ ? "Y" : "Z") << idx;
            if (m[t] > 1) vars << "^" << m[t];
            any = true;
        }
        if (!any) {
            os << c;
        } else if (c == 1) {
            os << vars.str();
        } else {
            os << c << "*" << vars.str();
        }
    }
    return os.str();
}

} // namespace qca
