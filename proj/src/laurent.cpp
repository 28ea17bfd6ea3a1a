#include "qca/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qca {

HalfLaurent::HalfLaurent(Int constant) {
    if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

HalfLaurent HalfLaurent::v_pow(int twice, Int coeff) {
    HalfLaurent f;
    if (coeff != 0) f.terms_.emplace_back(twice, std::move(coeff));
    return f;
}

bool HalfLaurent::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool HalfLaurent::has_integer_exponents() const {
    for (const auto& t : terms_)
        if (t.first % 2 != 0) return false;
    return true;
}

Int HalfLaurent::coefficient(int twice_exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), twice_exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == twice_exponent) return it->second;
    return 0;
}

int HalfLaurent::min_twice_exp() const {
    if (terms_.empty()) throw std::domain_error("min_twice_exp of zero");
    return terms_.front().first;
}

int HalfLaurent::max_twice_exp() const {
    if (terms_.empty()) throw std::domain_error("max_twice_exp of zero");
    return terms_.back().first;
}

void HalfLaurent::prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
}

HalfLaurent HalfLaurent::from_sorted(std::vector<Term> t) {
    HalfLaurent f;
    f.terms_ = std::move(t);
    f.prune();
    return f;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& rhs) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin(), b = rhs.terms_.begin();
    while (a != terms_.end() && b != rhs.terms_.end()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.push_back(*b++);
        } else {
            Int c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, terms_.end());
    out.insert(out.end(), b, rhs.terms_.end());
    HalfLaurent f;
    f.terms_ = std::move(out);
    return f;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& rhs) const { return *this + (-rhs); }

HalfLaurent HalfLaurent::operator*(const HalfLaurent& rhs) const {
    if (is_zero() || rhs.is_zero()) return HalfLaurent();
    // Dense accumulation over the exponent window keeps this allocation-light.
    const int lo = terms_.front().first + rhs.terms_.front().first;
    const int hi = terms_.back().first + rhs.terms_.back().first;
    std::vector<Int> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_) acc[static_cast<std::size_t>(a.first + b.first - lo)] += a.second * b.second;
    std::vector<Term> out;
    for (int e = lo; e <= hi; ++e) {
        Int& c = acc[static_cast<std::size_t>(e - lo)];
        if (c != 0) out.emplace_back(e, std::move(c));
    }
    return from_sorted(std::move(out));
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& rhs) { return *this = *this + rhs; }

void HalfLaurent::add_shifted(const HalfLaurent& rhs, int twice_shift) {
    if (rhs.is_zero()) return;
    if (terms_.empty()) {
        terms_ = rhs.terms_;
        for (auto& t : terms_) t.first += twice_shift;
        return;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() && b != rhs.terms_.end()) {
        const int be = b->first + twice_shift;
        if (a->first < be) {
            out.push_back(std::move(*a++));
        } else if (be < a->first) {
            out.emplace_back(be, b->second);
            ++b;
        } else {
            Int c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
    for (; b != rhs.terms_.end(); ++b) out.emplace_back(b->first + twice_shift, b->second);
    terms_ = std::move(out);
}
HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& rhs) { return *this = *this - rhs; }
HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& rhs) { return *this = *this * rhs; }

HalfLaurent HalfLaurent::bar() const {
    std::vector<Term> out(terms_.rbegin(), terms_.rend());
    for (auto& t : out) t.first = -t.first;
    HalfLaurent f;
    f.terms_ = std::move(out);
    return f;
}

HalfLaurent HalfLaurent::pow(int e) const {
    if (e < 0) throw std::domain_error("HalfLaurent::pow: negative exponent");
    HalfLaurent r = one();
    HalfLaurent base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

HalfLaurent HalfLaurent::div_exact(const HalfLaurent& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("HalfLaurent: division by zero");
    if (is_zero()) return HalfLaurent();
    HalfLaurent rem = *this;
    std::vector<Term> quot;
    const Term dlead = rhs.terms_.back();
    while (!rem.is_zero()) {
        const Term rlead = rem.terms_.back();
        if (rlead.second % dlead.second != 0)
            throw std::domain_error("HalfLaurent: inexact division (coefficient)");
        Term t(rlead.first - dlead.first, rlead.second / dlead.second);
        rem -= rhs * v_pow(t.first, t.second);
        if (!rem.is_zero() && rem.terms_.back().first >= rlead.first)
            throw std::domain_error("HalfLaurent: inexact division");
        quot.push_back(std::move(t));
    }
    std::reverse(quot.begin(), quot.end());
    return from_sorted(std::move(quot));
}

Int HalfLaurent::eval_at_one() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

std::string HalfLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        const int e = it->first;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "v^";
        if (e % 2 == 0) {
            os << e / 2;
        } else {
            os << "(" << e << "/2)";
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HalfLaurent& f) { return os << f.str(); }

HalfLaurent quantum_integer(int k) {
    if (k < 0) throw std::domain_error("quantum_integer: negative argument");
    HalfLaurent r;
    for (int j = 0; j < k; ++j) r += HalfLaurent::v_pow(2 * (k - 1 - 2 * j));
    return r;
}

HalfLaurent quantum_factorial(int k) {
    HalfLaurent r = HalfLaurent::one();
    for (int j = 2; j <= k; ++j) r *= quantum_integer(j);
    return r;
}

HalfLaurent quantum_binomial(int k, int l) {
    if (l < 0 || k < 0 || l > k) throw std::domain_error("quantum_binomial: need 0 <= l <= k");
    return quantum_factorial(k).div_exact(quantum_factorial(l) * quantum_factorial(k - l));
}

HalfLaurent decompose_antisymmetric(const HalfLaurent& f) {
    if (!f.has_integer_exponents())
        throw std::domain_error("decompose_antisymmetric: half-integer exponent");
    if (f.bar() != -f) throw std::domain_error("decompose_antisymmetric: input not antisymmetric");
    std::vector<HalfLaurent::Term> neg;
    for (const auto& t : f.terms()) {
        if (t.first < 0) neg.push_back(t);
    }
    HalfLaurent h;
    for (const auto& t : neg) h += HalfLaurent::v_pow(t.first, t.second);
    return h;
}

} // namespace qca
