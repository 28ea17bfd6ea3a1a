#include "qca/freeword.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qca {

FreeElement FreeElement::monomial(std::string w, HalfLaurent c) {
    FreeElement e;
    if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
    return e;
}

FreeElement FreeElement::generator(int i) {
    std::string w;
    w.push_back(static_cast<char>(i));
    return monomial(std::move(w), HalfLaurent::one());
}

void FreeElement::add_term(const std::string& w, const HalfLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElement FreeElement::operator+(const FreeElement& rhs) const {
    FreeElement r(*this);
    for (const auto& [w, c] : rhs.terms_) r.add_term(w, c);
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& rhs) const {
    FreeElement r(*this);
    for (const auto& [w, c] : rhs.terms_) r.add_term(w, -c);
    return r;
}

FreeElement FreeElement::operator*(const FreeElement& rhs) const {
    FreeElement r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : rhs.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

FreeElement FreeElement::scaled(const HalfLaurent& c) const {
    FreeElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, f] : terms_) r.terms_.emplace(w, f * c);
    return r;
}

bool FreeElement::operator==(const FreeElement& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    for (const auto& [w, c] : terms_) {
        auto it = rhs.terms_.find(w);
        if (it == rhs.terms_.end() || it->second != c) return false;
    }
    return true;
}

bool FreeElement::is_homogeneous(int rank) const {
    if (terms_.empty()) return true;
    Root deg;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Root d(rank);
        for (char l : w) d.d[static_cast<std::size_t>(l - 1)] += 1;
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return false;
        }
    }
    return true;
}

Root FreeElement::degree(int rank) const {
    if (!is_homogeneous(rank)) throw std::domain_error("degree of non-homogeneous element");
    Root d(rank);
    if (!terms_.empty())
        for (char l : terms_.begin()->first) d.d[static_cast<std::size_t>(l - 1)] += 1;
    return d;
}

std::vector<std::pair<std::string, HalfLaurent>> FreeElement::sorted_terms() const {
    std::vector<std::pair<std::string, HalfLaurent>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string FreeElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*E[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ",";
            os << static_cast<int>(w[i]);
        }
        os << "]";
    }
    return os.str();
}

FreeElement x_interval(const Context& ctx, int i, int j) {
    if (i < 1 || j > ctx.rank() || i > j) throw std::domain_error("x_interval: bad interval");
    FreeElement x = FreeElement::generator(i);
    for (int t = i + 1; t <= j; ++t) {
        FreeElement et = FreeElement::generator(t);
        const HalfLaurent vinv = HalfLaurent::v_pow(-2);
        if (t % 2 == 0)
            x = et * x - (x * et).scaled(vinv);
        else
            x = x * et - (et * x).scaled(vinv);
    }
    return x;
}

FreeElement e_prime(const Context& ctx, int i, const FreeElement& x) {
    if (i < 1 || i > ctx.rank()) throw std::domain_error("e_prime: vertex out of range");
    FreeElement out;
    for (const auto& [w, c] : x.terms()) {
        int prefix_form = 0; // (alpha_i, degree of the prefix)
        for (std::size_t p = 0; p < w.size(); ++p) {
            int l = w[p];
            if (l == i) {
                std::string rest = w.substr(0, p) + w.substr(p + 1);
                out.add_term(rest, c * HalfLaurent::v_pow(2 * prefix_form));
            }
            prefix_form += i == l ? 2 : (std::abs(i - l) == 1 ? -1 : 0);
        }
    }
    return out;
}

ShuffleElement embed_shuffle(const Context& ctx, const FreeElement& x) {
    ShuffleElement out;
    for (const auto& [w, c] : x.terms()) {
        ShuffleElement acc = ShuffleElement::monomial(ShuffleWord(), c);
        for (char l : w) {
            ShuffleElement next;
            for (const auto& [sw, sc] : acc.terms()) {
                ShuffleWord letter(1, l);
                shuffle_words_into(ctx, sw, letter, sc, next);
            }
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

HalfLaurent KashiwaraForm::form(const FreeElement& x, const FreeElement& y) {
    HalfLaurent r;
    for (const auto& [wy, cy] : y.terms())
        for (const auto& [wx, cx] : x.terms()) r += cx * cy * form_words(wx, wy);
    return r;
}

HalfLaurent KashiwaraForm::form_words(const std::string& x, const std::string& y) {
    if (x.size() != y.size()) return HalfLaurent::zero();
    if (x.empty()) return HalfLaurent::one();
    std::string key = x;
    key.push_back('\xff');
    key.append(y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // (x, E_i y') = (E_i'(x), y') with i the first letter of y
    const int i = y[0];
    const std::string rest = y.substr(1);
    HalfLaurent r;
    int prefix_form = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
        int l = x[p];
        if (l == i) {
            std::string xr = x.substr(0, p) + x.substr(p + 1);
            r += HalfLaurent::v_pow(2 * prefix_form) * form_words(xr, rest);
        }
        prefix_form += i == l ? 2 : (std::abs(i - l) == 1 ? -1 : 0);
    }
    memo_.emplace(std::move(key), r);
    return r;
}

} // namespace qca
