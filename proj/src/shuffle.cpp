#include "qca/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qca {

ShuffleWord make_word(std::initializer_list<int> letters) {
    ShuffleWord w;
    w.reserve(letters.size());
    for (int l : letters) w.push_back(static_cast<char>(l));
    return w;
}

std::string word_str(const ShuffleWord& w) {
    std::ostringstream os;
    os << "w[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << static_cast<int>(w[i]);
    }
    os << "]";
    return os.str();
}

ShuffleElement ShuffleElement::monomial(ShuffleWord w, HalfLaurent c) {
    ShuffleElement e;
    if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
    return e;
}

ShuffleElement ShuffleElement::letter(int i) {
    ShuffleWord w;
    w.push_back(static_cast<char>(i));
    return monomial(std::move(w), HalfLaurent::one());
}

void ShuffleElement::add_term(const ShuffleWord& w, const HalfLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void ShuffleElement::add_term_shifted(const ShuffleWord& w, const HalfLaurent& c, int twice_shift) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w);
    it->second.add_shifted(c, twice_shift);
    if (it->second.is_zero()) terms_.erase(it);
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

ShuffleElement ShuffleElement::operator+(const ShuffleElement& rhs) const {
    ShuffleElement r(*this);
    r += rhs;
    return r;
}

ShuffleElement ShuffleElement::operator-(const ShuffleElement& rhs) const {
    ShuffleElement r(*this);
    r -= rhs;
    return r;
}

ShuffleElement ShuffleElement::scaled(const HalfLaurent& c) const {
    ShuffleElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, f] : terms_) r.terms_.emplace(w, f * c);
    return r;
}

bool ShuffleElement::operator==(const ShuffleElement& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    for (const auto& [w, c] : terms_) {
        auto it = rhs.terms_.find(w);
        if (it == rhs.terms_.end() || it->second != c) return false;
    }
    return true;
}

bool ShuffleElement::is_homogeneous(int rank) const {
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

Root ShuffleElement::degree(int rank) const {
    if (!is_homogeneous(rank)) throw std::domain_error("degree of non-homogeneous shuffle element");
    Root d(rank);
    if (!terms_.empty()) {
        const ShuffleWord& w = terms_.begin()->first;
        for (char l : w) d.d[static_cast<std::size_t>(l - 1)] += 1;
    }
    return d;
}

std::vector<std::pair<ShuffleWord, HalfLaurent>> ShuffleElement::sorted_terms() const {
    std::vector<std::pair<ShuffleWord, HalfLaurent>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string ShuffleElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << word_str(w);
    }
    return os.str();
}

namespace {

// Interleavings of a and b, built left to right.  A letter of b placed after
// p letters of a contributes (alpha over that a-prefix, alpha of the letter)
// to e(pi); in particular w[2]*w[1] = w[1,2] + v^{-1} w[2,1].
void shuffle_rec(const Context& ctx, const ShuffleWord& a, const ShuffleWord& b,
                 const std::vector<std::vector<int>>& prefix_form, std::size_t i, std::size_t j, int e,
                 ShuffleWord& acc, const HalfLaurent& coeff, ShuffleElement& out) {
    if (i == a.size() && j == b.size()) {
        out.add_term_shifted(acc, coeff, 2 * e);
        return;
    }
    if (i < a.size()) {
        acc.push_back(a[i]);
        shuffle_rec(ctx, a, b, prefix_form, i + 1, j, e, acc, coeff, out);
        acc.pop_back();
    }
    if (j < b.size()) {
        acc.push_back(b[j]);
        shuffle_rec(ctx, a, b, prefix_form, i, j + 1,
                    e + prefix_form[i][static_cast<std::size_t>(b[j])], acc, coeff, out);
        acc.pop_back();
    }
}

} // namespace

void shuffle_words_into(const Context& ctx, const ShuffleWord& a, const ShuffleWord& b,
                        const HalfLaurent& coeff, ShuffleElement& out) {
    // prefix_form[i][l] = (alpha_{a_1}+...+alpha_{a_i}, alpha_l)
    std::vector<std::vector<int>> prefix_form(a.size() + 1,
                                              std::vector<int>(static_cast<std::size_t>(ctx.rank()) + 1, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int l = 1; l <= ctx.rank(); ++l) {
            int ai = a[i];
            int f = ai == l ? 2 : (std::abs(ai - l) == 1 ? -1 : 0);
            prefix_form[i + 1][static_cast<std::size_t>(l)] = prefix_form[i][static_cast<std::size_t>(l)] + f;
        }
    }
    ShuffleWord acc;
    acc.reserve(a.size() + b.size());
    shuffle_rec(ctx, a, b, prefix_form, 0, 0, 0, acc, coeff, out);
}

ShuffleElement shuffle_product(const Context& ctx, const ShuffleElement& x, const ShuffleElement& y) {
    ShuffleElement out;
    for (const auto& [wa, ca] : x.terms())
        for (const auto& [wb, cb] : y.terms()) shuffle_words_into(ctx, wa, wb, ca * cb, out);
    return out;
}

namespace {

bool alternating_ok(const ShuffleWord& w, int lo, int hi) {
    // pos[a] = index of letter a within w
    std::vector<int> pos(static_cast<std::size_t>(hi) + 1, -1);
    for (std::size_t t = 0; t < w.size(); ++t) pos[static_cast<std::size_t>(w[t])] = static_cast<int>(t);
    for (int a = lo; a <= hi - 1; ++a)
        if (a % 2 == 0 && pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(a + 1)]) return false;
    for (int a = lo + 1; a <= hi; ++a)
        if (a % 2 == 0 && pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(a - 1)]) return false;
    return true;
}

} // namespace

ShuffleElement interval_shuffle_expansion(const Context& ctx, int lo, int hi) {
    if (lo < 1 || hi > ctx.rank() || lo > hi)
        throw std::domain_error("interval_shuffle_expansion: bad interval");
    ShuffleWord w;
    for (int a = lo; a <= hi; ++a) w.push_back(static_cast<char>(a));
    ShuffleElement out;
    do {
        if (alternating_ok(w, lo, hi)) out.add_term(w, HalfLaurent::one());
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

ShuffleElement dual_generator_shuffle(const Context& ctx, int slot) {
    if (slot < 0 || slot >= ctx.num_gens()) throw std::domain_error("dual_generator_shuffle: bad slot");
    const GenInfo& g = ctx.gen(slot);
    return interval_shuffle_expansion(ctx, g.lo, g.hi);
}

long euler_count(int h) {
    if (h < 0) throw std::domain_error("euler_count: negative length");
    // Count alternating permutations of [1, h+1] directly.
    std::vector<char> w;
    for (int a = 1; a <= h + 1; ++a) w.push_back(static_cast<char>(a));
    ShuffleWord sw(w.begin(), w.end());
    long count = 0;
    do {
        if (alternating_ok(sw, 1, h + 1)) ++count;
    } while (std::next_permutation(sw.begin(), sw.end()));
    return count;
}

bool is_sigma_selfdual(const Context& ctx, const ShuffleElement& x) {
    if (!x.is_homogeneous(ctx.rank()))
        throw std::domain_error("is_sigma_selfdual: non-homogeneous input");
    for (const auto& [w, c] : x.terms())
        if (c.bar() != c) return false;
    return true;
}

} // namespace qca
