#include "qca/context.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qca {

int Root::height() const {
    int h = 0;
    for (int x : d) h += x;
    return h;
}

bool Root::is_zero() const {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

Root Root::operator+(const Root& rhs) const {
    Root r(*this);
    for (std::size_t i = 0; i < d.size(); ++i) r.d[i] += rhs.d[i];
    return r;
}

Root Root::operator-(const Root& rhs) const {
    Root r(*this);
    for (std::size_t i = 0; i < d.size(); ++i) r.d[i] -= rhs.d[i];
    return r;
}

Root Root::interval(int rank, int lo, int hi) {
    Root r(rank);
    for (int i = lo; i <= hi; ++i) r.d[static_cast<std::size_t>(i - 1)] = 1;
    return r;
}

std::string Root::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) os << "+";
        if (d[i] != 1) os << d[i] << "*";
        os << "a" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string variant_name(Variant v) { return v == Variant::full ? "full" : "qprime"; }

Variant variant_from_name(const std::string& s) {
    if (s == "full") return Variant::full;
    if (s == "qprime") return Variant::qprime;
    throw std::domain_error("unknown variant: " + s);
}

std::string GenInfo::dual_name() const {
    return (dual_is_y ? "y" : "z") + std::to_string(vertex);
}

Context::Context(int rank, Variant variant) : rank_(rank), variant_(variant) {
    if (variant_ == Variant::full) {
        if (rank_ < 3 || rank_ % 2 == 0)
            throw std::domain_error("full variant needs odd rank >= 3");
    } else {
        if (rank_ < 4 || rank_ % 2 != 0)
            throw std::domain_error("qprime variant needs even rank >= 4");
    }
    cartan_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_), 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    build_word();
    build_betas();
    classify_generators();
    cross_check();
}

void Context::build_word() {
    std::vector<int> block;
    for (int i = 1; i <= rank_; i += 2) block.push_back(i);
    for (int i = 2; i <= rank_; i += 2) block.push_back(i);
    word_ = block;
    word_.insert(word_.end(), block.begin(), block.end());
}

Root Context::reflect(int i, const Root& r) const {
    Root alpha = Root::simple(rank_, i);
    int c = cartan_form(r, alpha);
    Root out = r;
    out.d[static_cast<std::size_t>(i - 1)] -= c;
    return out;
}

void Context::build_betas() {
    betas_.clear();
    for (std::size_t k = 0; k < word_.size(); ++k) {
        Root b = Root::simple(rank_, word_[k]);
        for (std::size_t l = k; l-- > 0;) b = reflect(word_[l], b);
        betas_.push_back(std::move(b));
    }
}

void Context::classify_generators() {
    gens_.clear();
    slot_of_y_.assign(static_cast<std::size_t>(rank_) + 1, -1);
    slot_of_z_.assign(static_cast<std::size_t>(rank_) + 1, -1);
    for (int k = 0; k < num_gens(); ++k) {
        GenInfo g;
        g.beta = betas_[static_cast<std::size_t>(k)];
        // interval from the support of beta; every beta_k is an interval root
        int lo = 0, hi = 0;
        for (int i = 1; i <= rank_; ++i) {
            int c = g.beta.d[static_cast<std::size_t>(i - 1)];
            if (c == 1) {
                if (lo == 0) lo = i;
                hi = i;
            } else if (c != 0) {
                throw std::runtime_error("beta is not an interval root");
            }
        }
        if (lo == 0 || g.beta != Root::interval(rank_, lo, hi))
            throw std::runtime_error("beta support is not contiguous");
        g.lo = lo;
        g.hi = hi;
        g.vertex = word_[static_cast<std::size_t>(k)];
        const bool second_block = k >= rank_;
        const bool odd_vertex = g.vertex % 2 == 1;
        g.kind = second_block ? (odd_vertex ? GenKind::w : GenKind::x)
                              : (odd_vertex ? GenKind::u : GenKind::v);
        g.dual_is_y = (g.kind == GenKind::u || g.kind == GenKind::x);
        (g.dual_is_y ? slot_of_y_ : slot_of_z_)[static_cast<std::size_t>(g.vertex)] = k;
        gens_.push_back(std::move(g));
    }
}

void Context::cross_check() const {
    std::set<Root> seen;
    int height_sum = 0;
    for (const auto& b : betas_) {
        if (b.is_zero() || !seen.insert(b).second)
            throw std::runtime_error("beta sequence not pairwise distinct positive roots");
        if (cartan_form(b, b) != 2) throw std::runtime_error("(beta,beta) != 2");
        height_sum += b.height();
    }
    // For n >= 5 the derived degrees must reproduce the injective/AR-translate
    // interval table of the uniform description, generator by generator.
    if (variant_ == Variant::full && rank_ >= 5) {
        const int n = rank_;
        auto expect = [&](const GenInfo& g) -> Root {
            const int i = g.vertex;
            switch (g.kind) {
                case GenKind::u: return Root::interval(n, i, i);
                case GenKind::v: return Root::interval(n, i - 1, i + 1);
                case GenKind::w:
                    if (i == 1) return Root::interval(n, 2, 3);
                    if (i == n) return Root::interval(n, n - 2, n - 1);
                    return Root::interval(n, i - 2, i + 2);
                case GenKind::x:
                    if (i == 2) return Root::interval(n, 2, 5);
                    if (i == n - 1) return Root::interval(n, n - 4, n - 1);
                    return Root::interval(n, i - 3, i + 3);
            }
            return Root(n);
        };
        for (const GenInfo& g : gens_)
            if (g.beta != expect(g)) throw std::runtime_error("generator degree differs from the AR table");
    }
    (void)height_sum;
}

int Context::slot_y(int i) const {
    if (i < 1 || i > rank_) throw std::domain_error("slot_y: index out of range");
    return slot_of_y_[static_cast<std::size_t>(i)];
}

int Context::slot_z(int i) const {
    if (i == 0 || i == rank_ + 1) return -1; // z_0 = z_{n+1} = 1
    if (i < 0 || i > rank_ + 1) throw std::domain_error("slot_z: index out of range");
    return slot_of_z_[static_cast<std::size_t>(i)];
}

int Context::cartan_form(const Root& a, const Root& b) const {
    if (a.rank() != rank_ || b.rank() != rank_)
        throw std::domain_error("cartan_form: rank mismatch");
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.d[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            s += a.d[static_cast<std::size_t>(i)] * cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 b.d[static_cast<std::size_t>(j)];
    }
    return s;
}

int Context::norm(const Root& gamma) const {
    int ff = cartan_form(gamma, gamma);
    if (ff % 2 != 0) throw std::runtime_error("odd (gamma,gamma)");
    return ff / 2 - gamma.height();
}

int Context::norm_of_exp(const ExpVec& a) const { return norm(deg_of_exp(a)); }

Root Context::deg_y(int i) const { return gen(slot_y(i)).beta; }

Root Context::deg_z(int i) const {
    int s = slot_z(i);
    return s < 0 ? Root(rank_) : gen(s).beta;
}

Root Context::deg_of_exp(const ExpVec& a) const {
    Root g(rank_);
    for (int k = 0; k < num_gens(); ++k) {
        int c = a[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const Root& b = gen(k).beta;
        for (int i = 0; i < rank_; ++i) g.d[static_cast<std::size_t>(i)] += c * b.d[static_cast<std::size_t>(i)];
    }
    return g;
}

Context::IntervalSums Context::interval_sums(int i, int j) const {
    IntervalSums r{Root(rank_), Root(rank_), Root(rank_)};
    for (int s = std::max(i, 1); s <= std::min(j, rank_); ++s) {
        Root dy = deg_y(s);
        r.s = r.s + dy;
        if (s % 2 == 1)
            r.o = r.o + dy;
        else
            r.e = r.e + dy;
    }
    return r;
}

int Context::a_coeff(int i, int j) {
    if (j - i < 2) throw std::domain_error("a_coeff: requires j-i >= 2");
    return j - i <= 3 ? -1 : -2;
}

std::string Context::describe() const {
    std::ostringstream os;
    os << "rank " << rank_ << " variant " << variant_name(variant_) << "\n";
    os << "word:";
    for (int j : word_) os << " " << j;
    os << "\n";
    for (int k = 0; k < num_gens(); ++k) {
        const GenInfo& g = gen(k);
        os << "slot " << k << ": " << g.dual_name() << " beta=" << g.beta.str() << " interval=[" << g.lo << ","
           << g.hi << "]\n";
    }
    return os.str();
}

} // namespace qca
