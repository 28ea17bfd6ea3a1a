#include "qca/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qca {

IntMat base_b_matrix(int rank) {
    IntMat b(2 * rank, rank);
    for (int i = 1; i <= rank; i += 2)
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > rank) continue;
            b.at(i - 1, j - 1) += 1; // arrow Z_i -> Z_j, odd source
            b.at(j - 1, i - 1) -= 1;
        }
    for (int i = 1; i <= rank; ++i) b.at(rank + i - 1, i - 1) = i % 2 == 1 ? 1 : -1;
    return b;
}

Seed base_seed(const Context& ctx) {
    Seed s;
    s.b = base_b_matrix(ctx.rank());
    for (int i = 1; i <= ctx.rank(); ++i) s.values.push_back(YZPoly::Z(ctx.rank(), i));
    return s;
}

Seed mutate(const Context& ctx, const Seed& seed, int k) {
    const int n = ctx.rank();
    if (k < 1 || k > n) throw std::domain_error("mutate: vertex is not mutable");
    const int kc = k - 1;
    Seed out;
    out.b = IntMat(2 * n, n);
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r == kc || c == kc) {
                out.b.at(r, c) = -seed.b.at(r, c);
            } else {
                const long brk = seed.b.at(r, kc), bkc = seed.b.at(kc, c);
                out.b.at(r, c) = seed.b.at(r, c) + (std::abs(brk) * bkc + brk * std::abs(bkc)) / 2;
            }
        }
    auto row_value = [&](int r) {
        return r < n ? seed.values[static_cast<std::size_t>(r)] : YZPoly::P(n, r - n + 1);
    };
    YZPoly mplus = YZPoly::constant(n, 1), mminus = YZPoly::constant(n, 1);
    for (int r = 0; r < 2 * n; ++r) {
        const long e = seed.b.at(r, kc);
        for (long t = 0; t < std::abs(e); ++t) (e > 0 ? mplus : mminus) = (e > 0 ? mplus : mminus) * row_value(r);
    }
    out.values = seed.values;
    out.values[static_cast<std::size_t>(kc)] = (mplus + mminus).div_exact(seed.values[static_cast<std::size_t>(kc)]);
    return out;
}

YZPoly delta_classical(const Context& ctx, int i, int j) {
    const int n = ctx.rank();
    if (i < 1 || j > n || i > j) throw std::domain_error("delta_classical: bad interval");
    if (j == i) return YZPoly::Y(n, i);
    if (j == i + 1) return YZPoly::Y(n, i) * YZPoly::Y(n, i + 1) - YZPoly::Z(n, i - 1) * YZPoly::Z(n, i + 2);
    YZPoly d1 = delta_classical(ctx, i, j - 1);
    YZPoly d3 = j - 3 >= i ? delta_classical(ctx, i, j - 3) : YZPoly::constant(n, j - 3 == i - 1 ? 1 : 0);
    return YZPoly::Y(n, j) * d1 - YZPoly::Z(n, j + 1) * YZPoly::P(n, j - 2) * d3;
}

namespace {

// Rational function with a monomial denominator; enough for the determinant
// cross-check, where every entry has a monomial denominator.
struct MonoFrac {
    YZPoly num;
    ExpVec den; // exponent vector of the denominator monomial

    static MonoFrac of(YZPoly p, int nvars) { return {std::move(p), ExpVec(static_cast<std::size_t>(nvars), 0)}; }
};

YZPoly shift(const YZPoly& p, const ExpVec& mono) {
    YZPoly out(p.rank());
    for (const auto& [m, c] : p.terms()) {
        ExpVec e = m;
        for (std::size_t t = 0; t < e.size(); ++t) e[t] += mono[t];
        out.add_term(e, c);
    }
    return out;
}

MonoFrac mul(const MonoFrac& a, const MonoFrac& b) {
    MonoFrac r;
    r.num = a.num * b.num;
    r.den = a.den;
    for (std::size_t t = 0; t < r.den.size(); ++t) r.den[t] += b.den[t];
    return r;
}

MonoFrac add(const MonoFrac& a, const MonoFrac& b, int sign) {
    MonoFrac r;
    r.den = a.den;
    for (std::size_t t = 0; t < r.den.size(); ++t) r.den[t] = std::max(a.den[t], b.den[t]);
    ExpVec da = r.den, db = r.den;
    for (std::size_t t = 0; t < r.den.size(); ++t) {
        da[t] -= a.den[t];
        db[t] -= b.den[t];
    }
    r.num = shift(a.num, da) + (sign > 0 ? shift(b.num, db) : -shift(b.num, db));
    return r;
}

YZPoly to_poly(const MonoFrac& f) {
    YZPoly den(f.num.rank());
    den.add_term(f.den, 1);
    return f.num.div_exact(den);
}

MonoFrac det_rec(const std::vector<std::vector<MonoFrac>>& m, std::vector<int>& rows, int col, int nvars) {
    if (col == static_cast<int>(m[0].size())) return MonoFrac::of(YZPoly::constant(nvars / 2, 1), nvars);
    MonoFrac acc = MonoFrac::of(YZPoly(nvars / 2), nvars);
    int sign = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const int r = rows[static_cast<std::size_t>(t)];
        const MonoFrac& entry = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (!entry.num.is_zero()) {
            std::vector<int> rest;
            for (std::size_t s = 0; s < rows.size(); ++s)
                if (s != t) rest.push_back(rows[s]);
            MonoFrac sub = det_rec(m, rest, col + 1, nvars);
            acc = add(acc, mul(entry, sub), sign);
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

bool delta_determinant_check(const Context& ctx, int i, int j) {
    const int n = ctx.rank();
    const int nvars = 2 * n;
    const int sz = j - i + 1;
    auto cvar = [&](int r) {
        MonoFrac f;
        f.num = YZPoly::Z(n, r - 1) * YZPoly::Z(n, r + 1);
        f.den = ExpVec(static_cast<std::size_t>(nvars), 0);
        f.den[static_cast<std::size_t>(n + r - 1)] = 1;
        return f;
    };
    std::vector<std::vector<MonoFrac>> m(static_cast<std::size_t>(sz),
                                         std::vector<MonoFrac>(static_cast<std::size_t>(sz)));
    for (int r = 0; r < sz; ++r)
        for (int s = 0; s < sz; ++s) {
            if (r == s) {
                // Y_r / c_r = Y_r Z_r / (Z_{r-1} Z_{r+1})
                MonoFrac f;
                f.num = YZPoly::Y(n, i + r) * YZPoly::Z(n, i + r);
                f.den = ExpVec(static_cast<std::size_t>(nvars), 0);
                for (int z : {i + r - 1, i + r + 1})
                    if (z >= 1 && z <= n) f.den[static_cast<std::size_t>(n + z - 1)] += 1;
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = f;
            } else if (s > r || r == s + 1) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
                    MonoFrac::of(YZPoly::constant(n, 1), nvars);
            } else {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = MonoFrac::of(YZPoly(n), nvars);
            }
        }
    std::vector<int> rows(static_cast<std::size_t>(sz));
    for (int r = 0; r < sz; ++r) rows[static_cast<std::size_t>(r)] = r;
    MonoFrac det = det_rec(m, rows, 0, nvars);
    for (int r = i; r <= j; ++r) det = mul(det, cvar(r));
    bool ok = to_poly(det) == delta_classical(ctx, i, j);

    // exchange identity
    if (j == i) {
        ok = ok && YZPoly::Y(n, i) * YZPoly::Z(n, i) ==
                       YZPoly::P(n, i) + YZPoly::Z(n, i - 1) * YZPoly::Z(n, i + 1);
    } else {
        YZPoly d1 = delta_classical(ctx, i, j - 1);
        YZPoly d2 = j - 2 >= i ? delta_classical(ctx, i, j - 2) : YZPoly::constant(n, 1);
        ok = ok && delta_classical(ctx, i, j) * YZPoly::Z(n, j) ==
                       YZPoly::P(n, j) * d1 + YZPoly::Z(n, j + 1) * YZPoly::P(n, j - 1) * d2;
    }
    return ok;
}

ExchangeGraph exchange_graph(const Context& ctx, int max_rank) {
    const int n = ctx.rank();
    if (n > max_rank) throw std::domain_error("exchange_graph: rank above feasibility bound");
    auto key_of = [&](const Seed& s) {
        std::vector<std::string> vals;
        for (const auto& p : s.values) vals.push_back(p.str());
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    ExchangeGraph g;
    std::map<std::vector<std::string>, int> ids;
    std::set<std::string> variables;
    std::set<std::pair<int, int>> edges;
    std::deque<Seed> queue;
    Seed s0 = base_seed(ctx);
    ids.emplace(key_of(s0), 0);
    g.clusters.push_back(key_of(s0));
    queue.push_back(s0);
    while (!queue.empty()) {
        Seed s = std::move(queue.front());
        queue.pop_front();
        const int sid = ids.at(key_of(s));
        std::set<int> nbrs;
        for (int k = 1; k <= n; ++k) {
            Seed t = mutate(ctx, s, k);
            auto key = key_of(t);
            auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
            if (inserted) {
                g.clusters.push_back(key);
                queue.push_back(t);
            }
            nbrs.insert(it->second);
            edges.emplace(std::min(sid, it->second), std::max(sid, it->second));
        }
        if (static_cast<int>(nbrs.size()) != n || nbrs.count(sid)) g.regular = false;
        for (const auto& p : s.values) variables.insert(p.str());
    }
    g.vertex_count = static_cast<int>(ids.size());
    g.edges.assign(edges.begin(), edges.end());
    g.variables.assign(variables.begin(), variables.end());
    return g;
}

std::string seed_quiver_dot(const Context& ctx, const IntMat& b) {
    const int n = ctx.rank();
    std::ostringstream os;
    os << "digraph seed {\n";
    for (int i = 1; i <= n; ++i) os << "  z" << i << ";\n";
    for (int i = 1; i <= n; ++i) os << "  p" << i << ";\n";
    auto name = [&](int r) {
        return (r < n ? "z" : "p") + std::to_string(r % n + 1);
    };
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < n; ++c) {
            const long e = b.at(r, c);
            for (long t = 0; t < std::abs(e); ++t) {
                if (e > 0)
                    os << "  " << name(r) << " -> " << name(c) << ";\n";
                else if (r >= n)
                    os << "  " << name(c) << " -> " << name(r) << ";\n";
            }
        }
    os << "}\n";
    return os.str();
}

std::string exchange_graph_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "digraph exchange {\n";
    for (int v = 0; v < g.vertex_count; ++v) os << "  s" << v << ";\n";
    for (const auto& [a, b] : g.edges) os << "  s" << a << " -> s" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace qca
