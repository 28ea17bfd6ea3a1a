#include "qca/pbw.hpp"

#include "qca/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qca {

DualPBWElement DualPBWElement::monomial(ExpVec a, HalfLaurent c) {
    DualPBWElement e;
    if (!c.is_zero()) e.terms_.emplace(std::move(a), std::move(c));
    return e;
}

HalfLaurent DualPBWElement::coeff(const ExpVec& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? HalfLaurent::zero() : it->second;
}

void DualPBWElement::add_term(const ExpVec& a, const HalfLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

DualPBWElement DualPBWElement::operator+(const DualPBWElement& rhs) const {
    DualPBWElement r(*this);
    for (const auto& [a, c] : rhs.terms_) r.add_term(a, c);
    return r;
}

DualPBWElement DualPBWElement::operator-(const DualPBWElement& rhs) const {
    DualPBWElement r(*this);
    for (const auto& [a, c] : rhs.terms_) r.add_term(a, -c);
    return r;
}

DualPBWElement DualPBWElement::scaled(const HalfLaurent& c) const {
    DualPBWElement r;
    if (c.is_zero()) return r;
    for (const auto& [a, f] : terms_) r.terms_.emplace(a, f * c);
    return r;
}

bool DualPBWElement::is_homogeneous(const Context& ctx) const {
    if (terms_.empty()) return true;
    Root deg = ctx.deg_of_exp(terms_.begin()->first);
    for (const auto& [a, c] : terms_)
        if (ctx.deg_of_exp(a) != deg) return false;
    return true;
}

Root DualPBWElement::degree(const Context& ctx) const {
    if (terms_.empty()) throw std::domain_error("degree of zero element");
    if (!is_homogeneous(ctx)) throw std::domain_error("degree of non-homogeneous element");
    return ctx.deg_of_exp(terms_.begin()->first);
}

std::string DualPBWElement::str(const Context& ctx) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        bool any = false;
        for (int k = 0; k < ctx.num_gens(); ++k) {
            int e = a[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            os << "*" << ctx.gen(k).dual_name();
            if (e > 1) os << "^" << e;
            any = true;
        }
        if (!any) os << "*1";
    }
    return os.str();
}

long b_function(const ExpVec& a) {
    long b = 0;
    for (int x : a) b += static_cast<long>(x) * (x - 1) / 2;
    return b;
}

PbwAlgebra::PbwAlgebra(const Context& ctx) : ctx_(ctx) { build_tables(); }

namespace {

struct GenRef {
    bool is_y;
    int idx;
};

GenRef Y(int i) { return {true, i}; }
GenRef Z(int i) { return {false, i}; }

} // namespace

void PbwAlgebra::build_tables() {
    const int ng = ctx_.num_gens();
    rules_.assign(static_cast<std::size_t>(ng) * static_cast<std::size_t>(ng), RewriteRule{});
    for (int hi = 0; hi < ng; ++hi)
        for (int lo = 0; lo < hi; ++lo) {
            RewriteRule r;
            r.hi = hi;
            r.lo = lo;
            r.lead = HalfLaurent::one();
            rules_[static_cast<std::size_t>(hi) * static_cast<std::size_t>(ng) + static_cast<std::size_t>(lo)] =
                std::move(r);
        }

    // The relation families are indexed over the odd rank; the qprime table
    // is obtained from the families of the ambient odd system one rank up,
    // restricted to the generators that survive, with the modified relations
    // for the last dual generator swapped in afterwards.
    const bool qp = ctx_.variant() == Variant::qprime;
    const int m = ctx_.rank();
    const int n = qp ? m + 1 : m;

    const HalfLaurent one = HalfLaurent::one();
    const HalfLaurent one_m_vm2 = HalfLaurent::one() - HalfLaurent::v_pow(-4); // 1 - v^-2
    const HalfLaurent v_m_vinv = HalfLaurent::v_pow(2) - HalfLaurent::v_pow(-2); // v - v^-1

    auto exists = [&](const GenRef& g) { return g.idx >= 1 && g.idx <= m; };
    auto slot = [&](const GenRef& g) { return g.is_y ? ctx_.slot_y(g.idx) : ctx_.slot_z(g.idx); };

    struct Corr {
        HalfLaurent dual_coeff, primal_coeff;
        std::vector<GenRef> word;
    };

    auto emit = [&](GenRef hi, GenRef lo, int lead_twice, std::vector<Corr> corr) {
        if (!exists(hi) || !exists(lo)) return;
        for (const Corr& c : corr)
            for (const GenRef& g : c.word)
                if (!exists(g) && !(g.is_y == false && (g.idx == 0 || g.idx == m + 1))) return;
        if (qp && hi.is_y && hi.idx == m) return; // replaced by the modified relations
        const int hs = slot(hi), ls = slot(lo);
        if (hs < 0 || ls < 0) return;
        if (hs <= ls) throw std::runtime_error("rule table: pair not in descending slot order");
        RewriteRule dual;
        dual.hi = hs;
        dual.lo = ls;
        dual.lead = HalfLaurent::v_pow(lead_twice);
        RewriteRule primal = dual;
        for (const Corr& c : corr) {
            std::vector<int> w;
            for (const GenRef& g : c.word) {
                int s = slot(g);
                if (s >= 0) w.push_back(s); // z_0 and z_{n+1} factors drop out
            }
            for (std::size_t t = 1; t < w.size(); ++t)
                if (w[t - 1] > w[t]) throw std::runtime_error("rule table: correction word out of order");
            dual.corrections.emplace_back(c.dual_coeff, w);
            primal.corrections.emplace_back(c.primal_coeff, w);
        }
        RewriteRule& target =
            rules_[static_cast<std::size_t>(hs) * static_cast<std::size_t>(ng) + static_cast<std::size_t>(ls)];
        if (!target.is_plain()) throw std::runtime_error("rule table: duplicate rule for pair");
        target = dual;
        primal_rules_.push_back(std::move(primal));
    };

    for (int i = 1; i + 2 <= n; i += 2) emit(Z(i + 1), Y(i), 2, {});
    for (int i = 3; i <= n; i += 2) emit(Z(i - 1), Y(i), 2, {});
    for (int i = 1; i + 2 <= n; i += 2) emit(Z(i + 2), Y(i), 2, {});
    for (int i = 3; i <= n; i += 2) emit(Z(i - 2), Y(i), 2, {});
    emit(Z(1), Y(1), -2, {{one_m_vm2, one, {Z(2)}}});
    for (int i = 3; i + 2 <= n; i += 2) emit(Z(i), Y(i), 0, {{v_m_vinv, v_m_vinv, {Z(i - 1), Z(i + 1)}}});
    emit(Z(n), Y(n), -2, {{one_m_vm2, one, {Z(n - 1)}}});
    for (int i = 1; i + 4 <= n; i += 2) emit(Y(i + 3), Y(i), 2, {});
    for (int i = 5; i <= n; i += 2) emit(Y(i - 3), Y(i), 2, {});
    for (int i = 3; i + 2 <= n; i += 2) emit(Y(i - 1), Y(i), 0, {{v_m_vinv, v_m_vinv, {Z(i + 1), Z(i - 2)}}});
    emit(Y(n - 1), Y(n), -2, {{one_m_vm2, one, {Z(n - 2)}}});
    emit(Y(2), Y(1), -2, {{one_m_vm2, one, {Z(3)}}});
    for (int i = 3; i + 2 <= n; i += 2) emit(Y(i + 1), Y(i), 0, {{v_m_vinv, v_m_vinv, {Z(i - 1), Z(i + 2)}}});
    for (int i = 2; i + 1 <= n; i += 2) emit(Z(i + 1), Z(i), 2, {});
    for (int i = 2; i + 1 <= n; i += 2) emit(Z(i - 1), Z(i), 2, {});
    for (int i = 2; i + 3 <= n; i += 2) emit(Y(i + 2), Z(i), 2, {});
    for (int i = 4; i + 1 <= n; i += 2) emit(Y(i - 2), Z(i), 2, {});
    for (int i = 2; i + 1 <= n; i += 2) emit(Y(i), Z(i), 0, {{v_m_vinv, v_m_vinv, {Z(i - 1), Z(i + 1)}}});
    for (int i = 1; i + 2 <= n; i += 2) emit(Y(i + 1), Z(i), 2, {});
    for (int i = 3; i <= n; i += 2) emit(Y(i - 1), Z(i), 2, {});

    if (qp) {
        // Straightening relations involving the last dual generator y_m; all
        // other pairs with y_m commute.
        auto emit_qp = [&](GenRef lo, int lead_twice, std::vector<Corr> corr) {
            const int hs = ctx_.slot_y(m), ls = slot(lo);
            if (hs <= ls) throw std::runtime_error("rule table: qprime pair out of order");
            RewriteRule dual;
            dual.hi = hs;
            dual.lo = ls;
            dual.lead = HalfLaurent::v_pow(lead_twice);
            RewriteRule primal = dual;
            for (const Corr& c : corr) {
                std::vector<int> w;
                for (const GenRef& g : c.word) w.push_back(slot(g));
                dual.corrections.emplace_back(c.dual_coeff, w);
                primal.corrections.emplace_back(c.primal_coeff, w);
            }
            rules_[static_cast<std::size_t>(hs) * static_cast<std::size_t>(ng) + static_cast<std::size_t>(ls)] =
                dual;
            primal_rules_.push_back(std::move(primal));
        };
        emit_qp(Z(m - 1), 2, {});
        emit_qp(Z(m - 2), 2, {});
        emit_qp(Z(m), -2, {{one_m_vm2, one, {Z(m - 1)}}});
        emit_qp(Y(m - 1), -2, {{one_m_vm2, one, {Z(m - 2)}}});
        emit_qp(Y(m - 3), 2, {});
    }
}

const RewriteRule& PbwAlgebra::dual_rule(int hi, int lo) const {
    if (hi <= lo || lo < 0 || hi >= ctx_.num_gens()) throw std::domain_error("dual_rule: need hi > lo");
    return rules_[static_cast<std::size_t>(hi) * static_cast<std::size_t>(ctx_.num_gens()) +
                  static_cast<std::size_t>(lo)];
}

std::vector<RewriteRule> PbwAlgebra::straightening_table() const {
    std::vector<RewriteRule> out;
    for (int hi = 0; hi < ctx_.num_gens(); ++hi)
        for (int lo = 0; lo < hi; ++lo) out.push_back(dual_rule(hi, lo));
    return out;
}

void PbwAlgebra::clear_cache() {
    memo_.clear();
    ops_ = 0;
}

const PbwAlgebra::PMap& PbwAlgebra::mul_gen_plain(const ExpVec& a, int slot) {
    ExpVec key = a;
    key.push_back(slot);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++ops_ > budget_) throw BudgetExceeded("straightening iteration budget exceeded");

    PMap result;
    int m = -1;
    for (int k = ctx_.num_gens() - 1; k >= 0; --k)
        if (a[static_cast<std::size_t>(k)] > 0) {
            m = k;
            break;
        }
    if (m <= slot) {
        ExpVec b = a;
        b[static_cast<std::size_t>(slot)] += 1;
        result.emplace(std::move(b), HalfLaurent::one());
    } else {
        ExpVec ap = a;
        ap[static_cast<std::size_t>(m)] -= 1;
        const RewriteRule& rule = dual_rule(m, slot);
        {
            // lead * (P(a') * g_slot) * g_m
            PMap t1 = mul_gen_plain(ap, slot); // copy: recursion below may rehash
            for (const auto& [b, c] : t1) {
                const PMap& t2 = mul_gen_plain(b, m);
                for (const auto& [b2, c2] : t2) {
                    HalfLaurent add = rule.lead * c * c2;
                    auto [pos, inserted] = result.try_emplace(b2, add);
                    if (!inserted) {
                        pos->second += add;
                        if (pos->second.is_zero()) result.erase(pos);
                    }
                }
            }
        }
        for (const auto& [coeff, word] : rule.corrections) {
            PMap cur;
            cur.emplace(ap, HalfLaurent::one());
            for (int s : word) {
                PMap next;
                for (const auto& [b, c] : cur) {
                    const PMap& t = mul_gen_plain(b, s);
                    for (const auto& [b2, c2] : t) {
                        HalfLaurent add = c * c2;
                        auto [pos, inserted] = next.try_emplace(b2, add);
                        if (!inserted) pos->second += add;
                    }
                }
                cur = std::move(next);
            }
            for (const auto& [b, c] : cur) {
                HalfLaurent add = coeff * c;
                auto [pos, inserted] = result.try_emplace(b, add);
                if (!inserted) {
                    pos->second += add;
                    if (pos->second.is_zero()) result.erase(pos);
                }
            }
        }
        for (auto itr = result.begin(); itr != result.end();)
            itr = itr->second.is_zero() ? result.erase(itr) : std::next(itr);
    }
    auto [pos, inserted] = memo_.emplace(std::move(key), std::move(result));
    (void)inserted;
    return pos->second;
}

DualPBWElement PbwAlgebra::from_plain(const PMap& p) const {
    DualPBWElement out;
    for (const auto& [a, c] : p) out.add_term(a, c * HalfLaurent::v_pow(2 * static_cast<int>(b_function(a))));
    return out;
}

DualPBWElement PbwAlgebra::straighten_word(const std::vector<int>& slots, const HalfLaurent& coeff) {
    PMap cur;
    cur.emplace(ExpVec(static_cast<std::size_t>(ctx_.num_gens()), 0), coeff);
    for (int s : slots) {
        if (s < 0 || s >= ctx_.num_gens()) throw std::domain_error("straighten_word: bad slot");
        PMap next;
        for (const auto& [b, c] : cur) {
            const PMap& t = mul_gen_plain(b, s);
            for (const auto& [b2, c2] : t) {
                HalfLaurent add = c * c2;
                auto [pos, inserted] = next.try_emplace(b2, add);
                if (!inserted) pos->second += add;
            }
        }
        cur = std::move(next);
    }
    return from_plain(cur);
}

DualPBWElement PbwAlgebra::gen_element(int slot) {
    ExpVec a(static_cast<std::size_t>(ctx_.num_gens()), 0);
    a[static_cast<std::size_t>(slot)] = 1;
    return DualPBWElement::monomial(std::move(a), HalfLaurent::one());
}

DualPBWElement PbwAlgebra::p_element(int i) {
    if (i < 1 || i > ctx_.rank()) throw std::domain_error("p_element: index out of range");
    std::vector<int> lead, corr;
    if (i % 2 == 1)
        lead = {ctx_.slot_y(i), ctx_.slot_z(i)};
    else
        lead = {ctx_.slot_z(i), ctx_.slot_y(i)};
    for (int s : {ctx_.slot_z(i - 1), ctx_.slot_z(i + 1)})
        if (s >= 0) corr.push_back(s);
    std::sort(corr.begin(), corr.end());
    return straighten_word(lead) - straighten_word(corr, HalfLaurent::v_pow(-2));
}

DualPBWElement PbwAlgebra::mul(const DualPBWElement& x, const DualPBWElement& y) {
    PMap acc;
    for (const auto& [b, cb] : y.terms()) {
        std::vector<int> word;
        for (int k = 0; k < ctx_.num_gens(); ++k)
            for (int t = 0; t < b[static_cast<std::size_t>(k)]; ++t) word.push_back(k);
        const HalfLaurent pb = cb * HalfLaurent::v_pow(-2 * static_cast<int>(b_function(b)));
        for (const auto& [a, ca] : x.terms()) {
            PMap cur;
            cur.emplace(a, ca * HalfLaurent::v_pow(-2 * static_cast<int>(b_function(a))) * pb);
            for (int s : word) {
                PMap next;
                for (const auto& [w, c] : cur) {
                    const PMap& t = mul_gen_plain(w, s);
                    for (const auto& [w2, c2] : t) {
                        HalfLaurent add = c * c2;
                        auto [pos, inserted] = next.try_emplace(w2, add);
                        if (!inserted) pos->second += add;
                    }
                }
                cur = std::move(next);
            }
            for (auto& [w, c] : cur) {
                auto [pos, inserted] = acc.try_emplace(w, c);
                if (!inserted) pos->second += c;
            }
        }
    }
    return from_plain(acc);
}

DualPBWElement PbwAlgebra::mul_gen(const DualPBWElement& x, int slot) { return mul(x, gen_element(slot)); }

DualPBWElement PbwAlgebra::sigma(const DualPBWElement& x) {
    DualPBWElement out;
    for (const auto& [a, c] : x.terms()) {
        std::vector<int> word;
        int norm_sum = 0;
        for (int k = ctx_.num_gens() - 1; k >= 0; --k) {
            const int e = a[static_cast<std::size_t>(k)];
            for (int t = 0; t < e; ++t) word.push_back(k);
            norm_sum += e * ctx_.norm(ctx_.gen(k).beta);
        }
        const HalfLaurent scale =
            c.bar() * HalfLaurent::v_pow(2 * static_cast<int>(b_function(a)) + 2 * norm_sum);
        out = out + straighten_word(word, scale);
    }
    return out;
}

std::optional<int> PbwAlgebra::v_commutation_exponent(const DualPBWElement& x, const DualPBWElement& y) {
    DualPBWElement xy = mul(x, y);
    DualPBWElement yx = mul(y, x);
    if (xy.is_zero() || yx.is_zero()) throw std::domain_error("v_commutation_exponent: zero product");
    const auto& [a0, c0] = *xy.terms().begin();
    auto it = yx.terms().find(a0);
    if (it == yx.terms().end()) return std::nullopt;
    const int twice = c0.min_twice_exp() - it->second.min_twice_exp();
    if (c0 != it->second * HalfLaurent::v_pow(twice)) return std::nullopt;
    if (xy != yx.scaled(HalfLaurent::v_pow(twice))) return std::nullopt;
    if (twice % 2 != 0) throw std::runtime_error("half-integer commutation exponent");
    return twice / 2;
}

DualPBWElement PbwAlgebra::straighten_queue(const std::vector<int>& slots, Strategy strategy, long budget) {
    std::vector<std::pair<HalfLaurent, std::vector<int>>> work;
    work.emplace_back(HalfLaurent::one(), slots);
    PMap acc;
    long steps = 0;
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        if (++steps > budget) throw BudgetExceeded("straighten_queue budget exceeded");
        int descent = -1;
        if (strategy == Strategy::leftmost) {
            for (std::size_t t = 0; t + 1 < w.size(); ++t)
                if (w[t] > w[t + 1]) {
                    descent = static_cast<int>(t);
                    break;
                }
        } else {
            for (std::size_t t = w.size(); t-- > 1;)
                if (w[t - 1] > w[t]) {
                    descent = static_cast<int>(t - 1);
                    break;
                }
        }
        if (descent < 0) {
            ExpVec a(static_cast<std::size_t>(ctx_.num_gens()), 0);
            for (int s : w) a[static_cast<std::size_t>(s)] += 1;
            auto [pos, inserted] = acc.try_emplace(a, c);
            if (!inserted) pos->second += c;
            continue;
        }
        const std::size_t t = static_cast<std::size_t>(descent);
        const RewriteRule& rule = dual_rule(w[t], w[t + 1]);
        {
            std::vector<int> w2 = w;
            std::swap(w2[t], w2[t + 1]);
            work.emplace_back(c * rule.lead, std::move(w2));
        }
        for (const auto& [coeff, repl] : rule.corrections) {
            std::vector<int> w2(w.begin(), w.begin() + static_cast<long>(t));
            w2.insert(w2.end(), repl.begin(), repl.end());
            w2.insert(w2.end(), w.begin() + static_cast<long>(t) + 2, w.end());
            work.emplace_back(c * coeff, std::move(w2));
        }
    }
    for (auto itr = acc.begin(); itr != acc.end();)
        itr = itr->second.is_zero() ? acc.erase(itr) : std::next(itr);
    return from_plain(acc);
}

YZPoly specialize_v1(const Context& ctx, const DualPBWElement& x) {
    const int n = ctx.rank();
    YZPoly out(n);
    for (const auto& [a, c] : x.terms()) {
        if (!c.has_integer_exponents())
            throw std::domain_error("specialize_v1: coefficient has a half-integer exponent");
        ExpVec mono(static_cast<std::size_t>(2 * n), 0);
        for (int k = 0; k < ctx.num_gens(); ++k) {
            const int e = a[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            const GenInfo& g = ctx.gen(k);
            const int var = g.dual_is_y ? g.vertex - 1 : n + g.vertex - 1;
            mono[static_cast<std::size_t>(var)] += e;
        }
        out.add_term(mono, c.eval_at_one());
    }
    return out;
}

} // namespace qca
