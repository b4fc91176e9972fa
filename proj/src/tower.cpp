#include "skewhopf/tower.hpp"

#include <algorithm>
#include <map>

namespace skewhopf {

Tower::Tower(std::vector<std::string> names, std::vector<OreStep> steps, long long budget)
    : names_(std::move(names)), steps_(std::move(steps)), budget_(budget) {
    check_structure();
}

Tower Tower::trivial(std::vector<std::string> names, long long budget) {
    std::size_t n = names.size();
    std::vector<OreStep> steps(n);
    for (std::size_t g = 1; g < n; ++g) {
        for (std::size_t j = 0; j < g; ++j) {
            steps[g].sigma.push_back(NcPoly::generator(n, j));
            steps[g].sigma_inv.push_back(NcPoly::generator(n, j));
            steps[g].delta.push_back(NcPoly::zero(n));
        }
    }
    return Tower(std::move(names), std::move(steps), budget);
}

void Tower::check_structure() const {
    std::size_t n = names_.size();
    if (steps_.size() != n) throw SkewError("tower: one Ore step per generator expected");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names_[i] == names_[j]) throw SkewError("tower: duplicate generator name " + names_[i]);
    for (std::size_t g = 1; g < n; ++g) {
        const OreStep& s = steps_[g];
        if (s.sigma.size() != g || s.sigma_inv.size() != g || s.delta.size() != g)
            throw SkewError("tower: step " + names_[g] + " needs images for every earlier generator");
        for (std::size_t j = 0; j < g; ++j) {
            if (s.sigma[j].arity() != n || s.sigma_inv[j].arity() != n || s.delta[j].arity() != n)
                throw SkewError("tower: arity mismatch in step data of " + names_[g]);
            if (!s.sigma[j].supported_below(g) || !s.sigma_inv[j].supported_below(g) ||
                !s.delta[j].supported_below(g))
                throw SkewError("tower: step " + names_[g] +
                                " references a generator of index >= its own");
        }
    }
}

std::optional<std::size_t> Tower::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

const NcPoly& Tower::sigma_image(std::size_t g, std::size_t j) const {
    return steps_.at(g).sigma.at(j);
}
const NcPoly& Tower::sigma_inv_image(std::size_t g, std::size_t j) const {
    return steps_.at(g).sigma_inv.at(j);
}
const NcPoly& Tower::delta_image(std::size_t g, std::size_t j) const {
    return steps_.at(g).delta.at(j);
}

Tower Tower::with_budget(long long budget) const {
    Tower t = *this;
    t.budget_ = budget;
    return t;
}

Tower Tower::with_step(std::size_t g, OreStep step) const {
    Tower t = *this;
    t.steps_.at(g) = std::move(step);
    t.check_structure();
    return t;
}

bool operator==(const Tower& a, const Tower& b) {
    if (a.names_ != b.names_) return false;
    for (std::size_t g = 1; g < a.arity(); ++g) {
        if (a.steps_[g].sigma != b.steps_[g].sigma) return false;
        if (a.steps_[g].sigma_inv != b.steps_[g].sigma_inv) return false;
        if (a.steps_[g].delta != b.steps_[g].delta) return false;
    }
    return true;
}

namespace {

NcPoly mul_rec(const NcPoly& p, const NcPoly& q, const Tower& t, RewriteBudget& budget);

// sigma_g / delta_g on a single monomial supported below g.
NcPoly endo_monomial(std::size_t g, const Monomial& m, const Tower& t, RewriteBudget& budget) {
    NcPoly out = NcPoly::one(t.arity());
    for (std::size_t j = 0; j < g; ++j)
        for (std::uint32_t k = 0; k < m.exp[j]; ++k) {
            budget.tick();
            out = mul_rec(out, t.sigma_image(g, j), t, budget);
        }
    return out;
}

NcPoly endo_inv_monomial(std::size_t g, const Monomial& m, const Tower& t, RewriteBudget& budget) {
    NcPoly out = NcPoly::one(t.arity());
    for (std::size_t j = 0; j < g; ++j)
        for (std::uint32_t k = 0; k < m.exp[j]; ++k) {
            budget.tick();
            out = mul_rec(out, t.sigma_inv_image(g, j), t, budget);
        }
    return out;
}

NcPoly endo_poly(std::size_t g, const NcPoly& p, const Tower& t, RewriteBudget& budget) {
    NcPoly out = NcPoly::zero(t.arity());
    for (const auto& [m, c] : p.terms()) out = out + endo_monomial(g, m, t, budget).scaled(c);
    return out;
}

// delta_g on a monomial, peeling the leftmost generator by the Leibniz rule.
NcPoly delta_monomial(std::size_t g, const Monomial& m, const Tower& t, RewriteBudget& budget) {
    std::size_t n = t.arity();
    std::size_t first = Monomial::npos;
    for (std::size_t j = 0; j < g; ++j)
        if (m.exp[j] != 0) { first = j; break; }
    if (first == Monomial::npos) return NcPoly::zero(n);  // delta kills constants

    budget.tick();
    Monomial rest = m;
    rest.exp[first] -= 1;
    NcPoly rest_poly = NcPoly::monomial(rest);
    NcPoly head_delta = t.delta_image(g, first);
    NcPoly head_sigma = t.sigma_image(g, first);
    NcPoly out = mul_rec(head_delta, rest_poly, t, budget);
    NcPoly tail = delta_monomial(g, rest, t, budget);
    if (!tail.is_zero()) out = out + mul_rec(head_sigma, tail, t, budget);
    return out;
}

NcPoly delta_poly(std::size_t g, const NcPoly& p, const Tower& t, RewriteBudget& budget) {
    NcPoly out = NcPoly::zero(t.arity());
    for (const auto& [m, c] : p.terms()) out = out + delta_monomial(g, m, t, budget).scaled(c);
    return out;
}

// x_t^d * s for s supported below top generator `g`, as coefficients of x_g^j.
std::map<std::uint32_t, NcPoly> push_through(std::size_t g, std::uint32_t d, const NcPoly& s,
                                             const Tower& t, RewriteBudget& budget) {
    std::map<std::uint32_t, NcPoly> cur;
    cur[0] = s;
    for (std::uint32_t step = 0; step < d; ++step) {
        std::map<std::uint32_t, NcPoly> next;
        for (const auto& [j, r] : cur) {
            if (r.is_zero()) continue;
            budget.tick();
            NcPoly up = endo_poly(g, r, t, budget);
            NcPoly down = delta_poly(g, r, t, budget);
            if (!up.is_zero()) {
                auto [it, ok] = next.emplace(j + 1, up);
                if (!ok) it->second = it->second + up;
            }
            if (!down.is_zero()) {
                auto [it, ok] = next.emplace(j, down);
                if (!ok) it->second = it->second + down;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

NcPoly mul_monomials(const Monomial& m1, const Monomial& m2, const Tower& t,
                     RewriteBudget& budget) {
    std::size_t n = t.arity();
    std::size_t t1 = m1.top(), t2 = m2.top();
    if (t1 == Monomial::npos || t2 == Monomial::npos || t1 <= t2) {
        // No generator of m1 has to move past a lower one of m2 unless t1 > t2;
        // when t1 <= t2 the top block of m2 can be split off directly.
        if (t2 == Monomial::npos || t1 == Monomial::npos) {
            Monomial prod = m1.arity() ? m1 : m2;
            if (t1 != Monomial::npos || t2 != Monomial::npos) {
                prod = m1;
                for (std::size_t i = 0; i < n; ++i) prod.exp[i] += m2.exp[i];
            }
            return NcPoly::monomial(prod);
        }
        // m1 ends at t1 <= t2: peel the top power of m2 and recurse.
        std::uint32_t e = m2.exp[t2];
        Monomial m2_low = m2;
        m2_low.exp[t2] = 0;
        if (t1 == t2) {
            Monomial m1_low = m1;
            std::uint32_t e1 = m1.exp[t1];
            m1_low.exp[t1] = 0;
            // x_t commutes with itself: combine after pushing x_t^{e1} through m2_low.
            auto pushed = push_through(t1, e1, NcPoly::monomial(m2_low), t, budget);
            NcPoly out = NcPoly::zero(n);
            for (const auto& [j, r] : pushed) {
                NcPoly left = mul_rec(NcPoly::monomial(m1_low), r, t, budget);
                for (const auto& [m, c] : left.terms())
                    out.add_term(m.times_gen_power(t1, j + e), c);
            }
            return out;
        }
        NcPoly low = mul_rec(NcPoly::monomial(m1), NcPoly::monomial(m2_low), t, budget);
        NcPoly out = NcPoly::zero(n);
        for (const auto& [m, c] : low.terms()) out.add_term(m.times_gen_power(t2, e), c);
        return out;
    }
    // t1 > t2: write m1 = low1 * x_{t1}^{d} and push the power through m2.
    std::uint32_t d = m1.exp[t1];
    Monomial low1 = m1;
    low1.exp[t1] = 0;
    auto pushed = push_through(t1, d, NcPoly::monomial(m2), t, budget);
    NcPoly out = NcPoly::zero(n);
    for (const auto& [j, r] : pushed) {
        NcPoly left = mul_rec(NcPoly::monomial(low1), r, t, budget);
        for (const auto& [m, c] : left.terms()) out.add_term(m.times_gen_power(t1, j), c);
    }
    return out;
}

NcPoly mul_rec(const NcPoly& p, const NcPoly& q, const Tower& t, RewriteBudget& budget) {
    NcPoly out = NcPoly::zero(t.arity());
    for (const auto& [m1, c1] : p.terms())
        for (const auto& [m2, c2] : q.terms())
            out = out + mul_monomials(m1, m2, t, budget).scaled(c1 * c2);
    return out;
}

void require_arity(const NcPoly& p, const Tower& t, const char* what) {
    if (p.arity() != t.arity())
        throw SkewError(std::string(what) + ": arity mismatch (" + std::to_string(p.arity()) +
                        " vs " + std::to_string(t.arity()) + ")");
}

void require_support(std::size_t g, const NcPoly& p, const Tower& t, const char* what) {
    if (g == 0 || g >= t.arity()) throw SkewError(std::string(what) + ": step out of range");
    if (!p.supported_below(g))
        throw SkewError(std::string(what) + ": operand not supported below generator " +
                        t.name(g));
}

}  // namespace

NcPoly mul(const NcPoly& p, const NcPoly& q, const Tower& t, RewriteBudget& budget) {
    require_arity(p, t, "mul");
    require_arity(q, t, "mul");
    return mul_rec(p, q, t, budget);
}

NcPoly mul(const NcPoly& p, const NcPoly& q, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return mul(p, q, t, budget);
}

NcPoly power(const NcPoly& p, std::uint32_t k, const Tower& t, RewriteBudget& budget) {
    NcPoly out = NcPoly::one(t.arity());
    for (std::uint32_t i = 0; i < k; ++i) out = mul(out, p, t, budget);
    return out;
}

NcPoly power(const NcPoly& p, std::uint32_t k, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return power(p, k, t, budget);
}

NcPoly apply_endo(std::size_t g, const NcPoly& p, const Tower& t, RewriteBudget& budget) {
    require_arity(p, t, "apply_endo");
    require_support(g, p, t, "apply_endo");
    return endo_poly(g, p, t, budget);
}

NcPoly apply_endo(std::size_t g, const NcPoly& p, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return apply_endo(g, p, t, budget);
}

NcPoly apply_endo_inverse(std::size_t g, const NcPoly& p, const Tower& t, RewriteBudget& budget) {
    require_arity(p, t, "apply_endo_inverse");
    require_support(g, p, t, "apply_endo_inverse");
    NcPoly out = NcPoly::zero(t.arity());
    for (const auto& [m, c] : p.terms())
        out = out + endo_inv_monomial(g, m, t, budget).scaled(c);
    return out;
}

NcPoly apply_endo_inverse(std::size_t g, const NcPoly& p, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return apply_endo_inverse(g, p, t, budget);
}

NcPoly apply_skew_derivation(std::size_t g, const NcPoly& p, const Tower& t,
                             RewriteBudget& budget) {
    require_arity(p, t, "apply_skew_derivation");
    require_support(g, p, t, "apply_skew_derivation");
    return delta_poly(g, p, t, budget);
}

NcPoly apply_skew_derivation(std::size_t g, const NcPoly& p, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return apply_skew_derivation(g, p, t, budget);
}

CheckList validate_tower(const Tower& t) {
    CheckList out;
    std::size_t n = t.arity();
    const auto& names = t.names();

    for (std::size_t g = 1; g < n; ++g) {
        RewriteBudget budget(t.rewrite_budget());
        // (3) supplied inverse really inverts sigma_g on generators
        for (std::size_t j = 0; j < g; ++j) {
            NcPoly xj = NcPoly::generator(n, j);
            NcPoly fwd = apply_endo(g, apply_endo_inverse(g, xj, t, budget), t, budget) - xj;
            NcPoly bwd = apply_endo_inverse(g, apply_endo(g, xj, t, budget), t, budget) - xj;
            std::string name = "tower.sigma-inverse[" + names[g] + ";" + names[j] + "]";
            std::string law = "sigma and its supplied inverse compose to the identity";
            if (fwd.is_zero() && bwd.is_zero()) {
                out.pass(name, law);
            } else {
                const NcPoly& w = fwd.is_zero() ? bwd : fwd;
                out.fail(name, law, to_string(w, names));
            }
        }
        // (1),(2) relation compatibility for every pair a < b < g
        for (std::size_t b = 1; b < g; ++b) {
            for (std::size_t a = 0; a < b; ++a) {
                NcPoly xa = NcPoly::generator(n, a), xb = NcPoly::generator(n, b);
                NcPoly sa = apply_endo(g, xa, t, budget);
                NcPoly sb = apply_endo(g, xb, t, budget);
                NcPoly rel_sigma = mul(sb, sa, t, budget) -
                                   mul(apply_endo(g, t.sigma_image(b, a), t, budget), sb, t, budget) -
                                   apply_endo(g, t.delta_image(b, a), t, budget);
                std::string nm = "tower.sigma-respects-relation[" + names[g] + ";" + names[b] +
                                 "," + names[a] + "]";
                std::string law = "sigma preserves the defining relation of the lower step";
                if (rel_sigma.is_zero())
                    out.pass(nm, law);
                else
                    out.fail(nm, law, to_string(rel_sigma, names));

                // delta_g of both sides of x_b x_a = sigma_b(x_a) x_b + delta_b(x_a),
                // expanded with the twisted Leibniz rule.
                NcPoly da = apply_skew_derivation(g, xa, t, budget);
                NcPoly db = apply_skew_derivation(g, xb, t, budget);
                NcPoly lhs = mul(db, xa, t, budget) + mul(sb, da, t, budget);
                NcPoly rhs =
                    mul(apply_skew_derivation(g, t.sigma_image(b, a), t, budget), xb, t, budget) +
                    mul(apply_endo(g, t.sigma_image(b, a), t, budget), db, t, budget) +
                    apply_skew_derivation(g, t.delta_image(b, a), t, budget);
                NcPoly rel_delta = lhs - rhs;
                std::string nm2 = "tower.delta-consistency[" + names[g] + ";" + names[b] + "," +
                                  names[a] + "]";
                std::string law2 = "delta applied to both sides of the lower relation agrees";
                if (rel_delta.is_zero())
                    out.pass(nm2, law2);
                else
                    out.fail(nm2, law2, to_string(rel_delta, names));
            }
        }
    }
    return out;
}

}  // namespace skewhopf
