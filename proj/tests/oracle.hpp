#pragma once

// Test-only machinery: an independent naive normal-form strategy (leftmost
// out-of-order adjacent rewrite on free words until fixpoint) and seeded
// random generators. Kept out of the library so the production engine and
// this oracle share no code path.

#include <map>
#include <random>
#include <vector>

#include "skewhopf/expr.hpp"
#include "skewhopf/tower.hpp"

namespace oracle {

using namespace skewhopf;

using Word = std::vector<std::uint32_t>;
using FreePoly = std::map<Word, Scalar>;

inline void free_add(FreePoly& f, const Word& w, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = f.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) f.erase(it);
    }
}

inline FreePoly free_mul(const FreePoly& a, const FreePoly& b) {
    FreePoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            free_add(out, w, ca * cb);
        }
    return out;
}

// Distributes the expression into free words without touching any relation.
inline FreePoly expand_free(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::constant: {
            FreePoly f;
            free_add(f, {}, e->value);
            return f;
        }
        case Expr::Kind::generator: {
            FreePoly f;
            free_add(f, {static_cast<std::uint32_t>(e->gen)}, 1);
            return f;
        }
        case Expr::Kind::add: {
            FreePoly f = expand_free(e->lhs);
            for (const auto& [w, c] : expand_free(e->rhs)) free_add(f, w, c);
            return f;
        }
        case Expr::Kind::sub: {
            FreePoly f = expand_free(e->lhs);
            for (const auto& [w, c] : expand_free(e->rhs)) free_add(f, w, -c);
            return f;
        }
        case Expr::Kind::mul: return free_mul(expand_free(e->lhs), expand_free(e->rhs));
        case Expr::Kind::neg: {
            FreePoly f;
            for (const auto& [w, c] : expand_free(e->lhs)) free_add(f, w, -c);
            return f;
        }
        case Expr::Kind::pow: {
            FreePoly f;
            free_add(f, {}, 1);
            FreePoly base = expand_free(e->lhs);
            for (std::uint32_t k = 0; k < e->exponent; ++k) f = free_mul(f, base);
            return f;
        }
    }
    throw SkewError("expand_free: corrupt expression");
}

inline Word word_of(const Monomial& m) {
    Word w;
    for (std::size_t i = 0; i < m.arity(); ++i)
        for (std::uint32_t k = 0; k < m.exp[i]; ++k) w.push_back(static_cast<std::uint32_t>(i));
    return w;
}

inline FreePoly to_free(const NcPoly& p) {
    FreePoly f;
    for (const auto& [m, c] : p.terms()) free_add(f, word_of(m), c);
    return f;
}

// Rewrites the leftmost out-of-order adjacent generator pair of each word with
// x_j x_i -> sigma_j(x_i) x_j + delta_j(x_i) until every word is sorted.
inline NcPoly naive_normal_form(const FreePoly& f, const Tower& t) {
    long long budget = t.rewrite_budget();
    std::size_t n = t.arity();
    NcPoly done(n);
    FreePoly pending = f;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        std::size_t bad = w.size();
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (w[p] > w[p + 1]) { bad = p; break; }
        if (bad == w.size()) {
            Monomial m = Monomial::unit(n);
            for (auto g : w) m.exp[g] += 1;
            done.add_term(m, c);
            continue;
        }
        if (--budget < 0) throw BudgetExhausted(t.rewrite_budget());
        std::uint32_t j = w[bad], i = w[bad + 1];
        Word prefix(w.begin(), w.begin() + bad);
        Word suffix(w.begin() + bad + 2, w.end());
        for (const auto& [m, cm] : t.sigma_image(j, i).terms()) {
            Word nw = prefix;
            Word mid = word_of(m);
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.push_back(j);
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            free_add(pending, nw, c * cm);
        }
        for (const auto& [m, cm] : t.delta_image(j, i).terms()) {
            Word nw = prefix;
            Word mid = word_of(m);
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            free_add(pending, nw, c * cm);
        }
    }
    return done;
}

inline NcPoly naive_normal_form(const ExprPtr& e, const Tower& t) {
    return naive_normal_form(expand_free(e), t);
}

// ---- seeded random data ----

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    Scalar small_rational() {
        int num = uniform(-4, 4);
        int den = uniform(1, 3);
        return rat(num, den);
    }
    Scalar small_nonzero() {
        Scalar s = small_rational();
        return sgn(s) == 0 ? Scalar(1) : s;
    }
};

// Expression tree with bounded total degree.
inline ExprPtr random_expr(Rng& rng, std::size_t arity, int degree_budget, int depth = 0) {
    int kind = rng.uniform(0, depth >= 3 ? 2 : 5);
    if (degree_budget <= 0) kind = 0;
    switch (kind) {
        case 0: return Expr::constant(rng.small_rational());
        case 1:
        case 2:
            if (arity == 0) return Expr::constant(rng.small_rational());
            return Expr::generator(static_cast<std::size_t>(rng.uniform(0, int(arity) - 1)));
        case 3:
            return Expr::add(random_expr(rng, arity, degree_budget, depth + 1),
                             random_expr(rng, arity, degree_budget, depth + 1));
        case 4: {
            int left = rng.uniform(0, degree_budget);
            return Expr::mul(random_expr(rng, arity, left, depth + 1),
                             random_expr(rng, arity, degree_budget - left, depth + 1));
        }
        default: {
            std::uint32_t k = static_cast<std::uint32_t>(rng.uniform(0, 2));
            int inner = k == 0 ? 0 : degree_budget / int(k);
            return Expr::pow(random_expr(rng, arity, inner, depth + 1), k);
        }
    }
}

inline NcPoly random_poly(Rng& rng, std::size_t arity, std::uint32_t max_deg, int terms) {
    NcPoly p(arity);
    for (int i = 0; i < terms; ++i) {
        Monomial m = Monomial::unit(arity);
        std::uint32_t budget = max_deg;
        for (std::size_t slot = 0; slot < arity; ++slot) {
            std::uint32_t e = static_cast<std::uint32_t>(rng.uniform(0, int(budget)));
            m.exp[slot] = e;
            budget -= e;
        }
        p.add_term(m, rng.small_rational());
    }
    return p;
}

}  // namespace oracle
