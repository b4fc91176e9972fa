#include "skewhopf/hopf.hpp"

#include <optional>

#include "skewhopf/linalg.hpp"
#include "skewhopf/upoly.hpp"
#include "skewhopf/winding.hpp"

namespace skewhopf {

HopfTower::HopfTower(Tower tower, std::vector<Tensor2> tails, std::string name)
    : tower_(std::move(tower)), tails_(std::move(tails)), name_(std::move(name)) {
    std::size_t n = tower_.arity();
    if (tails_.size() != n) throw SkewError("hopf tower: one coproduct tail per generator expected");
    for (std::size_t g = 0; g < n; ++g) {
        if (tails_[g].arity() != n) throw SkewError("hopf tower: tail arity mismatch");
        if (!tails_[g].supported_below(g))
            throw SkewError("hopf tower: tail of " + tower_.name(g) +
                            " references a generator of index >= its own");
    }
}

HopfTower HopfTower::with_name(std::string name) const {
    HopfTower ht = *this;
    ht.name_ = std::move(name);
    return ht;
}

HopfTower HopfTower::with_budget(long long budget) const {
    HopfTower ht = *this;
    ht.tower_ = tower_.with_budget(budget);
    return ht;
}

namespace {

Tensor2 coproduct_gen(const HopfTower& ht, std::size_t g) {
    std::size_t n = ht.arity();
    Tensor2 d = ht.tail(g);
    d.add_term(Monomial::gen(n, g), Monomial::unit(n), 1);
    d.add_term(Monomial::unit(n), Monomial::gen(n, g), 1);
    return d;
}

Tensor2 coproduct_monomial(const Monomial& m, const HopfTower& ht, RewriteBudget& budget) {
    std::size_t n = ht.arity();
    Tensor2 out = Tensor2::unit(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.exp[i] == 0) continue;
        Tensor2 dg = coproduct_gen(ht, i);
        for (std::uint32_t k = 0; k < m.exp[i]; ++k) out = t2_mul(out, dg, ht.tower(), budget);
    }
    return out;
}

// Generator antipode images, memoized per call; recursion goes strictly down.
class AntipodeImages {
public:
    explicit AntipodeImages(const HopfTower& ht, RewriteBudget& budget)
        : ht_(ht), budget_(budget), images_(ht.arity()) {}

    const NcPoly& gen(std::size_t g) {
        if (!images_[g]) {
            std::size_t n = ht_.arity();
            NcPoly acc = NcPoly::generator(n, g);
            for (const auto& [k, c] : ht_.tail(g).terms()) {
                NcPoly right = monomial(k.second);
                acc = acc + mul(NcPoly::monomial(k.first), right, ht_.tower(), budget_).scaled(c);
            }
            images_[g] = -acc;
        }
        return *images_[g];
    }

    // Anti-homomorphic extension: factors in descending generator order.
    NcPoly monomial(const Monomial& m) {
        std::size_t n = ht_.arity();
        NcPoly out = NcPoly::one(n);
        for (std::size_t i = n; i-- > 0;)
            for (std::uint32_t k = 0; k < m.exp[i]; ++k)
                out = mul(out, gen(i), ht_.tower(), budget_);
        return out;
    }

    NcPoly poly(const NcPoly& p) {
        NcPoly out = NcPoly::zero(ht_.arity());
        for (const auto& [m, c] : p.terms()) out = out + monomial(m).scaled(c);
        return out;
    }

private:
    const HopfTower& ht_;
    RewriteBudget& budget_;
    std::vector<std::optional<NcPoly>> images_;
};

}  // namespace

Tensor2 coproduct(const NcPoly& p, const HopfTower& ht, RewriteBudget& budget) {
    if (p.arity() != ht.arity()) throw SkewError("coproduct: arity mismatch");
    Tensor2 out(ht.arity());
    for (const auto& [m, c] : p.terms())
        out = out + coproduct_monomial(m, ht, budget).scaled(c);
    return out;
}

Tensor2 coproduct(const NcPoly& p, const HopfTower& ht) {
    RewriteBudget budget(ht.tower().rewrite_budget());
    return coproduct(p, ht, budget);
}

Scalar counit(const NcPoly& p) { return p.constant_term(); }

NcPoly antipode(const NcPoly& p, const HopfTower& ht) {
    RewriteBudget budget(ht.tower().rewrite_budget());
    AntipodeImages s(ht, budget);
    return s.poly(p);
}

NcPoly antipode_power(const NcPoly& p, std::uint32_t m, const HopfTower& ht) {
    NcPoly out = p;
    for (std::uint32_t i = 0; i < m; ++i) out = antipode(out, ht);
    return out;
}

CheckList check_hopf_axioms(const HopfTower& ht) {
    CheckList out;
    const Tower& t = ht.tower();
    std::size_t n = ht.arity();
    const auto& names = t.names();
    RewriteBudget budget(t.rewrite_budget());

    auto delta = [&](const NcPoly& p) { return coproduct(p, ht, budget); };

    // (1) the coproduct extends to an algebra map: it must respect every
    // defining relation x_b x_a = sigma_b(x_a) x_b + delta_b(x_a).
    for (std::size_t b = 1; b < n; ++b) {
        Tensor2 db = delta(NcPoly::generator(n, b));
        for (std::size_t a = 0; a < b; ++a) {
            Tensor2 da = delta(NcPoly::generator(n, a));
            Tensor2 residual = t2_mul(db, da, t, budget) -
                               t2_mul(delta(t.sigma_image(b, a)), db, t, budget) -
                               delta(t.delta_image(b, a));
            std::string nm = "hopf.coproduct-respects-relation[" + names[b] + "," + names[a] + "]";
            std::string law = "the coproduct extends to an algebra map";
            if (residual.is_zero())
                out.pass(nm, law);
            else
                out.fail(nm, law, to_string(residual, names));
        }
    }

    // (2) coassociativity on generators.
    auto delta_map = [&](const NcPoly& p) { return coproduct(p, ht, budget); };
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 di = delta(NcPoly::generator(n, i));
        Tensor3 left = embed_12(delta_map, di);
        Tensor3 right = embed_23(delta_map, di);
        Tensor3 residual = left - right;
        std::string nm = "hopf.coassociativity[" + names[i] + "]";
        std::string law = "(Delta ox id)Delta = (id ox Delta)Delta";
        if (residual.is_zero())
            out.pass(nm, law);
        else
            out.fail(nm, law, to_string(residual, names));
    }

    // (3) counit law on generators.
    for (std::size_t i = 0; i < n; ++i) {
        NcPoly xi = NcPoly::generator(n, i);
        Tensor2 di = delta(xi);
        NcPoly left = contract_left_counit(di) - xi;
        NcPoly right = contract_right_counit(di) - xi;
        std::string nm = "hopf.counit[" + names[i] + "]";
        std::string law = "(eps ox id)Delta = id = (id ox eps)Delta";
        if (left.is_zero() && right.is_zero())
            out.pass(nm, law);
        else
            out.fail(nm, law, to_string(left.is_zero() ? right : left, names));
    }

    // (4) antipode law on generators; eps vanishes on generators.
    AntipodeImages s(ht, budget);
    auto s_map = [&](const NcPoly& p) { return s.poly(p); };
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 di = delta(NcPoly::generator(n, i));
        NcPoly left = mu(lift_left(s_map, di), t, budget);
        NcPoly right = mu(lift_right(s_map, di), t, budget);
        std::string nm = "hopf.antipode[" + names[i] + "]";
        std::string law = "mu(S ox id)Delta = eta eps = mu(id ox S)Delta";
        if (left.is_zero() && right.is_zero())
            out.pass(nm, law);
        else
            out.fail(nm, law, to_string(left.is_zero() ? right : left, names));
    }

    return out;
}

CheckList check_hoe_conditions(const HopfTower& ht, std::size_t g) {
    const Tower& t = ht.tower();
    std::size_t n = ht.arity();
    if (g == 0 || g >= n) throw SkewError("check_hoe_conditions: step out of range");
    CheckList out;
    const auto& names = t.names();
    RewriteBudget budget(t.rewrite_budget());
    auto delta_map = [&](const NcPoly& p) { return coproduct(p, ht, budget); };
    const Tensor2& w = ht.tail(g);
    std::string step = names[g];

    // (d) sigma_g is the left winding endomorphism of chi := eps o sigma_g.
    {
        Character chi{std::vector<Scalar>(n, Scalar(0))};
        for (std::size_t j = 0; j < g; ++j)
            chi.values[j] = t.sigma_image(g, j).constant_term();
        std::string nm = "hoe[" + step + "].winding";
        std::string law = "sigma = (chi ox id)Delta for the character chi = eps o sigma";
        NcPoly bad = NcPoly::zero(n);
        bool chi_ok = true;
        // chi must itself be an algebra map on the coefficient subalgebra.
        for (std::size_t b = 1; b < g && chi_ok; ++b)
            for (std::size_t a = 0; a < b && chi_ok; ++a) {
                Scalar r = chi.values[b] * chi.values[a] -
                           evaluate(chi, t.sigma_image(b, a)) * chi.values[b] -
                           evaluate(chi, t.delta_image(b, a));
                if (sgn(r) != 0) {
                    chi_ok = false;
                    out.fail(nm, law,
                             "eps o sigma is not a character: relation [" + names[b] + "," +
                                 names[a] + "] evaluates to " + to_string(r));
                }
            }
        if (chi_ok) {
            for (std::size_t j = 0; j < g; ++j) {
                NcPoly xj = NcPoly::generator(n, j);
                Tensor2 dj = delta_map(xj);
                NcPoly wound = NcPoly::zero(n);
                for (const auto& [k, c] : dj.terms())
                    wound.add_term(k.second, c * evaluate(chi, k.first));
                bad = apply_endo(g, xj, t, budget) - wound;
                if (!bad.is_zero()) break;
            }
            if (bad.is_zero())
                out.pass(nm, law);
            else
                out.fail(nm, law, to_string(bad, names));
        }
    }

    // (e) the delta/coproduct exchange identity
    //     Delta delta(r) - delta(r1) ox r2 - r1 ox delta(r2) = w Delta(r) - Delta(sigma r) w.
    {
        std::string nm = "hoe[" + step + "].delta-coproduct";
        std::string law = "Delta delta(r) - (delta ox id)Delta(r) - (id ox delta)Delta(r) = w Delta(r) - Delta(sigma(r)) w";
        Tensor2 bad(n);
        auto dg = [&](const NcPoly& p) { return apply_skew_derivation(g, p, t, budget); };
        for (std::size_t j = 0; j < g; ++j) {
            NcPoly xj = NcPoly::generator(n, j);
            Tensor2 dj = delta_map(xj);
            Tensor2 lhs = delta_map(dg(xj)) - lift_left(dg, dj) - lift_right(dg, dj);
            Tensor2 rhs = t2_mul(w, dj, t, budget) -
                          t2_mul(delta_map(apply_endo(g, xj, t, budget)), w, t, budget);
            bad = lhs - rhs;
            if (!bad.is_zero()) break;
        }
        if (bad.is_zero())
            out.pass(nm, law);
        else
            out.fail(nm, law, to_string(bad, names));
    }

    // (f1) tail coassociativity: w ox 1 + (Delta ox id)(w) = 1 ox w + (id ox Delta)(w).
    {
        std::string nm = "hoe[" + step + "].tail-coassociativity";
        std::string law = "w ox 1 + (Delta ox id)(w) = 1 ox w + (id ox Delta)(w)";
        Tensor3 lhs(n), rhs(n);
        Monomial one = Monomial::unit(n);
        for (const auto& [k, c] : w.terms()) {
            lhs.add_term(k.first, k.second, one, c);
            rhs.add_term(one, k.first, k.second, c);
        }
        lhs = lhs + embed_12(delta_map, w);
        rhs = rhs + embed_23(delta_map, w);
        Tensor3 residual = lhs - rhs;
        if (residual.is_zero())
            out.pass(nm, law);
        else
            out.fail(nm, law, to_string(residual, names));
    }

    // (f2) tail antipode identity: sum S(w1) w2 = sum w1 S(w2).
    {
        std::string nm = "hoe[" + step + "].tail-antipode";
        std::string law = "S(w1)w2 = w1 S(w2)";
        AntipodeImages s(ht, budget);
        NcPoly residual = NcPoly::zero(n);
        for (const auto& [k, c] : w.terms()) {
            residual = residual +
                       mul(s.monomial(k.first), NcPoly::monomial(k.second), t, budget).scaled(c) -
                       mul(NcPoly::monomial(k.first), s.monomial(k.second), t, budget).scaled(c);
        }
        if (residual.is_zero())
            out.pass(nm, law);
        else
            out.fail(nm, law, to_string(residual, names));
    }

    // (f3) both tail components lie in the augmentation ideal.
    {
        std::string nm = "hoe[" + step + "].tail-augmentation";
        std::string law = "the tail lies in (ker eps) ox (ker eps)";
        std::string witness;
        for (const auto& [k, c] : w.terms()) {
            if (k.first.is_unit() || k.second.is_unit()) {
                Tensor2 one_term(n);
                one_term.add_term(k.first, k.second, c);
                witness = to_string(one_term, names);
                break;
            }
        }
        if (witness.empty())
            out.pass(nm, law);
        else
            out.fail(nm, law, witness);
    }

    return out;
}

CheckList check_all(const HopfTower& ht) {
    CheckList out = validate_tower(ht.tower());
    out.append(check_hopf_axioms(ht));
    for (std::size_t g = 1; g < ht.arity(); ++g) out.append(check_hoe_conditions(ht, g));
    return out;
}

namespace {

void enumerate_monomials(std::size_t n, std::uint32_t max_deg, std::size_t slot, Monomial& cur,
                         std::uint32_t used, std::vector<Monomial>& out) {
    if (slot == n) {
        if (used >= 1) out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; used + e <= max_deg; ++e) {
        cur.exp[slot] = e;
        enumerate_monomials(n, max_deg, slot + 1, cur, used + e, out);
    }
    cur.exp[slot] = 0;
}

}  // namespace

PrimitiveBasis primitives(const HopfTower& ht, std::uint32_t max_deg) {
    if (max_deg < 1) throw SkewError("primitives: degree bound must be at least 1");
    std::size_t n = ht.arity();
    RewriteBudget budget(ht.tower().rewrite_budget());

    std::vector<Monomial> candidates;
    Monomial cur = Monomial::unit(n);
    enumerate_monomials(n, max_deg, 0, cur, 0, candidates);
    std::sort(candidates.begin(), candidates.end());

    // Residual Delta(m) - m ox 1 - 1 ox m per candidate; primitives are exact
    // kernel vectors of the residual matrix.
    std::map<Tensor2::Key, std::size_t> row_of;
    std::vector<Tensor2> residuals;
    residuals.reserve(candidates.size());
    for (const auto& m : candidates) {
        Tensor2 r = coproduct_monomial(m, ht, budget);
        r.add_term(m, Monomial::unit(n), -1);
        r.add_term(Monomial::unit(n), m, -1);
        for (const auto& [k, c] : r.terms()) row_of.emplace(k, row_of.size());
        residuals.push_back(std::move(r));
    }

    RatMat mat(row_of.size(), RatVec(candidates.size(), Scalar(0)));
    for (std::size_t col = 0; col < candidates.size(); ++col)
        for (const auto& [k, c] : residuals[col].terms()) mat[row_of[k]][col] = c;

    PrimitiveBasis out;
    out.max_degree = max_deg;
    for (const auto& v : nullspace(mat, candidates.size())) {
        NcPoly p(n);
        for (std::size_t col = 0; col < candidates.size(); ++col) p.add_term(candidates[col], v[col]);
        out.basis.push_back(std::move(p));
    }
    return out;
}

AntipodeOrder antipode_order(const HopfTower& ht, std::uint32_t max_m) {
    std::size_t n = ht.arity();
    AntipodeOrder out;
    out.increment = NcPoly::zero(n);
    std::size_t offending = Monomial::npos;
    for (std::size_t i = 0; i < n; ++i) {
        NcPoly xi = NcPoly::generator(n, i);
        NcPoly s2 = antipode_power(xi, 2, ht);
        if (s2 != xi) {
            offending = i;
            out.increment = s2 - xi;
            break;
        }
    }
    if (offending == Monomial::npos) {
        out.kind = AntipodeOrder::Kind::involutive;
        out.note = "S^2 fixes every generator";
        return out;
    }
    out.witness_gen = offending;
    NcPoly a = out.increment;
    if (antipode_power(a, 2, ht) == a) {
        // Constant increment: S^{2m}(x) = x + m*a, never returning in char 0.
        out.kind = AntipodeOrder::Kind::infinite;
        out.note = "constant increment under S^2";
        return out;
    }
    NcPoly xi = NcPoly::generator(n, offending);
    NcPoly cur = xi;
    for (std::uint32_t m = 1; m <= max_m; ++m) {
        cur = antipode_power(cur, 2, ht);
        if (cur == xi) {
            out.kind = AntipodeOrder::Kind::undecided;
            out.searched_up_to = max_m;
            out.note = "S^{2m} returned to the generator at m = " + std::to_string(m) +
                       "; no dichotomy verdict for this data";
            return out;
        }
    }
    out.kind = AntipodeOrder::Kind::undecided;
    out.searched_up_to = max_m;
    out.note = "no constant increment pattern within the iteration bound";
    return out;
}

S4Decomposition s4_decompose(const HopfTower& ht) {
    std::size_t n = ht.arity();
    const Tower& t = ht.tower();
    RewriteBudget budget(t.rewrite_budget());
    S4Decomposition out;

    AntipodeImages s(ht, budget);
    auto delta_map = [&](const NcPoly& p) { return coproduct(p, ht, budget); };

    // chi on a monomial as a polynomial in the unknown generator values.
    auto chi_of_monomial = [&](const Monomial& m) {
        UPoly u = UPoly::constant(n, 1);
        for (std::size_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < m.exp[j]; ++k) u = u * UPoly::variable(n, j);
        return u;
    };
    auto chi_of_poly = [&](const NcPoly& p) {
        UPoly u(n);
        for (const auto& [m, c] : p.terms()) u = u + chi_of_monomial(m).scaled(c);
        return u;
    };

    RatMat mat;
    RatVec rhs;
    for (std::size_t i = 0; i < n; ++i) {
        NcPoly xi = NcPoly::generator(n, i);
        NcPoly s4 = s.poly(s.poly(s.poly(s.poly(xi))));
        Tensor3 d2 = embed_12(delta_map, delta_map(xi));
        // (chi ox id ox chi o S) applied slot-wise; coefficients are UPoly values.
        std::map<Monomial, UPoly> got;
        for (const auto& [k, c] : d2.terms()) {
            UPoly weight = (chi_of_monomial(k[0]) * chi_of_poly(s.monomial(k[2]))).scaled(c);
            auto [it, inserted] = got.emplace(k[1], weight);
            if (!inserted) it->second = it->second + weight;
        }
        for (const auto& [m, c] : s4.terms()) {
            auto [it, inserted] = got.emplace(m, UPoly(n));
            (void)it;
            (void)inserted;
        }
        for (auto& [m, u] : got) {
            UPoly eq = u - UPoly::constant(n, s4.coeff(m));
            if (eq.is_zero()) continue;
            if (!eq.is_affine()) {
                out.diagnostic = "equation at generator " + t.name(i) +
                                 " is not affine in the unknown character values";
                return out;
            }
            RatVec row(n, Scalar(0));
            Scalar constant(0);
            for (const auto& [key, c] : eq.terms()) {
                bool is_const = true;
                for (std::size_t j = 0; j < n; ++j) {
                    if (key[j] == 1) {
                        row[j] = c;
                        is_const = false;
                    }
                }
                if (is_const) constant = c;
            }
            mat.push_back(std::move(row));
            rhs.push_back(-constant);
        }
    }

    AffineSolution sol = solve_affine(mat, rhs, n);
    if (!sol.consistent) {
        out.diagnostic = "the affine system for the character values is inconsistent";
        return out;
    }
    Character chi{sol.values};
    if (!validate_character(chi, t).all_pass()) {
        out.diagnostic = "solved values do not form a character";
        return out;
    }
    // Exact certificate: re-check S^4 = (chi ox id ox chi o S)(Delta ox id)Delta on generators.
    Character psi{std::vector<Scalar>(n)};
    for (std::size_t j = 0; j < n; ++j)
        psi.values[j] = evaluate(chi, s.gen(j));
    for (std::size_t i = 0; i < n; ++i) {
        NcPoly xi = NcPoly::generator(n, i);
        NcPoly s4 = s.poly(s.poly(s.poly(s.poly(xi))));
        Tensor3 d2 = embed_12(delta_map, delta_map(xi));
        NcPoly wound = NcPoly::zero(n);
        for (const auto& [k, c] : d2.terms())
            wound.add_term(k[1], c * evaluate(chi, k[0]) * evaluate(psi, k[2]));
        if (wound != s4) {
            out.diagnostic = "solution failed the exact recheck at generator " + t.name(i);
            return out;
        }
    }
    out.resolved = true;
    out.chi = chi;
    return out;
}

namespace {

// Rewrites p in the basis where generator g is shifted by -lambda
// (x_g = x_g' - lambda): binomial expansion in the g slot.
NcPoly shift_gen(const NcPoly& p, std::size_t g, const Scalar& lambda) {
    if (sgn(lambda) == 0) return p;
    std::size_t n = p.arity();
    NcPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exp[g];
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        // (x' - lambda)^e expanded; binomial coefficients built incrementally.
        Scalar binom(1);
        for (std::uint32_t k = 0; k <= e; ++k) {
            Scalar coef = binom;
            Scalar shift_pow(1);
            for (std::uint32_t j = 0; j < e - k; ++j) shift_pow *= -lambda;
            Monomial mm = m;
            mm.exp[g] = k;
            out.add_term(mm, c * coef * shift_pow);
            binom = binom * Scalar(static_cast<long>(e - k)) / Scalar(static_cast<long>(k + 1));
        }
    }
    return out;
}

Tensor2 shift_gen(const Tensor2& u, std::size_t g, const Scalar& lambda) {
    if (sgn(lambda) == 0) return u;
    Tensor2 out(u.arity());
    for (const auto& [k, c] : u.terms()) {
        NcPoly left = shift_gen(NcPoly::monomial(k.first), g, lambda);
        NcPoly right = shift_gen(NcPoly::monomial(k.second), g, lambda);
        for (const auto& [ml, cl] : left.terms())
            for (const auto& [mr, cr] : right.terms()) out.add_term(ml, mr, c * cl * cr);
    }
    return out;
}

}  // namespace

HopfTower change_variable(const HopfTower& ht, std::size_t g, const Scalar& lambda) {
    std::size_t n = ht.arity();
    if (g == 0 || g >= n) throw SkewError("change_variable: step out of range");
    if (sgn(lambda) == 0) return ht;

    const Tower& t = ht.tower();
    std::vector<OreStep> steps(n);
    std::vector<Tensor2> tails = ht.tails();

    for (std::size_t h = 1; h < n; ++h) {
        OreStep step = t.step(h);
        if (h == g) {
            // delta_g := delta_g + lambda (id - sigma_g); sigma_g unchanged.
            for (std::size_t j = 0; j < g; ++j)
                step.delta[j] =
                    step.delta[j] + (NcPoly::generator(n, j) - step.sigma[j]).scaled(lambda);
        } else if (h > g) {
            // Data of later steps, rewritten in the shifted generator. The
            // image of the shifted generator itself gains the scalar.
            for (std::size_t j = 0; j < h; ++j) {
                step.sigma[j] = shift_gen(step.sigma[j], g, lambda);
                step.sigma_inv[j] = shift_gen(step.sigma_inv[j], g, lambda);
                step.delta[j] = shift_gen(step.delta[j], g, lambda);
            }
            step.sigma[g] = step.sigma[g] + NcPoly::constant(n, lambda);
            step.sigma_inv[g] = step.sigma_inv[g] + NcPoly::constant(n, lambda);
        }
        steps[h] = std::move(step);
    }
    for (std::size_t h = g + 1; h < n; ++h) tails[h] = shift_gen(tails[h], g, lambda);
    Tensor2 unit_shift(n);
    unit_shift.add_term(Monomial::unit(n), Monomial::unit(n), -lambda);
    tails[g] = tails[g] + unit_shift;

    return HopfTower(Tower(t.names(), std::move(steps), t.rewrite_budget()), std::move(tails),
                     ht.name());
}

HopfTower counit_normalize(const HopfTower& ht) {
    HopfTower cur = ht;
    for (std::size_t g = 1; g < ht.arity(); ++g) {
        std::size_t n = cur.arity();
        Scalar c = cur.tail(g).coeff(Monomial::unit(n), Monomial::unit(n));
        if (sgn(c) != 0) cur = change_variable(cur, g, c);
    }
    return cur;
}

GkDimension gk_dimension(const HopfTower& ht) {
    GkDimension out;
    out.value = static_cast<std::uint32_t>(ht.arity());
    out.note = "each skew polynomial extension raises the growth dimension by one";
    return out;
}

}  // namespace skewhopf
