#include "skewhopf/classic.hpp"

#include "skewhopf/upoly.hpp"

namespace skewhopf {

std::vector<CommutatorEntry> commutator_normal_forms(const Tower& t) {
    std::vector<CommutatorEntry> out;
    std::size_t n = t.arity();
    RewriteBudget budget(t.rewrite_budget());
    for (std::size_t b = 1; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a) {
            NcPoly xb = NcPoly::generator(n, b), xa = NcPoly::generator(n, a);
            out.push_back({b, a, mul(xb, xa, t, budget) - mul(xa, xb, t, budget)});
        }
    return out;
}

std::size_t VarietyDescription::count(Kind k) const {
    std::size_t n = 0;
    for (const auto& g : gens)
        if (g.kind == k) ++n;
    return n;
}

VarietyDescription character_variety(const Tower& t) {
    std::size_t n = t.arity();
    VarietyDescription out;
    out.gens.resize(n);

    auto chi_of_poly = [&](const NcPoly& p) {
        UPoly u(n);
        for (const auto& [m, c] : p.terms()) {
            UPoly term = UPoly::constant(n, c);
            for (std::size_t j = 0; j < n; ++j)
                for (std::uint32_t k = 0; k < m.exp[j]; ++k) term = term * UPoly::variable(n, j);
            u = u + term;
        }
        return u;
    };

    std::vector<UPoly> equations;
    for (std::size_t b = 1; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a) {
            UPoly eq = UPoly::variable(n, b) * UPoly::variable(n, a) -
                       chi_of_poly(t.sigma_image(b, a)) * UPoly::variable(n, b) -
                       chi_of_poly(t.delta_image(b, a));
            if (!eq.is_zero()) equations.push_back(std::move(eq));
        }

    // Triangular substitution: solve every equation that is affine in a single
    // unknown, substitute, repeat to a fixpoint.
    std::map<std::size_t, Scalar> known;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<UPoly> rest;
        for (const auto& eq0 : equations) {
            UPoly eq = eq0.substituted(known);
            if (eq.is_zero()) continue;
            if (eq.is_constant()) {
                out.consistent = false;
                out.notes.push_back("contradictory relation: " + eq.to_string(t.names()) + " = 0");
                continue;
            }
            if (auto aff = eq.affine_in_single_unknown()) {
                known[aff->var] = -aff->offset / aff->slope;
                changed = true;
                continue;
            }
            rest.push_back(eq0);
        }
        equations = std::move(rest);
    }

    std::vector<bool> blocked(n, false);
    for (const auto& eq0 : equations) {
        UPoly eq = eq0.substituted(known);
        if (eq.is_zero()) continue;
        out.notes.push_back("nonlinear residue: " + eq.to_string(t.names()) + " = 0");
        for (const auto& [k, c] : eq.terms())
            for (std::size_t j = 0; j < n; ++j)
                if (k[j] != 0) blocked[j] = true;
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (auto it = known.find(j); it != known.end())
            out.gens[j] = {VarietyDescription::Kind::forced, it->second};
        else if (blocked[j])
            out.gens[j] = {VarietyDescription::Kind::unresolved, Scalar(0)};
        else
            out.gens[j] = {VarietyDescription::Kind::free_param, Scalar(0)};
    }
    return out;
}

Classification classify_extension(const HopfTower& ht, std::size_t g) {
    const Tower& t = ht.tower();
    std::size_t n = t.arity();
    if (g == 0 || g >= n) throw SkewError("classify_extension: step out of range");
    RewriteBudget budget(t.rewrite_budget());

    bool sigma_fixes = true;
    std::size_t sigma_witness = 0;
    for (std::size_t a = 0; a < g; ++a)
        if (sgn(t.sigma_image(g, a).constant_term()) != 0) {
            sigma_fixes = false;
            sigma_witness = a;
            break;
        }
    bool delta_kills = true;
    for (std::size_t a = 0; a < g; ++a)
        if (sgn(t.delta_image(g, a).constant_term()) != 0) {
            delta_kills = false;
            break;
        }

    Classification out;
    if (sigma_fixes && delta_kills) {
        out.type = ExtensionType::invariant;
        out.detail = "sigma and delta both preserve the augmentation character";
        return out;
    }
    if (sigma_fixes) {
        out.type = ExtensionType::inconsistent;
        out.detail = "sigma preserves the augmentation character but delta moves it";
        return out;
    }
    // sigma moves the augmentation character; the commutator condition
    // certifies the unique lift.
    for (std::size_t b = 1; b < g; ++b)
        for (std::size_t a = 0; a < b; ++a) {
            NcPoly comm = mul(NcPoly::generator(n, b), NcPoly::generator(n, a), t, budget) -
                          mul(NcPoly::generator(n, a), NcPoly::generator(n, b), t, budget);
            NcPoly img = apply_skew_derivation(g, comm, t, budget);
            if (sgn(img.constant_term()) != 0) {
                out.type = ExtensionType::inconsistent;
                out.detail = "delta does not kill the commutator [" + t.name(b) + "," + t.name(a) +
                             "] at the augmentation character";
                return out;
            }
        }
    out.type = ExtensionType::variant;
    out.detail = "sigma moves the augmentation character at generator " + t.name(sigma_witness) +
                 " and delta kills generator commutators";
    return out;
}

namespace {

Monomial truncate(const Monomial& m, std::size_t k) {
    Monomial out;
    out.exp.assign(m.exp.begin(), m.exp.begin() + k);
    return out;
}

NcPoly truncate(const NcPoly& p, std::size_t k) {
    NcPoly out(k);
    for (const auto& [m, c] : p.terms()) out.add_term(truncate(m, k), c);
    return out;
}

// Coefficient subalgebra of the first k generators as a tower of its own.
Tower subtower(const Tower& t, std::size_t k) {
    std::vector<std::string> names(t.names().begin(), t.names().begin() + k);
    std::vector<OreStep> steps(k);
    for (std::size_t g = 1; g < k; ++g)
        for (std::size_t j = 0; j < g; ++j) {
            steps[g].sigma.push_back(truncate(t.sigma_image(g, j), k));
            steps[g].sigma_inv.push_back(truncate(t.sigma_inv_image(g, j), k));
            steps[g].delta.push_back(truncate(t.delta_image(g, j), k));
        }
    return Tower(std::move(names), std::move(steps), t.rewrite_budget());
}

}  // namespace

FiberResult goodearl_fiber(const Tower& t, std::size_t g, const Character& m) {
    std::size_t n = t.arity();
    if (g == 0 || g >= n) throw SkewError("goodearl_fiber: step out of range");
    if (m.values.size() != g)
        throw SkewError("goodearl_fiber: character must assign exactly the earlier generators");
    if (!validate_character(m, subtower(t, g)).all_pass())
        throw SkewError("goodearl_fiber: invalid input character");

    RewriteBudget budget(t.rewrite_budget());
    // Evaluation of polynomials supported below g under m.
    Character m_full{m.values};
    m_full.values.resize(n, Scalar(0));

    FiberResult out;
    const auto& names = t.names();

    bool sigma_invariant = true;
    std::size_t moved = 0;
    for (std::size_t a = 0; a < g; ++a)
        if (evaluate(m_full, t.sigma_image(g, a)) != m.values[a]) {
            sigma_invariant = false;
            moved = a;
            break;
        }
    bool delta_invariant = true;
    for (std::size_t a = 0; a < g; ++a)
        if (sgn(evaluate(m_full, t.delta_image(g, a))) != 0) {
            delta_invariant = false;
            break;
        }

    if (sigma_invariant && delta_invariant) {
        out.kind = FiberResult::Kind::line;
        std::string ideal;
        for (std::size_t a = 0; a < g; ++a) {
            if (!ideal.empty()) ideal += ", ";
            ideal += names[a];
            if (sgn(m.values[a]) != 0) ideal += " - " + to_string(m.values[a]);
        }
        out.description = "line { <" + ideal + ", " + names[g] + " - lambda> : lambda free }";
        return out;
    }

    if (!sigma_invariant) {
        // Commutator condition before trusting the unique-lift construction.
        for (std::size_t b = 1; b < g; ++b)
            for (std::size_t a = 0; a < b; ++a) {
                NcPoly comm = mul(NcPoly::generator(n, b), NcPoly::generator(n, a), t, budget) -
                              mul(NcPoly::generator(n, a), NcPoly::generator(n, b), t, budget);
                if (sgn(evaluate(m_full, apply_skew_derivation(g, comm, t, budget))) != 0) {
                    out.kind = FiberResult::Kind::unresolved;
                    out.diagnostics.push_back(
                        "delta does not kill the commutator [" + names[b] + "," + names[a] +
                        "] modulo the character; no uniqueness certificate");
                    return out;
                }
            }
        // r = (x_a - m(x_a)) / (m(sigma(x_a)) - m(x_a)) satisfies sigma(r) = 1 mod ker m.
        Scalar d = evaluate(m_full, t.sigma_image(g, moved)) - m.values[moved];
        Scalar lambda0 = evaluate(m_full, t.delta_image(g, moved)) / d;
        out.kind = FiberResult::Kind::point;
        out.lambda0 = lambda0;
        Character extended{m.values};
        extended.values.push_back(-lambda0);
        if (!validate_character(extended, subtower(t, g + 1)).all_pass()) {
            out.kind = FiberResult::Kind::unresolved;
            out.diagnostics.push_back("constructed point does not validate as a character");
            return out;
        }
        out.extended = extended;
        std::string ideal;
        for (std::size_t a = 0; a < g; ++a) {
            if (!ideal.empty()) ideal += ", ";
            ideal += names[a];
            if (sgn(m.values[a]) != 0) ideal += " - " + to_string(m.values[a]);
        }
        std::string shift = sgn(lambda0) == 0 ? "" : " + " + to_string(lambda0);
        out.description = "point <" + ideal + ", " + names[g] + shift + ">";
        return out;
    }

    // sigma fixes ker m but delta moves it: nothing lies above m.
    out.kind = FiberResult::Kind::empty;
    out.description = "empty fiber: sigma fixes the character but delta does not";
    return out;
}

FiberResult goodearl_fiber(const HopfTower& ht, std::size_t g, const Character& m) {
    return goodearl_fiber(ht.tower(), g, m);
}

namespace {

bool in_monomial_ideal(const Monomial& m, const std::vector<std::size_t>& gens) {
    return m.contains_any(gens);
}

Tensor2 outside_ideal_part(const Tensor2& u, const std::vector<std::size_t>& gens) {
    Tensor2 bad(u.arity());
    for (const auto& [k, c] : u.terms())
        if (!in_monomial_ideal(k.first, gens)) bad.add_term(k.first, k.second, c);
    return bad;
}

void enumerate_ideal_monomials(std::size_t n, std::uint32_t max_deg,
                               const std::vector<std::size_t>& gens, std::size_t slot,
                               Monomial& cur, std::uint32_t used, std::vector<Monomial>& out) {
    if (slot == n) {
        if (used >= 1 && in_monomial_ideal(cur, gens)) out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; used + e <= max_deg; ++e) {
        cur.exp[slot] = e;
        enumerate_ideal_monomials(n, max_deg, gens, slot + 1, cur, used + e, out);
    }
    cur.exp[slot] = 0;
}

}  // namespace

NormalityResult normality_search(const HopfTower& ht, const std::vector<std::size_t>& ideal_gens,
                                 std::uint32_t max_deg) {
    const Tower& t = ht.tower();
    std::size_t n = t.arity();
    if (ideal_gens.empty()) throw SkewError("normality_search: empty generating set");
    for (auto g : ideal_gens)
        if (g >= n) throw SkewError("normality_search: unknown ideal generator");

    // Rewrite stability: rewriting any monomial that meets the listed set must
    // stay inside it, so membership is a per-monomial test.
    auto listed = [&](std::size_t i) {
        for (auto g : ideal_gens)
            if (g == i) return true;
        return false;
    };
    for (std::size_t b = 1; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a) {
            if (!listed(a) && !listed(b)) continue;
            for (const auto& [m, c] : t.delta_image(b, a).terms())
                if (!in_monomial_ideal(m, ideal_gens))
                    throw SkewError("normality_search: generating set is not rewrite-stable "
                                    "(delta image of " + t.name(a) + " escapes)");
            if (listed(a) && !listed(b))
                for (const auto& [m, c] : t.sigma_image(b, a).terms())
                    if (!in_monomial_ideal(m, ideal_gens))
                        throw SkewError("normality_search: generating set is not rewrite-stable "
                                        "(sigma image of " + t.name(a) + " escapes)");
        }

    RewriteBudget budget(t.rewrite_budget());
    auto delta_map = [&](const NcPoly& p) { return coproduct(p, ht, budget); };

    std::vector<Monomial> elements;
    Monomial cur = Monomial::unit(n);
    enumerate_ideal_monomials(n, max_deg, ideal_gens, 0, cur, 0, elements);
    std::sort(elements.begin(), elements.end());

    NormalityResult out;
    out.element = NcPoly::zero(n);
    out.residual = Tensor2::zero(n);
    for (const auto& h : elements) {
        NcPoly hp = NcPoly::monomial(h);
        Tensor3 d2 = embed_12(delta_map, coproduct(hp, ht, budget));
        // Adjoint coactions a -> a2 (x) S(a1) a3 and a -> a2 (x) a1 S(a3);
        // stability requires the first tensorand to stay in the ideal.
        Tensor2 rho_left(n), rho_right(n);
        for (const auto& [k, c] : d2.terms()) {
            NcPoly s1 = antipode(NcPoly::monomial(k[0]), ht);
            NcPoly s3 = antipode(NcPoly::monomial(k[2]), ht);
            NcPoly left = mul(s1, NcPoly::monomial(k[2]), t, budget);
            NcPoly right = mul(NcPoly::monomial(k[0]), s3, t, budget);
            for (const auto& [mm, cc] : left.terms()) rho_left.add_term(k[1], mm, c * cc);
            for (const auto& [mm, cc] : right.terms()) rho_right.add_term(k[1], mm, c * cc);
        }
        Tensor2 bad_left = outside_ideal_part(rho_left, ideal_gens);
        if (!bad_left.is_zero()) {
            out.normal = false;
            out.element = hp;
            out.side = "left";
            out.residual = bad_left;
            out.detail = "left adjoint coaction of " + to_string(hp, t.names()) +
                         " leaves the ideal";
            return out;
        }
        Tensor2 bad_right = outside_ideal_part(rho_right, ideal_gens);
        if (!bad_right.is_zero()) {
            out.normal = false;
            out.element = hp;
            out.side = "right";
            out.residual = bad_right;
            out.detail = "right adjoint coaction of " + to_string(hp, t.names()) +
                         " leaves the ideal";
            return out;
        }
    }
    out.normal = true;
    out.max_degree = max_deg;
    out.detail = "stable under both adjoint coactions for ideal elements of degree <= " +
                 std::to_string(max_deg);
    return out;
}

}  // namespace skewhopf
