#include "skewhopf/winding.hpp"

namespace skewhopf {

CheckList validate_character(const Character& chi, const Tower& t) {
    CheckList out;
    std::size_t n = t.arity();
    if (chi.values.size() != n)
        throw SkewError("validate_character: missing generator assignment");
    const auto& names = t.names();
    for (std::size_t b = 1; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a) {
            Scalar r = chi.values[b] * chi.values[a] -
                       evaluate(chi, t.sigma_image(b, a)) * chi.values[b] -
                       evaluate(chi, t.delta_image(b, a));
            std::string nm = "character.relation[" + names[b] + "," + names[a] + "]";
            std::string law = "the multiplicative extension kills the defining relation";
            if (sgn(r) == 0)
                out.pass(nm, law);
            else
                out.fail(nm, law, to_string(r));
        }
    return out;
}

NcPoly apply_map(const EndoMap& f, const NcPoly& p, const Tower& t) {
    if (f.images.size() != t.arity()) throw SkewError("apply_map: arity mismatch");
    RewriteBudget budget(t.rewrite_budget());
    NcPoly out = NcPoly::zero(t.arity());
    for (const auto& [m, c] : p.terms()) {
        NcPoly term = NcPoly::one(t.arity());
        for (std::size_t i = 0; i < t.arity(); ++i)
            for (std::uint32_t k = 0; k < m.exp[i]; ++k)
                term = mul(term, f.images[i], t, budget);
        out = out + term.scaled(c);
    }
    return out;
}

EndoMap compose(const EndoMap& f, const EndoMap& g, const Tower& t) {
    EndoMap out;
    out.images.reserve(t.arity());
    for (std::size_t i = 0; i < t.arity(); ++i) out.images.push_back(apply_map(f, g.images[i], t));
    return out;
}

bool respects_relations(const EndoMap& f, const Tower& t, NcPoly* witness) {
    RewriteBudget budget(t.rewrite_budget());
    std::size_t n = t.arity();
    for (std::size_t b = 1; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a) {
            NcPoly residual = mul(f.images[b], f.images[a], t, budget) -
                              mul(apply_map(f, t.sigma_image(b, a), t), f.images[b], t, budget) -
                              apply_map(f, t.delta_image(b, a), t);
            if (!residual.is_zero()) {
                if (witness) *witness = residual;
                return false;
            }
        }
    return true;
}

namespace {

EndoMap winding(const Character& chi, const HopfTower& ht, bool left) {
    const Tower& t = ht.tower();
    std::size_t n = t.arity();
    if (chi.values.size() != n) throw SkewError("winding: missing generator assignment");
    EndoMap f;
    f.images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 d = coproduct(NcPoly::generator(n, i), ht);
        NcPoly img = NcPoly::zero(n);
        for (const auto& [k, c] : d.terms()) {
            if (left)
                img.add_term(k.second, c * evaluate(chi, k.first));
            else
                img.add_term(k.first, c * evaluate(chi, k.second));
        }
        f.images.push_back(std::move(img));
    }
    NcPoly bad(n);
    if (!respects_relations(f, t, &bad))
        throw SkewError("winding map violates a defining relation: " + to_string(bad, t.names()));
    return f;
}

}  // namespace

EndoMap tau_left(const Character& chi, const HopfTower& ht) { return winding(chi, ht, true); }

EndoMap tau_right(const Character& chi, const HopfTower& ht) { return winding(chi, ht, false); }

Character convolve(const Character& chi, const Character& psi, const HopfTower& ht) {
    std::size_t n = ht.arity();
    Character out{std::vector<Scalar>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 d = coproduct(NcPoly::generator(n, i), ht);
        Scalar v(0);
        for (const auto& [k, c] : d.terms())
            v += c * evaluate(chi, k.first) * evaluate(psi, k.second);
        out.values[i] = v;
    }
    if (!validate_character(out, ht.tower()).all_pass())
        throw SkewError("convolve: result is not a character");
    return out;
}

Character char_inverse(const Character& chi, const HopfTower& ht) {
    std::size_t n = ht.arity();
    Character out{std::vector<Scalar>(n)};
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = evaluate(chi, antipode(NcPoly::generator(n, i), ht));
    if (!validate_character(out, ht.tower()).all_pass())
        throw SkewError("char_inverse: result is not a character");
    return out;
}

}  // namespace skewhopf
