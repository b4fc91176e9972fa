#include "skewhopf/tensor.hpp"

namespace skewhopf {

Tensor2 Tensor2::unit(std::size_t arity) {
    Tensor2 u(arity);
    u.add_term(Monomial::unit(arity), Monomial::unit(arity), 1);
    return u;
}

Scalar Tensor2::coeff(const Monomial& a, const Monomial& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool Tensor2::supported_below(std::size_t bound) const {
    for (const auto& [k, c] : terms_)
        if (!k.first.supported_below(bound) || !k.second.supported_below(bound)) return false;
    return true;
}

void Tensor2::add_term(const Monomial& a, const Monomial& b, const Scalar& c) {
    if (sgn(c) == 0) return;
    Key k{a, b};
    auto [it, inserted] = terms_.emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Tensor2 Tensor2::operator-() const {
    Tensor2 u(arity_);
    for (const auto& [k, c] : terms_) u.terms_.emplace(k, -c);
    return u;
}

Tensor2 Tensor2::scaled(const Scalar& c) const {
    Tensor2 u(arity_);
    if (sgn(c) == 0) return u;
    for (const auto& [k, s] : terms_) u.terms_.emplace(k, c * s);
    return u;
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
    Tensor2 u = a;
    for (const auto& [k, c] : b.terms_) u.add_term(k.first, k.second, c);
    return u;
}

Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
    Tensor2 u = a;
    for (const auto& [k, c] : b.terms_) u.add_term(k.first, k.second, -c);
    return u;
}

void Tensor3::add_term(const Monomial& a, const Monomial& b, const Monomial& c, const Scalar& s) {
    if (sgn(s) == 0) return;
    Key k{a, b, c};
    auto [it, inserted] = terms_.emplace(std::move(k), s);
    if (!inserted) {
        it->second += s;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Tensor3 Tensor3::scaled(const Scalar& c) const {
    Tensor3 u(arity_);
    if (sgn(c) == 0) return u;
    for (const auto& [k, s] : terms_) u.terms_.emplace(k, c * s);
    return u;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    Tensor3 u = a;
    for (const auto& [k, c] : b.terms_) u.add_term(k[0], k[1], k[2], c);
    return u;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    Tensor3 u = a;
    for (const auto& [k, c] : b.terms_) u.add_term(k[0], k[1], k[2], -c);
    return u;
}

Tensor2 tensor_product(const NcPoly& a, const NcPoly& b) {
    Tensor2 u(a.arity());
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) u.add_term(m1, m2, c1 * c2);
    return u;
}

Tensor3 tensor_product(const NcPoly& a, const NcPoly& b, const NcPoly& c) {
    Tensor3 u(a.arity());
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms())
            for (const auto& [m3, c3] : c.terms()) u.add_term(m1, m2, m3, c1 * c2 * c3);
    return u;
}

Tensor2 t2_mul(const Tensor2& u, const Tensor2& v, const Tower& t, RewriteBudget& budget) {
    if (u.arity() != v.arity()) throw SkewError("t2_mul: arity mismatch");
    Tensor2 out(u.arity());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            NcPoly left = mul(NcPoly::monomial(ku.first), NcPoly::monomial(kv.first), t, budget);
            NcPoly right = mul(NcPoly::monomial(ku.second), NcPoly::monomial(kv.second), t, budget);
            Scalar c = cu * cv;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) out.add_term(ml, mr, c * cl * cr);
        }
    return out;
}

Tensor3 t3_mul(const Tensor3& u, const Tensor3& v, const Tower& t, RewriteBudget& budget) {
    if (u.arity() != v.arity()) throw SkewError("t3_mul: arity mismatch");
    Tensor3 out(u.arity());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            NcPoly a = mul(NcPoly::monomial(ku[0]), NcPoly::monomial(kv[0]), t, budget);
            NcPoly b = mul(NcPoly::monomial(ku[1]), NcPoly::monomial(kv[1]), t, budget);
            NcPoly c = mul(NcPoly::monomial(ku[2]), NcPoly::monomial(kv[2]), t, budget);
            Scalar s = cu * cv;
            for (const auto& [ma, ca] : a.terms())
                for (const auto& [mb, cb] : b.terms())
                    for (const auto& [mc, cc] : c.terms())
                        out.add_term(ma, mb, mc, s * ca * cb * cc);
        }
    return out;
}

NcPoly mu(const Tensor2& u, const Tower& t, RewriteBudget& budget) {
    NcPoly out = NcPoly::zero(u.arity());
    for (const auto& [k, c] : u.terms())
        out = out + mul(NcPoly::monomial(k.first), NcPoly::monomial(k.second), t, budget).scaled(c);
    return out;
}

Tensor2 lift_left(const PolyMap& f, const Tensor2& u) {
    Tensor2 out(u.arity());
    for (const auto& [k, c] : u.terms()) {
        NcPoly img = f(NcPoly::monomial(k.first));
        for (const auto& [m, s] : img.terms()) out.add_term(m, k.second, c * s);
    }
    return out;
}

Tensor2 lift_right(const PolyMap& f, const Tensor2& u) {
    Tensor2 out(u.arity());
    for (const auto& [k, c] : u.terms()) {
        NcPoly img = f(NcPoly::monomial(k.second));
        for (const auto& [m, s] : img.terms()) out.add_term(k.first, m, c * s);
    }
    return out;
}

Tensor3 embed_12(const PolyToTensor& f, const Tensor2& u) {
    Tensor3 out(u.arity());
    for (const auto& [k, c] : u.terms()) {
        Tensor2 img = f(NcPoly::monomial(k.first));
        for (const auto& [k2, s] : img.terms()) out.add_term(k2.first, k2.second, k.second, c * s);
    }
    return out;
}

Tensor3 embed_23(const PolyToTensor& f, const Tensor2& u) {
    Tensor3 out(u.arity());
    for (const auto& [k, c] : u.terms()) {
        Tensor2 img = f(NcPoly::monomial(k.second));
        for (const auto& [k2, s] : img.terms()) out.add_term(k.first, k2.first, k2.second, c * s);
    }
    return out;
}

NcPoly contract_left_counit(const Tensor2& u) {
    NcPoly out = NcPoly::zero(u.arity());
    for (const auto& [k, c] : u.terms())
        if (k.first.is_unit()) out.add_term(k.second, c);
    return out;
}

NcPoly contract_right_counit(const Tensor2& u) {
    NcPoly out = NcPoly::zero(u.arity());
    for (const auto& [k, c] : u.terms())
        if (k.second.is_unit()) out.add_term(k.first, c);
    return out;
}

Tensor2 t2_mul(const Tensor2& u, const Tensor2& v, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return t2_mul(u, v, t, budget);
}

Tensor3 t3_mul(const Tensor3& u, const Tensor3& v, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return t3_mul(u, v, t, budget);
}

NcPoly mu(const Tensor2& u, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return mu(u, t, budget);
}

namespace {

// Renders coeff * m for one tensor slot; the coefficient rides on the slot.
std::string tensor_side(const Monomial& m, const Scalar& coeff,
                        const std::vector<std::string>& names) {
    if (m.is_unit()) return to_string(coeff);
    if (coeff == 1) return to_string(m, names);
    return to_string(coeff) + "*" + to_string(m, names);
}

}  // namespace

std::string to_string(const Tensor2& u, const std::vector<std::string>& names) {
    if (u.is_zero()) return "0";
    std::string out;
    Scalar one(1);
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        Scalar a = abs(c);
        bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += tensor_side(k.first, a, names) + " ox " + tensor_side(k.second, one, names);
    }
    return out;
}

std::string to_string(const Tensor3& u, const std::vector<std::string>& names) {
    if (u.is_zero()) return "0";
    std::string out;
    Scalar one(1);
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        Scalar a = abs(c);
        bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += tensor_side(k[0], a, names) + " ox " + tensor_side(k[1], one, names) + " ox " +
               tensor_side(k[2], one, names);
    }
    return out;
}

}  // namespace skewhopf
