#include "skewhopf/poly.hpp"

namespace skewhopf {

NcPoly NcPoly::constant(std::size_t arity, const Scalar& c) {
    NcPoly p(arity);
    p.add_term(Monomial::unit(arity), c);
    return p;
}

NcPoly NcPoly::generator(std::size_t arity, std::size_t i) {
    NcPoly p(arity);
    p.add_term(Monomial::gen(arity, i), 1);
    return p;
}

NcPoly NcPoly::monomial(const Monomial& m, const Scalar& c) {
    NcPoly p(m.arity());
    p.add_term(m, c);
    return p;
}

bool NcPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::uint32_t NcPoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Scalar NcPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool NcPoly::supported_below(std::size_t bound) const {
    for (const auto& [m, c] : terms_)
        if (!m.supported_below(bound)) return false;
    return true;
}

void NcPoly::add_term(const Monomial& m, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    NcPoly p(arity_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly p(arity_);
    if (sgn(c) == 0) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, c * k);
    return p;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    NcPoly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, c);
    return p;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) {
    NcPoly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, -c);
    return p;
}

std::string to_string(const NcPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    // Leading term first: descending degree-lex order.
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar a = abs(c);
        bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string ms = to_string(m, names);
        if (m.is_unit()) {
            out += to_string(a);
        } else if (a == 1) {
            out += ms;
        } else {
            out += to_string(a) + "*" + ms;
        }
    }
    return out;
}

}  // namespace skewhopf
