#include "skewhopf/upoly.hpp"

#include <numeric>

namespace skewhopf {

UPoly UPoly::constant(std::size_t vars, const Scalar& c) {
    UPoly u(vars);
    u.add_term(Key(vars, 0), c);
    return u;
}

UPoly UPoly::variable(std::size_t vars, std::size_t i) {
    UPoly u(vars);
    Key k(vars, 0);
    k.at(i) = 1;
    u.add_term(k, 1);
    return u;
}

bool UPoly::is_constant() const { return degree() == 0; }

Scalar UPoly::constant_term() const {
    auto it = terms_.find(Key(vars_, 0));
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::uint32_t UPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, std::accumulate(k.begin(), k.end(), std::uint32_t{0}));
    return d;
}

void UPoly::add_term(const Key& k, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

UPoly UPoly::operator-() const {
    UPoly u(vars_);
    for (const auto& [k, c] : terms_) u.terms_.emplace(k, -c);
    return u;
}

UPoly UPoly::scaled(const Scalar& c) const {
    UPoly u(vars_);
    if (sgn(c) == 0) return u;
    for (const auto& [k, s] : terms_) u.terms_.emplace(k, c * s);
    return u;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly u = a;
    for (const auto& [k, c] : b.terms_) u.add_term(k, c);
    return u;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly u = a;
    for (const auto& [k, c] : b.terms_) u.add_term(k, -c);
    return u;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly u(a.vars_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            UPoly::Key k = ka;
            for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
            u.add_term(k, ca * cb);
        }
    return u;
}

UPoly UPoly::substituted(const std::map<std::size_t, Scalar>& known) const {
    UPoly u(vars_);
    for (const auto& [k, c] : terms_) {
        Scalar factor = c;
        Key rest = k;
        for (const auto& [var, val] : known) {
            for (std::uint32_t e = 0; e < k[var]; ++e) factor *= val;
            rest[var] = 0;
        }
        u.add_term(rest, factor);
    }
    return u;
}

std::optional<UPoly::AffineIn1> UPoly::affine_in_single_unknown() const {
    std::size_t var = vars_;
    Scalar slope(0), offset(0);
    for (const auto& [k, c] : terms_) {
        std::uint32_t total = std::accumulate(k.begin(), k.end(), std::uint32_t{0});
        if (total == 0) {
            offset = c;
            continue;
        }
        if (total != 1) return std::nullopt;
        std::size_t v = 0;
        while (k[v] == 0) ++v;
        if (var != vars_ && var != v) return std::nullopt;
        var = v;
        slope = c;
    }
    if (var == vars_ || sgn(slope) == 0) return std::nullopt;
    return AffineIn1{var, slope, offset};
}

bool UPoly::is_affine() const { return degree() <= 1; }

std::string UPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!out.empty()) out += " + ";
        out += skewhopf::to_string(c);
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            out += "*" + var_names.at(i);
            if (k[i] > 1) out += "^" + std::to_string(k[i]);
        }
    }
    return out;
}

}  // namespace skewhopf
