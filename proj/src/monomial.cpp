#include "skewhopf/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace skewhopf {

Monomial Monomial::gen(std::size_t arity, std::size_t i) {
    Monomial m = unit(arity);
    m.exp.at(i) = 1;
    return m;
}

std::uint32_t Monomial::degree() const {
    return std::accumulate(exp.begin(), exp.end(), std::uint32_t{0});
}

bool Monomial::is_unit() const {
    for (auto e : exp)
        if (e != 0) return false;
    return true;
}

std::size_t Monomial::top() const {
    for (std::size_t i = exp.size(); i-- > 0;)
        if (exp[i] != 0) return i;
    return npos;
}

bool Monomial::supported_below(std::size_t bound) const {
    for (std::size_t i = bound; i < exp.size(); ++i)
        if (exp[i] != 0) return false;
    return true;
}

bool Monomial::contains_any(const std::vector<std::size_t>& gens) const {
    for (auto g : gens)
        if (g < exp.size() && exp[g] != 0) return true;
    return false;
}

Monomial Monomial::times_gen_power(std::size_t i, std::uint32_t k) const {
    Monomial m = *this;
    m.exp.at(i) += k;
    return m;
}

Monomial Monomial::without_top() const {
    Monomial m = *this;
    std::size_t t = top();
    if (t != npos) m.exp[t] = 0;
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names.at(i);
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out;
}

}  // namespace skewhopf
