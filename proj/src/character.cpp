#include "skewhopf/character.hpp"

#include <stdexcept>

namespace skewhopf {

Scalar evaluate(const Character& chi, const Monomial& m) {
    Scalar out(1);
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m.exp[i] == 0) continue;
        if (i >= chi.values.size())
            throw std::out_of_range("character: missing generator assignment");
        for (std::uint32_t k = 0; k < m.exp[i]; ++k) out *= chi.values[i];
    }
    return out;
}

Scalar evaluate(const Character& chi, const NcPoly& p) {
    Scalar out(0);
    for (const auto& [m, c] : p.terms()) out += c * evaluate(chi, m);
    return out;
}

}  // namespace skewhopf
