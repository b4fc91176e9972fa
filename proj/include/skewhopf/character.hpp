#pragma once

#include <vector>

#include "poly.hpp"

namespace skewhopf {

// Assignment of scalars to the generators of a tower, defining (when valid)
// an algebra map to the base field by multiplicative extension.
struct Character {
    std::vector<Scalar> values;

    std::size_t arity() const { return values.size(); }

    static Character counit(std::size_t arity) {
        return Character{std::vector<Scalar>(arity, Scalar(0))};
    }

    friend bool operator==(const Character& a, const Character& b) {
        return a.values == b.values;
    }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
};

Scalar evaluate(const Character& chi, const Monomial& m);
Scalar evaluate(const Character& chi, const NcPoly& p);

}  // namespace skewhopf
