#pragma once

#include "hopf.hpp"

namespace skewhopf {

// Pass iff the multiplicative extension of the generator values kills every
// defining relation: chi(x_g)chi(x_j) - chi(sigma_g(x_j))chi(x_g) - chi(delta_g(x_j)) = 0.
CheckList validate_character(const Character& chi, const Tower& t);

// Algebra endomorphism given by generator images.
struct EndoMap {
    std::vector<NcPoly> images;
};

NcPoly apply_map(const EndoMap& f, const NcPoly& p, const Tower& t);
EndoMap compose(const EndoMap& f, const EndoMap& g, const Tower& t);  // f after g
bool respects_relations(const EndoMap& f, const Tower& t, NcPoly* witness = nullptr);

// Left and right winding endomorphisms (chi (x) id)Delta and (id (x) chi)Delta.
// Both are verified to respect the defining relations before being returned.
EndoMap tau_left(const Character& chi, const HopfTower& ht);
EndoMap tau_right(const Character& chi, const HopfTower& ht);

// Convolution (chi * psi)(x) = (chi (x) psi)Delta(x); inverse is chi o S.
Character convolve(const Character& chi, const Character& psi, const HopfTower& ht);
Character char_inverse(const Character& chi, const HopfTower& ht);

}  // namespace skewhopf
