#pragma once

#include <optional>
#include <string>
#include <vector>

#include "character.hpp"
#include "tensor.hpp"
#include "tower.hpp"

namespace skewhopf {

// A tower together with coproduct tails: Delta(x_g) = x_g (x) 1 + 1 (x) x_g + w_g,
// with w_g supported on earlier generators and eps(x_g) = 0 as the normal form
// of the presentation. The group-like in front of the right tensorand is 1
// throughout, which is the only possibility for towers over the base field.
class HopfTower {
public:
    HopfTower() = default;
    HopfTower(Tower tower, std::vector<Tensor2> tails, std::string name = "");

    const Tower& tower() const { return tower_; }
    std::size_t arity() const { return tower_.arity(); }
    const Tensor2& tail(std::size_t g) const { return tails_[g]; }
    const std::vector<Tensor2>& tails() const { return tails_; }
    const std::string& name() const { return name_; }
    HopfTower with_name(std::string name) const;
    HopfTower with_budget(long long budget) const;

    friend bool operator==(const HopfTower& a, const HopfTower& b) {
        return a.tower_ == b.tower_ && a.tails_ == b.tails_;
    }
    friend bool operator!=(const HopfTower& a, const HopfTower& b) { return !(a == b); }

private:
    Tower tower_;
    std::vector<Tensor2> tails_;
    std::string name_;
};

Tensor2 coproduct(const NcPoly& p, const HopfTower& ht);
Tensor2 coproduct(const NcPoly& p, const HopfTower& ht, RewriteBudget& budget);

// Coefficient of the unit monomial; kills every generator.
Scalar counit(const NcPoly& p);

// S(x_g) = -(x_g + sum w1 * S(w2)), extended as an anti-homomorphism. The
// recursion on the tail components is well-founded because tails only involve
// earlier generators.
NcPoly antipode(const NcPoly& p, const HopfTower& ht);
NcPoly antipode_power(const NcPoly& p, std::uint32_t m, const HopfTower& ht);

// Hopf axioms on generators and defining relations: multiplicativity of the
// coproduct on every relation, coassociativity, the counit law and the
// antipode law. Sufficient for algebra/anti-algebra maps; reports say so.
CheckList check_hopf_axioms(const HopfTower& ht);

// The extension identities at step g (1-based generator index g >= 1, i.e.
// the step adjoining generator g): the winding condition sigma = (chi (x) id)Delta,
// the delta coproduct identity, tail coassociativity, the tail antipode
// identity and augmentation of the tail components.
CheckList check_hoe_conditions(const HopfTower& ht, std::size_t g);

// validate_tower + check_hopf_axioms + check_hoe_conditions at every step.
CheckList check_all(const HopfTower& ht);

struct PrimitiveBasis {
    std::uint32_t max_degree = 0;  // completeness bound of the search
    std::vector<NcPoly> basis;
};

// Basis of { p : deg p <= max_deg, eps(p) = 0, Delta(p) = p (x) 1 + 1 (x) p },
// computed by exact linear algebra over the truncated monomial basis.
PrimitiveBasis primitives(const HopfTower& ht, std::uint32_t max_deg);

struct AntipodeOrder {
    enum class Kind { involutive, infinite, undecided };
    Kind kind = Kind::involutive;
    std::size_t witness_gen = 0;  // for infinite: generator with S^2(x) != x
    NcPoly increment;             // a with S^{2m}(x) = x + m*a
    std::uint32_t searched_up_to = 0;
    std::string note;
};

// Dichotomy probe: either S^2 fixes every generator, or some generator gains
// a constant increment under S^2 and the order is infinite in characteristic 0.
// Non-constant increment patterns are iterated up to max_m before giving up.
AntipodeOrder antipode_order(const HopfTower& ht, std::uint32_t max_m);

struct S4Decomposition {
    bool resolved = false;
    Character chi;
    std::string diagnostic;
};

// Solves S^4 = (chi (x) id (x) chi o S) applied to the twofold coproduct, for
// a character chi, processing generators in tower order. Unresolved when the
// resulting scalar equations are not affine in the unknown character values.
S4Decomposition s4_decompose(const HopfTower& ht);

// Presentation change x_g -> x_g + lambda: delta_g becomes
// delta_g + lambda*(id - sigma_g), the tail of x_g absorbs -lambda*(1 (x) 1),
// and data of later steps is rewritten in the shifted generator. The shifted
// generator has counit value lambda, so a nonzero shift is reported by the
// counit axiom until counit_normalize is applied.
HopfTower change_variable(const HopfTower& ht, std::size_t g, const Scalar& lambda);

// Undoes scalar tail components stepwise so every generator is killed by the
// counit again; exact inverse of change_variable shifts.
HopfTower counit_normalize(const HopfTower& ht);

struct GkDimension {
    std::uint32_t value = 0;
    std::string note;
};

// Gelfand-Kirillov dimension of the tower: one per adjoined variable.
GkDimension gk_dimension(const HopfTower& ht);

}  // namespace skewhopf
