#pragma once

#include "hopf.hpp"
#include "winding.hpp"

namespace skewhopf {

struct CommutatorEntry {
    std::size_t hi, lo;  // [x_hi, x_lo], hi > lo
    NcPoly value;
};

// Normal forms of all generator commutators [x_b, x_a], a < b.
std::vector<CommutatorEntry> commutator_normal_forms(const Tower& t);

// Solution set of the character equations by triangular substitution. Each
// generator ends up free, forced to one value, or marked unresolved when a
// genuinely nonlinear residue blocks the solver.
struct VarietyDescription {
    enum class Kind { free_param, forced, unresolved };
    struct GenConstraint {
        Kind kind = Kind::free_param;
        Scalar value;  // for forced
    };
    std::vector<GenConstraint> gens;
    bool consistent = true;  // false when the equations have no solution at all
    std::vector<std::string> notes;

    std::size_t count(Kind k) const;
};

VarietyDescription character_variety(const Tower& t);

enum class ExtensionType { invariant, variant, inconsistent };

struct Classification {
    ExtensionType type = ExtensionType::invariant;
    std::string detail;
};

// Evaluates the step-g dichotomy at the augmentation character of the
// coefficient subalgebra: invariant when sigma_g and delta_g both fix it,
// variant when sigma_g moves it and delta_g kills generator commutators,
// inconsistent otherwise (which signals bad input data).
Classification classify_extension(const HopfTower& ht, std::size_t g);

// Fiber of the character restriction map over a character m of the
// coefficient subalgebra of step g.
struct FiberResult {
    enum class Kind { line, point, empty, unresolved };
    Kind kind = Kind::unresolved;
    Scalar lambda0;               // point: the unique shift, M = <m, x_g + lambda0>
    Character extended;           // point: validated character of the step-g subtower
    std::string description;
    std::vector<std::string> diagnostics;
};

FiberResult goodearl_fiber(const Tower& t, std::size_t g, const Character& m);
FiberResult goodearl_fiber(const HopfTower& ht, std::size_t g, const Character& m);

// Bounded normality probe for the monomial ideal generated by a subset of the
// generators. The subset must be rewrite-stable, so membership is "some listed
// generator occurs". Stability of the ideal is tested under the two adjoint
// coactions a -> a2 (x) S(a1)a3 and a -> a2 (x) a1 S(a3): the first tensorand
// of the image of an ideal element must stay inside the ideal. A failure is
// returned with the ideal element and the escaping residual as witness.
struct NormalityResult {
    bool normal = true;
    std::uint32_t max_degree = 0;   // bound of the search when normal
    NcPoly element;                 // witness ideal element
    std::string side;               // "left" or "right"
    Tensor2 residual;               // part of the coaction image outside I (x) H
    std::string detail;
};

NormalityResult normality_search(const HopfTower& ht, const std::vector<std::size_t>& ideal_gens,
                                 std::uint32_t max_deg);

}  // namespace skewhopf
