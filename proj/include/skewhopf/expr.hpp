#pragma once

#include <memory>

#include "tower.hpp"

namespace skewhopf {

// Abstract product/sum tree over generators and rational constants.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { constant, generator, add, sub, mul, neg, pow };

    Kind kind;
    Scalar value;          // constant
    std::size_t gen = 0;   // generator
    ExprPtr lhs, rhs;      // add/sub/mul; lhs for neg/pow
    std::uint32_t exponent = 0;

    static ExprPtr constant(const Scalar& c);
    static ExprPtr generator(std::size_t i);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr pow(ExprPtr a, std::uint32_t k);
};

// Canonical PBW form of an expression, evaluated with the production engine.
NcPoly normal_form(const ExprPtr& e, const Tower& t);
NcPoly normal_form(const ExprPtr& e, const Tower& t, RewriteBudget& budget);

// Re-embeds a canonical form as an expression tree (sum of scaled monomials).
ExprPtr to_expr(const NcPoly& p);

}  // namespace skewhopf
