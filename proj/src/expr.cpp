#include "skewhopf/expr.hpp"

namespace skewhopf {

ExprPtr Expr::constant(const Scalar& c) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::constant;
    e->value = c;
    return e;
}

ExprPtr Expr::generator(std::size_t i) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::generator;
    e->gen = i;
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::sub;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::mul;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::neg;
    e->lhs = std::move(a);
    return e;
}

ExprPtr Expr::pow(ExprPtr a, std::uint32_t k) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::pow;
    e->lhs = std::move(a);
    e->exponent = k;
    return e;
}

NcPoly normal_form(const ExprPtr& e, const Tower& t, RewriteBudget& budget) {
    if (!e) throw SkewError("normal_form: empty expression");
    std::size_t n = t.arity();
    switch (e->kind) {
        case Expr::Kind::constant: return NcPoly::constant(n, e->value);
        case Expr::Kind::generator:
            if (e->gen >= n) throw SkewError("normal_form: unknown generator index");
            return NcPoly::generator(n, e->gen);
        case Expr::Kind::add:
            return normal_form(e->lhs, t, budget) + normal_form(e->rhs, t, budget);
        case Expr::Kind::sub:
            return normal_form(e->lhs, t, budget) - normal_form(e->rhs, t, budget);
        case Expr::Kind::mul:
            return mul(normal_form(e->lhs, t, budget), normal_form(e->rhs, t, budget), t, budget);
        case Expr::Kind::neg: return -normal_form(e->lhs, t, budget);
        case Expr::Kind::pow: return power(normal_form(e->lhs, t, budget), e->exponent, t, budget);
    }
    throw SkewError("normal_form: corrupt expression node");
}

NcPoly normal_form(const ExprPtr& e, const Tower& t) {
    RewriteBudget budget(t.rewrite_budget());
    return normal_form(e, t, budget);
}

ExprPtr to_expr(const NcPoly& p) {
    ExprPtr sum;
    for (const auto& [m, c] : p.terms()) {
        ExprPtr term = Expr::constant(c);
        for (std::size_t i = 0; i < m.arity(); ++i)
            if (m.exp[i] != 0) term = Expr::mul(term, Expr::pow(Expr::generator(i), m.exp[i]));
        sum = sum ? Expr::add(sum, term) : term;
    }
    return sum ? sum : Expr::constant(Scalar(0));
}

}  // namespace skewhopf
