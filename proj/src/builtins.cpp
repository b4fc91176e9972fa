#include "skewhopf/builtins.hpp"

#include <sstream>

namespace skewhopf {

namespace {

NcPoly gen(std::size_t n, std::size_t i) { return NcPoly::generator(n, i); }
NcPoly cst(std::size_t n, const Scalar& c) { return NcPoly::constant(n, c); }

HopfTower heisenberg(long long budget) {
    // Coordinate functions of the 3x3 unitriangular group: commutative algebra,
    // the last generator carries the tail y (x) z.
    std::size_t n = 3;
    std::vector<std::string> names{"y", "z", "x"};
    std::vector<OreStep> steps(n);
    steps[1] = {{gen(n, 0)}, {gen(n, 0)}, {NcPoly::zero(n)}};
    steps[2] = {{gen(n, 0), gen(n, 1)}, {gen(n, 0), gen(n, 1)}, {NcPoly::zero(n), NcPoly::zero(n)}};
    std::vector<Tensor2> tails(n, Tensor2::zero(n));
    tails[2].add_term(Monomial::gen(n, 0), Monomial::gen(n, 1), 1);
    return HopfTower(Tower(names, steps, budget), tails, "heisenberg");
}

HopfTower solv2_der(long long budget) {
    // k[x][y; delta] with delta = x d/dx: the relation is y x = x y + x.
    std::size_t n = 2;
    std::vector<std::string> names{"x", "y"};
    std::vector<OreStep> steps(n);
    steps[1] = {{gen(n, 0)}, {gen(n, 0)}, {gen(n, 0)}};
    std::vector<Tensor2> tails(n, Tensor2::zero(n));
    return HopfTower(Tower(names, steps, budget), tails, "solv2-der");
}

HopfTower solv2_auto(long long budget) {
    // k[y][x; sigma] with sigma(y) = y - 1: the same algebra, variant shape.
    std::size_t n = 2;
    std::vector<std::string> names{"y", "x"};
    std::vector<OreStep> steps(n);
    steps[1] = {{gen(n, 0) - cst(n, 1)}, {gen(n, 0) + cst(n, 1)}, {NcPoly::zero(n)}};
    std::vector<Tensor2> tails(n, Tensor2::zero(n));
    return HopfTower(Tower(names, steps, budget), tails, "solv2-auto");
}

HopfTower usl2(long long budget) {
    std::size_t n = 3;
    std::vector<std::string> names{"h", "e", "f"};
    std::vector<OreStep> steps(n);
    steps[1] = {{gen(n, 0) - cst(n, 2)}, {gen(n, 0) + cst(n, 2)}, {NcPoly::zero(n)}};
    steps[2] = {{gen(n, 0) + cst(n, 2), gen(n, 1)},
                {gen(n, 0) - cst(n, 2), gen(n, 1)},
                {NcPoly::zero(n), -gen(n, 0)}};
    std::vector<Tensor2> tails(n, Tensor2::zero(n));
    return HopfTower(Tower(names, steps, budget), tails, "usl2");
}

Tensor2 antisymmetric_tail(std::size_t n, std::size_t a, std::size_t b) {
    Tensor2 w(n);
    w.add_term(Monomial::gen(n, a), Monomial::gen(n, b), 1);
    w.add_term(Monomial::gen(n, b), Monomial::gen(n, a), -1);
    return w;
}

HopfTower family_a(const Scalar& l1, const Scalar& l2, const Scalar& alpha, long long budget,
                   const std::string& display) {
    if (l1 != l2 && sgn(alpha) != 0)
        throw SkewError("builtin: alpha must be 0 unless the two eigenvalues agree");
    if (alpha != 0 && alpha != 1)
        throw SkewError("builtin: alpha must be 0 or 1");
    std::size_t n = 3;
    std::vector<std::string> names{"Y", "X", "Z"};
    std::vector<OreStep> steps(n);
    steps[1] = {{gen(n, 0)}, {gen(n, 0)}, {NcPoly::zero(n)}};
    steps[2] = {{gen(n, 0), gen(n, 1)},
                {gen(n, 0), gen(n, 1)},
                {gen(n, 0).scaled(l2), gen(n, 1).scaled(l1) - gen(n, 0).scaled(alpha)}};
    std::vector<Tensor2> tails(n, Tensor2::zero(n));
    tails[2] = antisymmetric_tail(n, 1, 0);  // X (x) Y - Y (x) X
    return HopfTower(Tower(names, steps, budget), tails, display);
}

HopfTower family_b(const Scalar& lambda, long long budget, const std::string& display) {
    std::size_t n = 3;
    std::vector<std::string> names{"Y", "X", "Z"};
    std::vector<OreStep> steps(n);
    steps[1] = {{gen(n, 0)}, {gen(n, 0)}, {gen(n, 0)}};
    steps[2] = {{gen(n, 0), gen(n, 1) - cst(n, 1)},
                {gen(n, 0), gen(n, 1) + cst(n, 1)},
                {NcPoly::zero(n), gen(n, 0).scaled(lambda)}};
    std::vector<Tensor2> tails(n, Tensor2::zero(n));
    tails[2] = antisymmetric_tail(n, 1, 0);
    return HopfTower(Tower(names, steps, budget), tails, display);
}

std::vector<Scalar> parse_args(const std::string& name, std::size_t expected) {
    auto open = name.find('(');
    auto close = name.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw SkewError("builtin: malformed parameter list in '" + name + "'");
    std::string inner = name.substr(open + 1, close - open - 1);
    std::vector<Scalar> args;
    std::istringstream stream(inner);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        auto begin = piece.find_first_not_of(" \t");
        auto end = piece.find_last_not_of(" \t");
        if (begin == std::string::npos) throw SkewError("builtin: empty parameter in '" + name + "'");
        auto q = parse_rational(piece.substr(begin, end - begin + 1));
        if (!q) throw SkewError("builtin: malformed rational in '" + name + "'");
        args.push_back(*q);
    }
    if (args.size() != expected)
        throw SkewError("builtin: '" + name + "' expects " + std::to_string(expected) +
                        " parameter(s)");
    return args;
}

}  // namespace

HopfTower builtin(const std::string& name, long long budget) {
    if (name == "heisenberg") return heisenberg(budget);
    if (name == "solv2-der") return solv2_der(budget);
    if (name == "solv2-auto") return solv2_auto(budget);
    if (name == "usl2") return usl2(budget);
    if (name.rfind("A(", 0) == 0) {
        auto args = parse_args(name, 3);
        return family_a(args[0], args[1], args[2], budget, name);
    }
    if (name.rfind("B(", 0) == 0) {
        auto args = parse_args(name, 1);
        return family_b(args[0], budget, name);
    }
    throw SkewError("builtin: unknown name '" + name + "'");
}

std::vector<std::string> builtin_sample_names() {
    return {"heisenberg", "solv2-der", "solv2-auto", "usl2",     "A(0,0,0)", "A(0,0,1)",
            "A(1,1,1)",   "A(1,1,0)",  "B(0)",       "B(1)",     "B(1/2)"};
}

}  // namespace skewhopf
