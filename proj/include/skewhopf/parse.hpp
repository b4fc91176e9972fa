#pragma once

#include <string>

#include "expr.hpp"
#include "hopf.hpp"

namespace skewhopf {

struct ParseError : SkewError {
    int line;
    int col;
    ParseError(int line, int col, const std::string& message);
};

// Parses a presentation source into an elaborated tower with tails. Structural
// well-foundedness is enforced here; semantic validity is validate_tower's job.
HopfTower parse(const std::string& text, long long budget = Tower::kDefaultBudget);

// Deterministic canonical source; parse(serialize(ht)) reproduces the data.
std::string serialize(const HopfTower& ht);

// Expression over the tower's generators and rational literals (+ - * ^).
ExprPtr parse_expr(const std::string& text, const Tower& t);

// Sum of "lhs ox rhs" tensor terms over the tower's generators.
Tensor2 parse_tensor(const std::string& text, const Tower& t);

}  // namespace skewhopf
