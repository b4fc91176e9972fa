#pragma once

#include <string>
#include <vector>

#include "hopf.hpp"

namespace skewhopf {

// Built-in example library. Names:
//   heisenberg            coordinate functions (y, z, x) with tail y (x) z
//   solv2-der             k[x][y; delta], delta = x d/dx
//   solv2-auto            k[y][x; sigma], sigma(y) = y - 1
//   usl2                  k[h][e; sigma2][f; sigma3, delta3]
//   A(l1,l2,alpha)        three-generator family, alpha legal only when l1 = l2
//   B(l)                  three-generator family with infinite antipode order
// Parameters are rationals, e.g. "B(1/2)" or "A(0,0,1)".
HopfTower builtin(const std::string& name, long long budget = Tower::kDefaultBudget);

// Fixed sample of names accepted by builtin(), for listing purposes.
std::vector<std::string> builtin_sample_names();

}  // namespace skewhopf
