#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace skewhopf {

using RatVec = std::vector<Scalar>;
using RatMat = std::vector<RatVec>;

// In-place reduced row echelon form; returns pivot column per row rank order.
std::vector<std::size_t> rref(RatMat& m);

// Basis of { v : M v = 0 }, canonical free-variable unit completion.
std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols);

struct AffineSolution {
    bool consistent = false;
    RatVec values;               // one per unknown; free unknowns set to 0
    std::vector<bool> is_free;   // which unknowns were unconstrained
};

// Solves M x = rhs exactly; free unknowns default to zero.
AffineSolution solve_affine(const RatMat& m, const RatVec& rhs, std::size_t unknowns);

}  // namespace skewhopf
