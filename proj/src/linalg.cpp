#include "skewhopf/linalg.hpp"

namespace skewhopf {

std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Scalar inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols) {
    RatMat a = m;
    for (auto& row : a) row.resize(cols, Scalar(0));
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Scalar(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolution solve_affine(const RatMat& m, const RatVec& rhs, std::size_t unknowns) {
    AffineSolution out;
    RatMat a = m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i].resize(unknowns, Scalar(0));
        a[i].push_back(rhs[i]);
    }
    rref(a);
    out.values.assign(unknowns, Scalar(0));
    out.is_free.assign(unknowns, true);
    out.consistent = true;
    for (const auto& row : a) {
        std::size_t lead = unknowns + 1;
        for (std::size_t j = 0; j <= unknowns; ++j)
            if (sgn(row[j]) != 0) { lead = j; break; }
        if (lead == unknowns) {
            out.consistent = false;  // 0 = nonzero
            return out;
        }
        if (lead > unknowns) continue;  // zero row
        // Reduced form: the pivot unknown equals rhs minus free contributions;
        // free unknowns default to zero, so the tail coefficients drop out.
        out.values[lead] = row[unknowns];
        out.is_free[lead] = false;
    }
    return out;
}

}  // namespace skewhopf
