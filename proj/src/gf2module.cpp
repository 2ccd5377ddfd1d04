#include "slicesieve/gf2module.hpp"

#include <stdexcept>

namespace slicesieve {

namespace {

// Smallest-degree nonzero entry of the trailing submatrix, or {-1,-1}.
std::pair<long, long> find_pivot(const std::vector<std::vector<GF2Poly>>& m, size_t r) {
    long bi = -1, bj = -1, bd = -1;
    for (size_t i = r; i < m.size(); ++i)
        for (size_t j = r; j < m[i].size(); ++j) {
            if (m[i][j].is_zero()) continue;
            long d = m[i][j].degree();
            if (bd < 0 || d < bd) {
                bd = d;
                bi = static_cast<long>(i);
                bj = static_cast<long>(j);
            }
        }
    return {bi, bj};
}

}  // namespace

GF2ModuleStructure gf2t_module_reduce(std::vector<std::vector<GF2Poly>> rows, long p) {
    size_t nr = rows.size();
    size_t nc = nr == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != nc) throw std::invalid_argument("gf2t_module_reduce: ragged rows");

    size_t r = 0;
    size_t lim = nr < nc ? nr : nc;
    while (r < lim) {
        auto [pi, pj] = find_pivot(rows, r);
        if (pi < 0) break;
        std::swap(rows[r], rows[static_cast<size_t>(pi)]);
        for (size_t i = 0; i < nr; ++i) std::swap(rows[i][r], rows[i][static_cast<size_t>(pj)]);

        // Clear column and row by Euclidean steps; restart whenever a smaller
        // remainder appears.
        bool dirty = false;
        for (size_t i = r + 1; i < nr && !dirty; ++i) {
            if (rows[i][r].is_zero()) continue;
            GF2Poly q = rows[i][r] / rows[r][r];
            for (size_t j = r; j < nc; ++j) rows[i][j] = rows[i][j] + q * rows[r][j];
            if (!rows[i][r].is_zero()) dirty = true;
        }
        if (dirty) continue;
        for (size_t j = r + 1; j < nc && !dirty; ++j) {
            if (rows[r][j].is_zero()) continue;
            GF2Poly q = rows[r][j] / rows[r][r];
            for (size_t i = r; i < nr; ++i) rows[i][j] = rows[i][j] + q * rows[i][r];
            if (!rows[r][j].is_zero()) dirty = true;
        }
        if (dirty) continue;

        // Divisibility repair: drag any non-multiple into the pivot column.
        for (size_t i = r + 1; i < nr && !dirty; ++i)
            for (size_t j = r + 1; j < nc && !dirty; ++j)
                if (!(rows[i][j] % rows[r][r]).is_zero()) {
                    for (size_t jj = r; jj < nc; ++jj) rows[r][jj] = rows[r][jj] + rows[i][jj];
                    dirty = true;
                }
        if (dirty) continue;
        ++r;
    }

    if (r < nc) throw std::logic_error("gf2t_module_reduce: module is not torsion");

    GF2ModuleStructure out;
    for (size_t i = 0; i < r; ++i)
        if (rows[i][i].degree() > 0) out.invariant_factors.push_back(rows[i][i]);
    for (const auto& f : out.invariant_factors) out.f2_dimension += f.degree();
    out.cyclic = out.invariant_factors.size() <= 1;
    out.iso_to_vp =
        out.invariant_factors.size() == 1 && out.invariant_factors[0] == GF2Poly::all_ones(p - 1);
    return out;
}

}  // namespace slicesieve
