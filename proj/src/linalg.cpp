#include "rcc/linalg.hpp"

#include <algorithm>

namespace rcc::linalg {

Rref rref(Residue p, std::size_t ncols, std::vector<Row> rows) {
    for (const auto& r : rows)
        if (r.size() != ncols) throw Error(ErrorKind::ContextMismatch, "row length mismatch in elimination");
    Rref out;
    out.p = p;
    out.ncols = ncols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Row& pr = rows[rank];
        const Residue inv = fp::inv(pr[col], p);
        for (std::size_t j = col; j < ncols; ++j) pr[j] = fp::mul(pr[j], inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Residue f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] = fp::sub(rows[i][j], fp::mul(f, pr[j], p), p);
        }
        out.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

Row reduce(const Rref& basis, Row v) {
    if (v.size() != basis.ncols) throw Error(ErrorKind::ContextMismatch, "vector length mismatch in reduction");
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        const std::size_t col = basis.pivots[i];
        const Residue f = v[col];
        if (f == 0) continue;
        const Row& r = basis.rows[i];
        for (std::size_t j = col; j < basis.ncols; ++j) v[j] = fp::sub(v[j], fp::mul(f, r[j], basis.p), basis.p);
    }
    return v;
}

bool in_span(const Rref& basis, const Row& v) {
    Row r = reduce(basis, v);
    return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

std::vector<Row> null_space(const Rref& basis) {
    const std::size_t n = basis.ncols;
    std::vector<bool> is_pivot(n, false);
    for (auto c : basis.pivots) is_pivot[c] = true;
    std::vector<Row> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Row x(n, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < basis.rows.size(); ++i) x[basis.pivots[i]] = fp::neg(basis.rows[i][free], basis.p);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace rcc::linalg
