#ifndef RCC_LINALG_HPP
#define RCC_LINALG_HPP

#include <cstddef>
#include <vector>

#include "rcc/gf_prime.hpp"

namespace rcc::linalg {

using Row = std::vector<Residue>;

/// Reduced row echelon form of a row space over F_p. Rows are nonzero, pivots strictly increasing,
/// each pivot entry is 1 and is the only nonzero entry of its column.
struct Rref {
    Residue p = 0;
    std::size_t ncols = 0;
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return rows.size(); }
    friend bool operator==(const Rref&, const Rref&) = default;
};

Rref rref(Residue p, std::size_t ncols, std::vector<Row> rows);

/// Residue of v after elimination against the basis; zero iff v lies in the row space.
Row reduce(const Rref& basis, Row v);
bool in_span(const Rref& basis, const Row& v);

/// Basis of {x : r . x = 0 for every row r}.
std::vector<Row> null_space(const Rref& basis);

}  // namespace rcc::linalg

#endif
