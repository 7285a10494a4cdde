#pragma once

// Equitable and distance partitions of H(n,q), completely regular codes, and
// the 5-cell partition around an extended unitrade of length 10.

#include "hampack/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hampack {

struct IntersectionArray {
    std::vector<long> b;  // b_0 .. b_{m-1}
    std::vector<long> c;  // c_1 .. c_m

    std::string str() const;
    friend bool operator==(const IntersectionArray &, const IntersectionArray &) = default;
};

struct IntersectionMatrix {
    /// s[i][j]: neighbors in cell j of any vertex in cell i.
    std::vector<std::vector<long>> s;
    std::vector<std::uint64_t> cell_sizes;

    /// |C_i| s_{i,j} = |C_j| s_{j,i} for all i, j.
    bool consistent() const;
    bool tridiagonal() const;
    std::optional<IntersectionArray> intersection_array() const;

    friend bool operator==(const IntersectionMatrix &, const IntersectionMatrix &) = default;
};

/// The matrix of the 5-cell partition around the cardinality-96 unitrades.
IntersectionMatrix c01234_matrix();

/// Cells are vertex lists over H(n,q) with q^n <= 2^22.
struct Partition {
    SpaceParams space;
    std::vector<Code> cells;
    std::optional<IntersectionMatrix> matrix;
};

struct EquitableCheck {
    std::optional<IntersectionMatrix> matrix;
    /// A vertex whose neighbor profile differs from the first vertex of its cell.
    std::optional<Word> witness;
    int witness_cell = -1;

    bool equitable() const { return matrix.has_value(); }
};

/// Throws std::invalid_argument if the cells overlap or miss a vertex.
EquitableCheck is_equitable(const Partition &p);

/// Cells by exact distance to C, with the equitable check applied.
Partition distance_partition(const Code &c);

/// Distance cells 0..2 of C0, cell 3 minus C4, then C4 (omitted when empty),
/// then any further distance cells. Throws if C4 leaves the distance-3 cell.
Partition split_distance3_cell(const Code &c0, const Code &c4);

/// Cells merged by index groups, e.g. {{0},{1},{2},{3,4}}.
Partition merge_cells(const Partition &p, const std::vector<std::vector<int>> &groups);

struct UnitradePartition {
    Partition partition;
    /// Added to the input so that T has odd parity; zero when it already had.
    Word translation;
};

/// C2 = N(T), C0 = even words outside C2, C1 = N(C0), C3 = odd words outside
/// T and C1. Returns the partition only when it is equitable with matrix
/// c01234_matrix(). Requires |T| = 96 and T an extended unitrade of length 10.
std::optional<UnitradePartition> partition_from_unitrade(const Code &t);

}  // namespace hampack
