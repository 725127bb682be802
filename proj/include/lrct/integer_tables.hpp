#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lrct/bigint.hpp"

namespace lrct {

// A family of nonnegative-integer matrices with prescribed row and column
// sums, optionally hollow (zero diagonal), symmetric, and/or entry-capped.
struct TableSpec {
    std::vector<int> row_margins;
    std::vector<int> col_margins;
    bool hollow = false;
    bool symmetric = false;
    std::optional<int> entry_cap;
};

using IntMatrix = std::vector<std::vector<int>>;

// Number of matrices matching the spec.
BigInt count_tables(const TableSpec& spec);

// Streams every matching matrix in ascending row-major lexicographic order of
// the flattened entries.  The matrix passed to the visitor is reused between
// calls; copy it to keep it.
void enumerate_tables(const TableSpec& spec, const std::function<void(const IntMatrix&)>& visit);
std::vector<IntMatrix> list_tables(const TableSpec& spec);

// Permutation matrices with zero diagonal: d(0) = 1, d(1) = 0, and
// d(r) = (r-1) * (d(r-1) + d(r-2)).
BigInt derangement_count(int r);

// Symmetric 0/1 margin-1 hollow tables are fixed-point-free involutions:
// 0 for odd r, (r-1) * (r-3) * ... * 1 for even r.
BigInt fpf_involution_count(int r);

}  // namespace lrct
