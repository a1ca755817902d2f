#pragma once

#include <cstdint>
#include <vector>

#include "skewlab/shape.hpp"
#include "skewlab/sparse.hpp"

namespace skewlab {

/// Row and column overlap data. Index k-1 holds the k-row (k-column) data.
struct OverlapProfile {
    std::vector<std::vector<int>> row_comps;  // r^(k), zeros kept
    std::vector<Partition> row_parts;         // rho^(k)
    std::vector<std::vector<int>> col_comps;  // c^(k)
    std::vector<Partition> col_parts;         // gamma^(k)
    /// rect_counts[k-1][l-1]: number of k-row by l-column rectangles inside D.
    std::vector<std::vector<int>> rect_counts;

    bool operator==(const OverlapProfile&) const = default;
};

/// r^(k)_i = number of columns shared by rows i..i+k-1 (0 when they share none).
std::vector<std::vector<int>> row_overlaps(std::span<const RowSpan> rows);

OverlapProfile overlaps(const SkewShape& d);

/// Minimum number of ribbons in a ribbon decomposition, via characters.
int frobenius_rank(const SkewShape& d);
/// The same number read off the lowest power of t in s_D(1^t).
int frobenius_rank_by_specialization(const SkewShape& d);

SchurVector fingerprint(const SkewShape& d);
/// FNV-1a hash of the rendered fingerprint; stable across runs and platforms.
std::uint64_t fingerprint_hash(const SchurVector& f);

/// The rho^(k) for all k, used to bucket candidates for equivalence.
std::vector<Partition> prefilter_key(const SkewShape& d);

} // namespace skewlab
