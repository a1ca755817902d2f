#pragma once

// Brute-force reference implementations. They share no code paths with the
// library beyond the shape types and are only meant for small inputs.

#include <vector>

#include "skewlab/shape.hpp"
#include "skewlab/sparse.hpp"

namespace oracle {

using skewlab::Cell;
using skewlab::Integer;
using skewlab::Partition;
using skewlab::SkewShape;

/// Connected canonical diagrams with n cells: every outer partition in a
/// bounded box, every inner partition below it, normalize, dedupe.
std::vector<SkewShape> connected_diagrams(int n);

/// Number of semistandard fillings of D with entries in 1..t.
Integer count_ssyt(const SkewShape& d, int t);

/// Number of column-strict tableaux of shape D with the given content.
Integer count_tableaux_with_content(const SkewShape& d, const std::vector<int>& content);

/// Minimum number of ribbons (cell sets) that partition D.
int min_ribbon_partition(const SkewShape& d);

/// k-row by l-column rectangles counted cell by cell.
int count_rectangles(const SkewShape& d, int k, int l);

/// Columns shared by rows i..i+k-1 counted cell by cell.
int shared_columns(const std::vector<Cell>& cells, int first_row, int k);

/// Schur coefficients of f through the character table: c_lambda =
/// sum_nu chi^f(nu) chi^lambda(nu) / z_nu, characters from the library.
skewlab::SchurVector schur_from_characters(const skewlab::CharacterVector& chi, int n);

}  // namespace oracle
