#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/partition.hpp"

namespace skewlab {

/// Matrix coordinates: row 0 is the top row, columns grow to the east.
struct Cell {
    int row = 0;
    int col = 0;

    int content() const noexcept { return col - row; }
    Cell shifted(int drow, int dcol) const noexcept { return {row + drow, col + dcol}; }
    auto operator<=>(const Cell&) const = default;
};

/// Inclusive column range of one row; empty when last < first.
struct RowSpan {
    int first = 0;
    int last = -1;

    bool empty() const noexcept { return last < first; }
    int size() const noexcept { return empty() ? 0 : last - first + 1; }
    RowSpan intersect(const RowSpan& other) const noexcept;
    auto operator<=>(const RowSpan&) const = default;
};

/// A skew diagram outer/inner in canonical position: no empty rows, no empty
/// columns, and the bottom row starts in column 0 (the inner partition has no
/// trailing zeros). Two translation-equivalent diagrams compare equal.
class SkewShape {
public:
    SkewShape() = default;

    // Validates inner within outer, then normalizes.
    static SkewShape from_partitions(const Partition& outer, const Partition& inner = {});
    // Rows listed top to bottom; must already be in canonical position.
    static SkewShape from_canonical_rows(std::span<const RowSpan> rows);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    bool empty() const noexcept { return outer_.empty(); }
    int size() const noexcept { return outer_.weight() - inner_.weight(); }
    int num_rows() const noexcept { return static_cast<int>(outer_.length()); }
    int num_cols() const noexcept { return outer_[0]; }
    int num_diagonals() const noexcept;
    int min_content() const noexcept;
    int max_content() const noexcept;

    RowSpan row(int i) const noexcept {
        return {inner_[static_cast<std::size_t>(i)], outer_[static_cast<std::size_t>(i)] - 1};
    }
    std::vector<RowSpan> rows() const;
    std::vector<int> row_lengths() const;
    std::vector<int> col_lengths() const;

    // Row-major from the top row, west to east within a row.
    std::vector<Cell> cells() const;
    bool contains(Cell c) const noexcept;

    bool is_connected() const noexcept;
    bool is_ribbon() const noexcept;

    std::string compact() const;
    std::string ascii() const;

    auto operator<=>(const SkewShape&) const = default;

private:
    SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}

    Partition outer_;
    Partition inner_;
};

using DiagramList = std::vector<SkewShape>;

struct SkewShapeHash {
    std::size_t operator()(const SkewShape& d) const noexcept;
};

/// Canonical form of a cell set: translates, drops empty rows and columns.
/// Throws NotSkew when the result is not a skew diagram.
SkewShape normalize(std::span<const Cell> cells);

/// True when the cells, exactly as placed, form a skew diagram: distinct,
/// no empty row between occupied rows, each row a contiguous run, and both
/// row ends weakly moving west going down.
bool forms_skew_diagram(std::span<const Cell> cells);

/// True when the cells, exactly as placed, form a ribbon: one cell per
/// diagonal over a contiguous range of contents, each step going north or east.
bool forms_ribbon(std::span<const Cell> cells);

std::vector<Cell> translate(std::span<const Cell> cells, int drow, int dcol);

SkewShape transpose(const SkewShape& d);
SkewShape rotate180(const SkewShape& d);

/// Maximal disjoint-sum decomposition, southwest component first.
DiagramList components(const SkewShape& d);

SkewShape ribbon_to_shape(const Composition& alpha);
Composition shape_to_ribbon(const SkewShape& d);

/// Every connected canonical diagram with exactly n cells, once each. Ordered
/// by row-length composition, then by row overlaps.
DiagramList enumerate_connected(int n);

/// "5,4,3,3/3,1", "(5,4)/(1)", "3" or "1/".
SkewShape parse_compact(std::string_view text);
/// One row per line, 'X' marks a cell and '.' an empty position.
SkewShape parse_ascii(std::string_view text);

} // namespace skewlab
