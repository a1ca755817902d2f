#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewlab/shape.hpp"

namespace skewlab {

enum class JoinMode { concat, near_concat, disjoint };

/// D2 placed north-east of D1: sharing a column (concat), sharing a row
/// (near_concat) or touching neither (disjoint).
SkewShape join(const SkewShape& d1, const SkewShape& d2, JoinMode mode);
inline SkewShape concat(const SkewShape& a, const SkewShape& b) { return join(a, b, JoinMode::concat); }
inline SkewShape near_concat(const SkewShape& a, const SkewShape& b) { return join(a, b, JoinMode::near_concat); }
inline SkewShape disjoint_sum(const SkewShape& a, const SkewShape& b) { return join(a, b, JoinMode::disjoint); }
SkewShape disjoint_sum(std::span<const SkewShape> parts);

/// alpha o D: one copy of D per cell of alpha, near-concatenated along rows
/// and concatenated between rows.
SkewShape compose_alpha_D(const Composition& alpha, const SkewShape& d);
/// D o beta: one copy of the ribbon beta per cell of D.
SkewShape compose_D_beta(const SkewShape& d, const Composition& beta);

enum class End { top, bottom };

/// Cells of D on its k north-easternmost (top) or south-westernmost (bottom)
/// diagonals, in D's canonical coordinates.
std::vector<Cell> diagonal_restriction(const SkewShape& d, End end, int k);

/// Every ribbon protruding from the given end of D, shortest first.
std::vector<Composition> protrusion(const SkewShape& d, End end);
bool protrudes(const SkewShape& d, const Composition& omega, End end);

/// D1 and D2 glued along the copy of omega at the top of D1 and the bottom of D2.
SkewShape amalgamate(const SkewShape& d1, const SkewShape& d2, const Composition& omega);
/// D amalgamated with itself r times (r >= 1).
SkewShape amalgamate_power(const SkewShape& d, const Composition& omega, int r);

enum class Projection { outer, inner };

/// The unique skew diagram among the outer and inner projections of D1 and
/// D2 along omega. Throws NotDefined when neither (or both) is skew.
SkewShape dot_omega(const SkewShape& d1, const SkewShape& d2, const Composition& omega);
/// As dot_omega, also reporting which projection was used.
SkewShape dot_omega(const SkewShape& d1, const SkewShape& d2, const Composition& omega, Projection& used);

SkewShape amalgamated_compose(const Composition& alpha, const SkewShape& d, const Composition& omega);

struct HypothesisReport {
    bool connected = false;
    bool protrudes_top = false;
    bool protrudes_bottom = false;
    bool dot_defined = false;
    bool separated = false;

    bool ok() const noexcept { return connected && protrudes_top && protrudes_bottom && dot_defined && separated; }
    std::string diagnostic() const;
};

HypothesisReport check_hypotheses(const SkewShape& d, const Composition& omega);

/// D with the top cell of every column removed. `rows` keeps one entry per
/// row of D below the first, empty rows included, in D's column coordinates.
struct HatDiagram {
    SkewShape shape;
    std::vector<RowSpan> rows;
};

HatDiagram hat(const SkewShape& d);

} // namespace skewlab
