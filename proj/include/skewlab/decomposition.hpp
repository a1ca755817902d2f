#pragma once

#include <cstddef>
#include <vector>

#include "skewlab/shape.hpp"

namespace skewlab {

enum class Side { se, nw };

enum class Step { up, right };

/// A ribbon of an outside decomposition, kept in the coordinates of the
/// decomposed diagram.
struct RibbonPiece {
    int p = 0;  // least content
    int q = 0;  // greatest content
    int depth = 0;
    std::vector<Cell> cells;

    int size() const noexcept { return q - p + 1; }
};

/// Ribbons partitioning D plus the cutting strip: steps[c - min_content] is
/// the direction taken from content c to c + 1.
struct OutsideDecomposition {
    SkewShape shape;
    std::vector<RibbonPiece> ribbons;
    int min_content = 0;
    std::vector<Step> steps;

    int max_content() const noexcept { return min_content + static_cast<int>(steps.size()); }
    /// The segment of the cutting strip on contents [p, q] as a composition.
    Composition strip_segment(int p, int q) const;
    Composition strip() const { return strip_segment(min_content, max_content()); }
};

/// Outside decomposition from explicit ribbons (cells in D's canonical
/// coordinates), kept in the given order. The cutting strip follows from the
/// up/right rule. Throws InvalidDecomposition.
OutsideDecomposition make_outside_decomposition(const SkewShape& d, std::vector<std::vector<Cell>> pieces);

/// Southeast or northwest border-strip decomposition of a connected D.
/// The first ribbon is the cutting strip; the rest follow by least content,
/// then by depth. Throws Disconnected.
OutsideDecomposition border_decomposition(const SkewShape& d, Side side);

/// Throws InvalidDecomposition unless the ribbons partition D, every ribbon
/// follows the cutting strip, and each ribbon ends on the proper perimeter.
void validate(const OutsideDecomposition& pi);

struct HashInterval {
    enum class Kind { interval, empty, undefined };
    Kind kind = Kind::undefined;
    int p = 0;
    int q = 0;
};

/// theta_i # theta_j, the cutting-strip segment [p(theta_j), q(theta_i)].
HashInterval hash_ribbon(const OutsideDecomposition& pi, std::size_t i, std::size_t j);

} // namespace skewlab
