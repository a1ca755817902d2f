#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/decomposition.hpp"
#include "skewlab/shape.hpp"

namespace skewlab {

/// alpha cap_m beta. Throws IntersectionUndefined when no such ribbon exists.
Composition m_intersect(const Composition& alpha, const Composition& beta, int m);
/// alpha cup_m beta = alpha amalgamated with beta along alpha cap_m beta.
Composition m_union(const Composition& alpha, const Composition& beta, int m);

/// The staircase ribbon of height k and depth m generated by alpha. Throws
/// IntersectionUndefined or TrivialIntersection.
Composition staircase(const Composition& alpha, int m, int k);

/// Word over {'.', '(', ')', '|'} of length k - 1.
class Nesting {
public:
    Nesting() = default;
    explicit Nesting(std::string word);  // throws InvalidNesting

    const std::string& word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    Nesting reversed() const;

    // Positions are 1-based as in the letter numbering.
    struct Pair {
        int open;
        int close;
        int depth;  // 1 for outermost
    };
    struct Slash {
        int pos;
        int depth;
    };
    std::vector<Pair> pairs() const;
    std::vector<Slash> slashes() const;

    /// Spaced form such as "( ) . ( | )".
    std::string spaced() const;

    auto operator<=>(const Nesting&) const = default;

private:
    std::string word_;
};

struct StaircasePresentation {
    Composition alpha;
    int m = 1;
    int k = 1;
    Nesting nesting;
    Side side = Side::se;

    auto operator<=>(const StaircasePresentation&) const = default;
};

/// Lexicographically least (alpha, m) presenting D, or nothing.
std::optional<StaircasePresentation> detect_staircase(const SkewShape& d, Side side);

/// The diagram with the given ribbon staircase decomposition. Throws
/// InvalidNesting when the nesting cannot be realized.
SkewShape build_from_staircase(const StaircasePresentation& p);

/// Every valid presentation whose diagram has at most max_cells cells.
std::vector<StaircasePresentation> enumerate_presentations(int max_cells, Side side);

/// The presentation of the transposed diagram predicted by the conjugation law.
StaircasePresentation transpose_presentation(const StaircasePresentation& p);

} // namespace skewlab
