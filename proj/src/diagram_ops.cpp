#include "skewlab/diagram_ops.hpp"

#include <algorithm>
#include <set>

#include "skewlab/error.hpp"

namespace skewlab {

SkewShape join(const SkewShape& d1, const SkewShape& d2, JoinMode mode) {
    if (d1.empty()) return d2;
    if (d2.empty()) return d1;
    const int c1 = d1.num_cols();
    const int shift = mode == JoinMode::concat ? c1 - 1 : c1;
    std::vector<RowSpan> rows;
    rows.reserve(static_cast<std::size_t>(d1.num_rows() + d2.num_rows()));
    for (const RowSpan& r : d2.rows()) rows.push_back({r.first + shift, r.last + shift});
    auto lower = d1.rows();
    if (mode == JoinMode::near_concat) {
        // D2's bottom row continues D1's top row.
        rows.back().first = lower.front().first;
        lower.erase(lower.begin());
    }
    rows.insert(rows.end(), lower.begin(), lower.end());
    return SkewShape::from_canonical_rows(rows);
}

SkewShape disjoint_sum(std::span<const SkewShape> parts) {
    SkewShape out;
    for (const SkewShape& p : parts) out = disjoint_sum(out, p);
    return out;
}

SkewShape compose_alpha_D(const Composition& alpha, const SkewShape& d) {
    if (alpha.empty() || d.empty()) return {};
    SkewShape out;
    bool first = true;
    for (int part : alpha.parts()) {
        for (int c = 0; c < part; ++c) {
            if (first) {
                out = d;
                first = false;
            } else {
                out = join(out, d, c == 0 ? JoinMode::concat : JoinMode::near_concat);
            }
        }
    }
    return out;
}

SkewShape compose_D_beta(const SkewShape& d, const Composition& beta) {
    if (d.empty() || beta.empty()) return {};
    const SkewShape b = ribbon_to_shape(beta);
    const int h = static_cast<int>(beta.length());
    const int w = beta.weight() - h + 1;
    const std::vector<Cell> unit = b.cells();
    std::vector<Cell> cells;
    cells.reserve(unit.size() * static_cast<std::size_t>(d.size()));
    for (const Cell& x : d.cells()) {
        const int drow = -x.col * (h - 1) + x.row * h;
        const int dcol = x.col * w - x.row * (w - 1);
        for (const Cell& c : unit) cells.push_back(c.shifted(drow, dcol));
    }
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::NotSkew, "copies of the ribbon overlap in D o beta");
    return normalize(cells);
}

std::vector<Cell> diagonal_restriction(const SkewShape& d, End end, int k) {
    std::vector<Cell> out;
    if (d.empty() || k <= 0) return out;
    const int top_cut = d.max_content() - k;
    const int bottom_cut = d.min_content() + k;
    for (const Cell& c : d.cells()) {
        const int content = c.content();
        if (end == End::top ? content > top_cut : content < bottom_cut) out.push_back(c);
    }
    return out;
}

namespace {

std::optional<Composition> restriction_ribbon(const SkewShape& d, End end, int k) {
    const std::vector<Cell> cells = diagonal_restriction(d, end, k);
    if (!forms_ribbon(cells)) return std::nullopt;
    return shape_to_ribbon(normalize(cells));
}

// Cell of least content among those on the given end's |omega| diagonals.
Cell anchor(const SkewShape& d, End end, int k) {
    const std::vector<Cell> cells = diagonal_restriction(d, end, k);
    return *std::min_element(cells.begin(), cells.end(),
                             [](const Cell& a, const Cell& b) { return a.content() < b.content(); });
}

void require_protrusions(const SkewShape& d1, const SkewShape& d2, const Composition& omega) {
    if (omega.empty()) fail(ErrorKind::ProtrusionFailure, "omega must be nonempty");
    if (!protrudes(d1, omega, End::top))
        fail(ErrorKind::ProtrusionFailure, omega.str() + " does not protrude from the top of " + d1.compact());
    if (!protrudes(d2, omega, End::bottom))
        fail(ErrorKind::ProtrusionFailure, omega.str() + " does not protrude from the bottom of " + d2.compact());
}

// Cells of D1 together with D2 translated so that D2's bottom copy of omega
// lands on D1's top copy moved by (delta, delta).
std::vector<Cell> glue(const SkewShape& d1, const SkewShape& d2, int k, int delta) {
    const Cell a = anchor(d1, End::top, k);
    const Cell b = anchor(d2, End::bottom, k);
    std::vector<Cell> cells = d1.cells();
    for (const Cell& c : d2.cells()) cells.push_back(c.shifted(a.row - b.row + delta, a.col - b.col + delta));
    return cells;
}

} // namespace

std::vector<Composition> protrusion(const SkewShape& d, End end) {
    std::vector<Composition> out;
    const int diagonals = d.num_diagonals();
    std::optional<Composition> current = diagonals > 0 ? restriction_ribbon(d, end, 1) : std::nullopt;
    for (int k = 1; k <= diagonals && current; ++k) {
        std::optional<Composition> next = k < diagonals ? restriction_ribbon(d, end, k + 1) : current;
        if (!next) break;
        out.push_back(*current);
        current = std::move(next);
    }
    return out;
}

bool protrudes(const SkewShape& d, const Composition& omega, End end) {
    const int k = omega.weight();
    if (k <= 0 || k > d.num_diagonals()) return false;
    const auto restricted = restriction_ribbon(d, end, k);
    if (!restricted || *restricted != omega) return false;
    if (k == d.num_diagonals()) return true;
    return restriction_ribbon(d, end, k + 1).has_value();
}

SkewShape amalgamate(const SkewShape& d1, const SkewShape& d2, const Composition& omega) {
    require_protrusions(d1, d2, omega);
    const int k = omega.weight();
    if (k == d1.size() || k == d2.size())
        fail(ErrorKind::ProtrusionFailure, "omega " + omega.str() + " is all of one factor; amalgamation is trivial");
    std::vector<Cell> cells = glue(d1, d2, k, 0);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (static_cast<int>(cells.size()) != d1.size() + d2.size() - k)
        fail(ErrorKind::NotSkew, "amalgamation overlaps outside omega");
    if (!forms_skew_diagram(cells)) fail(ErrorKind::NotSkew, "amalgamation is not a skew diagram");
    return normalize(cells);
}

SkewShape amalgamate_power(const SkewShape& d, const Composition& omega, int r) {
    if (r < 1) fail(ErrorKind::InvalidArgument, "amalgamation power must be positive");
    SkewShape out = d;
    for (int i = 1; i < r; ++i) out = amalgamate(out, d, omega);
    return out;
}

SkewShape dot_omega(const SkewShape& d1, const SkewShape& d2, const Composition& omega, Projection& used) {
    require_protrusions(d1, d2, omega);
    const int k = omega.weight();
    std::optional<std::vector<Cell>> found;
    for (Projection proj : {Projection::outer, Projection::inner}) {
        std::vector<Cell> cells = glue(d1, d2, k, proj == Projection::outer ? 1 : -1);
        if (!forms_skew_diagram(cells)) continue;
        if (found)
            fail(ErrorKind::NotDefined, "both projections of " + d1.compact() + " and " + d2.compact() + " are skew");
        found = std::move(cells);
        used = proj;
    }
    if (!found)
        fail(ErrorKind::NotDefined, "no projection of " + d1.compact() + " and " + d2.compact() + " along " +
                                        omega.str() + " is a skew diagram");
    return normalize(*found);
}

SkewShape dot_omega(const SkewShape& d1, const SkewShape& d2, const Composition& omega) {
    Projection used{};
    return dot_omega(d1, d2, omega, used);
}

SkewShape amalgamated_compose(const Composition& alpha, const SkewShape& d, const Composition& omega) {
    if (alpha.empty()) return {};
    require_protrusions(d, d, omega);
    const int k = omega.weight();
    // Glue each piece onto the top copy of omega in the north-easternmost copy
    // of D placed so far, which need not protrude from the whole diagram.
    std::vector<Cell> cells;
    Cell top{};
    bool first = true;
    for (int part : alpha.parts()) {
        const SkewShape piece = amalgamate_power(d, omega, part);
        const Cell piece_top = anchor(piece, End::top, k);
        if (first) {
            cells = piece.cells();
            top = piece_top;
            first = false;
            continue;
        }
        const Cell bottom = anchor(piece, End::bottom, k);
        std::optional<std::pair<std::vector<Cell>, Cell>> found;
        for (int delta : {1, -1}) {
            const int drow = top.row - bottom.row + delta;
            const int dcol = top.col - bottom.col + delta;
            std::vector<Cell> next = cells;
            for (const Cell& c : piece.cells()) next.push_back(c.shifted(drow, dcol));
            std::vector<Cell> sorted = next;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            if (!forms_skew_diagram(next)) continue;
            if (found) fail(ErrorKind::NotDefined, "both projections are skew in " + alpha.str() + " o_omega D");
            found.emplace(std::move(next), piece_top.shifted(drow, dcol));
        }
        if (!found)
            fail(ErrorKind::NotDefined, "no projection along " + omega.str() + " is skew in " + alpha.str() + " o_omega " +
                                            d.compact());
        cells = std::move(found->first);
        top = found->second;
    }
    return normalize(cells);
}

std::string HypothesisReport::diagnostic() const {
    if (ok()) return "all hypotheses hold";
    std::string out;
    auto add = [&out](bool holds, const char* what) {
        if (holds) return;
        if (!out.empty()) out += "; ";
        out += what;
    };
    add(connected, "D is not connected");
    add(protrudes_top, "omega does not protrude from the top of D");
    add(protrudes_bottom, "omega does not protrude from the bottom of D");
    add(dot_defined, "D .omega D is not defined");
    add(separated, "the two copies of omega are not separated by a diagonal");
    return out;
}

HypothesisReport check_hypotheses(const SkewShape& d, const Composition& omega) {
    HypothesisReport r;
    r.connected = d.is_connected();
    r.protrudes_top = protrudes(d, omega, End::top);
    r.protrudes_bottom = protrudes(d, omega, End::bottom);
    if (r.protrudes_top && r.protrudes_bottom) {
        try {
            dot_omega(d, d, omega);
            r.dot_defined = true;
        } catch (const SkewError&) {
            r.dot_defined = false;
        }
    }
    r.separated = !omega.empty() && d.num_diagonals() >= 2 * omega.weight() + 1;
    return r;
}

HatDiagram hat(const SkewShape& d) {
    HatDiagram out;
    std::vector<Cell> cells;
    for (int i = 1; i < d.num_rows(); ++i) {
        const RowSpan span{d.row(i - 1).first, d.row(i).last};
        out.rows.push_back(span.empty() ? RowSpan{} : span);
        for (int j = span.first; j <= span.last; ++j) cells.push_back({i, j});
    }
    out.shape = normalize(cells);
    return out;
}

} // namespace skewlab
