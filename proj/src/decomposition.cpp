#include "skewlab/decomposition.hpp"

#include <algorithm>
#include <set>

#include "skewlab/error.hpp"

namespace skewlab {

Composition OutsideDecomposition::strip_segment(int p, int q) const {
    if (q < p) return {};
    if (p < min_content || q > max_content())
        fail(ErrorKind::InvalidArgument, "content interval outside the cutting strip");
    std::vector<int> parts;
    int current = 1;
    for (int c = p; c < q; ++c) {
        if (steps[static_cast<std::size_t>(c - min_content)] == Step::right) {
            ++current;
        } else {
            parts.push_back(current);
            current = 1;
        }
    }
    parts.push_back(current);
    return Composition(std::move(parts));
}

namespace {

std::vector<std::vector<Cell>> edge_components(const std::set<Cell>& cells) {
    std::vector<std::vector<Cell>> out;
    std::set<Cell> seen;
    for (const Cell& start : cells) {
        if (seen.count(start)) continue;
        std::vector<Cell> comp;
        std::vector<Cell> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            const Cell c = stack.back();
            stack.pop_back();
            comp.push_back(c);
            for (const Cell n : {c.shifted(1, 0), c.shifted(-1, 0), c.shifted(0, 1), c.shifted(0, -1)}) {
                if (cells.count(n) && !seen.count(n)) {
                    seen.insert(n);
                    stack.push_back(n);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

RibbonPiece make_piece(std::vector<Cell> cells, int depth) {
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.content() < b.content(); });
    RibbonPiece piece;
    piece.p = cells.front().content();
    piece.q = cells.back().content();
    piece.depth = depth;
    piece.cells = std::move(cells);
    return piece;
}

void peel(const std::set<Cell>& region, Side side, int depth, std::vector<RibbonPiece>& out) {
    const int d = side == Side::se ? 1 : -1;
    std::vector<Cell> border;
    std::set<Cell> rest;
    for (const Cell& c : region) {
        if (region.count(c.shifted(d, d)))
            rest.insert(c);
        else
            border.push_back(c);
    }
    if (!forms_ribbon(border)) fail(ErrorKind::InvalidDecomposition, "border of a region is not a ribbon");
    out.push_back(make_piece(std::move(border), depth));
    for (auto& comp : edge_components(rest)) peel(std::set<Cell>(comp.begin(), comp.end()), side, depth + 1, out);
}

} // namespace

OutsideDecomposition border_decomposition(const SkewShape& d, Side side) {
    OutsideDecomposition pi;
    pi.shape = d;
    if (d.empty()) return pi;
    if (!d.is_connected()) fail(ErrorKind::Disconnected, "border decomposition needs a connected diagram");
    const std::vector<Cell> all = d.cells();
    peel(std::set<Cell>(all.begin(), all.end()), side, 0, pi.ribbons);
    std::stable_sort(pi.ribbons.begin() + 1, pi.ribbons.end(), [](const RibbonPiece& a, const RibbonPiece& b) {
        return a.p != b.p ? a.p < b.p : a.depth < b.depth;
    });

    std::vector<std::vector<Cell>> pieces;
    std::vector<int> depths;
    for (RibbonPiece& r : pi.ribbons) {
        pieces.push_back(std::move(r.cells));
        depths.push_back(r.depth);
    }
    OutsideDecomposition out = make_outside_decomposition(d, std::move(pieces));
    for (std::size_t k = 0; k < depths.size(); ++k) out.ribbons[k].depth = depths[k];
    return out;
}

OutsideDecomposition make_outside_decomposition(const SkewShape& d, std::vector<std::vector<Cell>> pieces) {
    OutsideDecomposition pi;
    pi.shape = d;
    if (d.empty()) return pi;
    pi.min_content = d.min_content();
    const std::size_t n_steps = static_cast<std::size_t>(d.max_content() - d.min_content());
    // 0 unknown, 1 up, 2 right
    std::vector<int> seen(n_steps, 0);
    auto record = [&](int content, Step s) {
        if (content >= d.max_content()) return;
        int& slot = seen[static_cast<std::size_t>(content - pi.min_content)];
        const int code = s == Step::up ? 1 : 2;
        if (slot != 0 && slot != code)
            fail(ErrorKind::InvalidDecomposition, "cells on one diagonal go both up and right");
        slot = code;
    };
    for (auto& cells : pieces) {
        if (cells.empty()) fail(ErrorKind::InvalidDecomposition, "empty ribbon in decomposition");
        RibbonPiece piece = make_piece(std::move(cells), 0);
        const std::set<Cell> own(piece.cells.begin(), piece.cells.end());
        for (const Cell& x : piece.cells) {
            const bool last = x.content() == piece.q;
            const bool up = own.count(x.shifted(-1, 0)) || (last && !d.contains(x.shifted(-1, 0)));
            const bool right = own.count(x.shifted(0, 1)) || (last && !d.contains(x.shifted(0, 1)));
            if (up && !right) record(x.content(), Step::up);
            if (right && !up) record(x.content(), Step::right);
        }
        pi.ribbons.push_back(std::move(piece));
    }
    for (int code : seen) {
        if (code == 0) fail(ErrorKind::InvalidDecomposition, "a diagonal has no determined direction");
        pi.steps.push_back(code == 1 ? Step::up : Step::right);
    }
    validate(pi);
    return pi;
}

void validate(const OutsideDecomposition& pi) {
    const SkewShape& d = pi.shape;
    std::set<Cell> covered;
    std::size_t total = 0;
    for (const RibbonPiece& r : pi.ribbons) {
        if (!forms_ribbon(r.cells)) fail(ErrorKind::InvalidDecomposition, "a piece is not a ribbon");
        if (r.p < pi.min_content || r.q > pi.max_content())
            fail(ErrorKind::InvalidDecomposition, "a ribbon leaves the cutting strip");
        std::vector<Cell> cells = r.cells;
        std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.content() < b.content(); });
        if (cells.front().content() != r.p || cells.back().content() != r.q)
            fail(ErrorKind::InvalidDecomposition, "ribbon content interval is inconsistent");
        for (std::size_t k = 1; k < cells.size(); ++k) {
            const Step s = cells[k].row < cells[k - 1].row ? Step::up : Step::right;
            if (s != pi.steps[static_cast<std::size_t>(cells[k - 1].content() - pi.min_content)])
                fail(ErrorKind::InvalidDecomposition, "a ribbon does not follow the cutting strip");
        }
        const Cell sw = cells.front();
        const Cell ne = cells.back();
        if (d.contains(sw.shifted(0, -1)) && d.contains(sw.shifted(1, 0)))
            fail(ErrorKind::InvalidDecomposition, "a ribbon starts off the left and bottom perimeter");
        if (d.contains(ne.shifted(0, 1)) && d.contains(ne.shifted(-1, 0)))
            fail(ErrorKind::InvalidDecomposition, "a ribbon ends off the right and top perimeter");
        for (const Cell& c : cells) {
            if (!d.contains(c)) fail(ErrorKind::InvalidDecomposition, "a ribbon cell lies outside the diagram");
            covered.insert(c);
        }
        total += cells.size();
    }
    if (total != covered.size()) fail(ErrorKind::InvalidDecomposition, "ribbons overlap");
    if (static_cast<int>(total) != d.size()) fail(ErrorKind::InvalidDecomposition, "ribbons do not cover the diagram");
}

HashInterval hash_ribbon(const OutsideDecomposition& pi, std::size_t i, std::size_t j) {
    HashInterval h;
    h.p = pi.ribbons.at(j).p;
    h.q = pi.ribbons.at(i).q;
    if (h.p == h.q + 1)
        h.kind = HashInterval::Kind::empty;
    else if (h.p > h.q + 1)
        h.kind = HashInterval::Kind::undefined;
    else
        h.kind = HashInterval::Kind::interval;
    return h;
}

} // namespace skewlab
