#include "skewlab/staircase.hpp"

#include <algorithm>
#include <set>

#include "skewlab/diagram_ops.hpp"
#include "skewlab/error.hpp"

namespace skewlab {

Composition m_intersect(const Composition& alpha, const Composition& beta, int m) {
    const int la = static_cast<int>(alpha.length());
    const int lb = static_cast<int>(beta.length());
    if (m < 1 || la == 0 || lb == 0)
        fail(ErrorKind::IntersectionUndefined, "m-intersection needs m >= 1 and nonempty ribbons");
    if (m == 1) return Composition{std::min(alpha.back(), beta[0])};
    if (la < m || lb < m)
        fail(ErrorKind::IntersectionUndefined, "ribbons have fewer than m rows for the m-intersection");
    auto a = [&](int i) { return alpha[static_cast<std::size_t>(i - 1)]; };  // 1-based
    auto b = [&](int i) { return beta[static_cast<std::size_t>(i - 1)]; };
    bool ok = b(1) <= a(la - m + 1) && a(la) <= b(m);
    for (int i = 2; ok && i <= m - 1; ++i) ok = b(i) == a(la - m + i);
    if (!ok)
        fail(ErrorKind::IntersectionUndefined,
             alpha.str() + " cap_" + std::to_string(m) + " " + beta.str() + " does not exist");
    std::vector<int> parts;
    for (int i = 1; i <= m - 1; ++i) parts.push_back(b(i));
    parts.push_back(a(la));
    return Composition(std::move(parts));
}

Composition m_union(const Composition& alpha, const Composition& beta, int m) {
    const Composition omega = m_intersect(alpha, beta, m);
    if (omega == alpha) return beta;
    if (omega == beta) return alpha;
    return shape_to_ribbon(amalgamate(ribbon_to_shape(alpha), ribbon_to_shape(beta), omega));
}

Composition staircase(const Composition& alpha, int m, int k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "staircase height must be positive");
    const Composition omega = m_intersect(alpha, alpha, m);
    if (omega == alpha)
        fail(ErrorKind::TrivialIntersection, alpha.str() + " cap_" + std::to_string(m) + " itself is trivial");
    return shape_to_ribbon(amalgamate_power(ribbon_to_shape(alpha), omega, k));
}

Nesting::Nesting(std::string word) : word_(std::move(word)) {
    int open = 0;
    for (char ch : word_) {
        switch (ch) {
        case '.':
        case '|': break;
        case '(': ++open; break;
        case ')':
            if (--open < 0) fail(ErrorKind::InvalidNesting, "unbalanced ')' in nesting " + word_);
            break;
        default: fail(ErrorKind::InvalidNesting, std::string("bad nesting letter '") + ch + "'");
        }
    }
    if (open != 0) fail(ErrorKind::InvalidNesting, "unbalanced '(' in nesting " + word_);
}

Nesting Nesting::reversed() const {
    std::string w(word_.rbegin(), word_.rend());
    for (char& ch : w) {
        if (ch == '(')
            ch = ')';
        else if (ch == ')')
            ch = '(';
    }
    return Nesting(std::move(w));
}

std::vector<Nesting::Pair> Nesting::pairs() const {
    std::vector<Pair> out;
    std::vector<int> stack;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        if (word_[i] == '(') {
            stack.push_back(pos);
        } else if (word_[i] == ')') {
            out.push_back({stack.back(), pos, static_cast<int>(stack.size())});
            stack.pop_back();
        }
    }
    std::sort(out.begin(), out.end(), [](const Pair& a, const Pair& b) { return a.open < b.open; });
    return out;
}

std::vector<Nesting::Slash> Nesting::slashes() const {
    std::vector<Slash> out;
    int open = 0;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (word_[i] == '(')
            ++open;
        else if (word_[i] == ')')
            --open;
        else if (word_[i] == '|')
            out.push_back({static_cast<int>(i) + 1, open + 1});
    }
    return out;
}

std::string Nesting::spaced() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ' ';
        out += word_[i];
    }
    return out;
}

namespace {

struct Geometry {
    SkewShape theta;
    int a = 0;   // |alpha|
    int w = 0;   // |omega|
    int s = 0;   // content step between consecutive copies
    int c0 = 0;  // least content of theta
};

Geometry geometry(const StaircasePresentation& p) {
    Geometry g;
    const Composition omega = m_intersect(p.alpha, p.alpha, p.m);
    g.theta = ribbon_to_shape(staircase(p.alpha, p.m, p.k));
    g.a = p.alpha.weight();
    g.w = omega.weight();
    g.s = g.a - g.w;
    g.c0 = g.theta.min_content();
    return g;
}

std::vector<std::vector<Cell>> pieces_of(const StaircasePresentation& p, const Geometry& g) {
    if (static_cast<int>(p.nesting.size()) != p.k - 1)
        fail(ErrorKind::InvalidNesting, "nesting length must be k - 1");
    if (p.m >= static_cast<int>(p.alpha.length()))
        fail(ErrorKind::InvalidNesting, "depth m must be below the number of rows of alpha");
    const std::vector<Cell> strip = g.theta.cells();
    const int dir = p.side == Side::se ? -1 : 1;
    auto segment = [&](int lo, int hi, int depth) {
        std::vector<Cell> out;
        for (const Cell& c : strip)
            if (c.content() >= lo && c.content() <= hi) out.push_back(c.shifted(dir * depth, dir * depth));
        return out;
    };
    std::vector<std::vector<Cell>> pieces{strip};
    for (const auto& pr : p.nesting.pairs())
        pieces.push_back(segment(g.c0 + pr.open * g.s, g.c0 + (pr.close - 1) * g.s + g.a - 1, pr.depth));
    for (const auto& sl : p.nesting.slashes())
        pieces.push_back(segment(g.c0 + sl.pos * g.s, g.c0 + (sl.pos - 1) * g.s + g.a - 1, sl.depth));
    return pieces;
}

} // namespace

SkewShape build_from_staircase(const StaircasePresentation& p) {
    Geometry g;
    try {
        g = geometry(p);
    } catch (const SkewError& e) {
        fail(ErrorKind::InvalidNesting, std::string("presentation has no staircase: ") + e.what());
    }
    const auto pieces = pieces_of(p, g);
    std::vector<Cell> cells;
    for (const auto& piece : pieces) cells.insert(cells.end(), piece.begin(), piece.end());
    if (!forms_skew_diagram(cells)) fail(ErrorKind::InvalidNesting, "nesting " + p.nesting.word() + " is not realizable");

    int min_row = cells.front().row;
    int min_col = cells.front().col;
    for (const Cell& c : cells) {
        min_row = std::min(min_row, c.row);
        min_col = std::min(min_col, c.col);
    }
    const SkewShape d = normalize(cells);

    // The border decomposition of the result must give back exactly these pieces.
    std::set<std::set<Cell>> expected;
    for (const auto& piece : pieces) {
        std::set<Cell> moved;
        for (const Cell& c : piece) moved.insert(c.shifted(-min_row, -min_col));
        expected.insert(std::move(moved));
    }
    std::set<std::set<Cell>> actual;
    for (const RibbonPiece& r : border_decomposition(d, p.side).ribbons)
        actual.insert(std::set<Cell>(r.cells.begin(), r.cells.end()));
    if (expected != actual)
        fail(ErrorKind::InvalidNesting, "nesting " + p.nesting.word() + " does not give a staircase decomposition");
    return d;
}

std::optional<StaircasePresentation> detect_staircase(const SkewShape& d, Side side) {
    if (d.empty() || !d.is_connected()) return std::nullopt;
    const OutsideDecomposition pi = border_decomposition(d, side);
    const RibbonPiece& theta = pi.ribbons.front();
    const Composition theta_comp = pi.strip();
    const int total = theta.size();
    const int c0 = theta.p;

    for (int a = 2; a <= total; ++a) {
        const Composition alpha = pi.strip_segment(c0, c0 + a - 1);
        const int rows = static_cast<int>(alpha.length());
        for (int m = 1; m < rows; ++m) {
            Composition omega;
            try {
                omega = m_intersect(alpha, alpha, m);
            } catch (const SkewError&) {
                continue;
            }
            if (omega == alpha) continue;
            const int w = omega.weight();
            const int s = a - w;
            if (s <= 0 || (total - w) % s != 0) continue;
            const int k = (total - w) / s;
            try {
                if (staircase(alpha, m, k) != theta_comp) continue;
            } catch (const SkewError&) {
                continue;
            }

            std::string word(static_cast<std::size_t>(k - 1), '.');
            bool ok = true;
            auto put = [&](int pos, char ch) {
                if (pos < 1 || pos > k - 1 || word[static_cast<std::size_t>(pos - 1)] != '.') {
                    ok = false;
                    return;
                }
                word[static_cast<std::size_t>(pos - 1)] = ch;
            };
            for (std::size_t r = 1; ok && r < pi.ribbons.size(); ++r) {
                const RibbonPiece& piece = pi.ribbons[r];
                const int lo = piece.p - c0;
                const int hi = piece.q - c0;
                if (shape_to_ribbon(normalize(piece.cells)) != pi.strip_segment(piece.p, piece.q)) {
                    ok = false;
                } else if (piece.size() == w && lo % s == 0 && hi == lo - s + a - 1) {
                    put(lo / s, '|');
                } else if (lo % s == 0 && (hi - a + 1) % s == 0 && (hi - a + 1) / s + 1 > lo / s) {
                    const int i = lo / s;
                    const int j = (hi - a + 1) / s + 1;
                    put(i, '(');
                    put(j, ')');
                } else {
                    ok = false;
                }
            }
            if (!ok) continue;
            try {
                StaircasePresentation pres{alpha, m, k, Nesting(word), side};
                if (build_from_staircase(pres) == d) return pres;
            } catch (const SkewError&) {
                continue;
            }
        }
    }
    return std::nullopt;
}

std::vector<StaircasePresentation> enumerate_presentations(int max_cells, Side side) {
    std::vector<StaircasePresentation> out;
    for (int size = 2; size <= max_cells; ++size) {
        for (const Composition& alpha : compositions_of(size)) {
            const int rows = static_cast<int>(alpha.length());
            for (int m = 1; m < rows; ++m) {
                Composition omega;
                try {
                    omega = m_intersect(alpha, alpha, m);
                } catch (const SkewError&) {
                    continue;
                }
                if (omega == alpha) continue;
                const int w = omega.weight();
                const int s = size - w;
                for (int k = 1; k * s + w <= max_cells; ++k) {
                    const int base = k * s + w;
                    // Letters are placed left to right; open pairs wait on a stack.
                    std::string word;
                    std::vector<int> open;
                    auto rec = [&](auto&& self, int pos, int used) -> void {
                        if (pos == k) {
                            if (!open.empty()) return;
                            StaircasePresentation p{alpha, m, k, Nesting(word), side};
                            try {
                                build_from_staircase(p);
                            } catch (const SkewError&) {
                                return;
                            }
                            out.push_back(std::move(p));
                            return;
                        }
                        word.push_back('.');
                        self(self, pos + 1, used);
                        word.back() = '|';
                        if (used + w <= max_cells) self(self, pos + 1, used + w);
                        word.back() = '(';
                        open.push_back(pos);
                        self(self, pos + 1, used);
                        open.pop_back();
                        if (!open.empty()) {
                            const int i = open.back();
                            const int cost = (pos - i - 1) * s + size;
                            if (used + cost <= max_cells) {
                                word.back() = ')';
                                open.pop_back();
                                self(self, pos + 1, used + cost);
                                open.push_back(i);
                            }
                        }
                        word.pop_back();
                    };
                    rec(rec, 1, base);
                }
            }
        }
    }
    return out;
}

StaircasePresentation transpose_presentation(const StaircasePresentation& p) {
    StaircasePresentation t;
    t.alpha = shape_to_ribbon(transpose(ribbon_to_shape(p.alpha)));
    t.m = m_intersect(p.alpha, p.alpha, p.m).weight() - (p.m - 1);
    t.k = p.k;
    t.nesting = p.nesting.reversed();
    t.side = p.side;
    return t;
}

} // namespace skewlab
