#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "skewlab/symfunc.hpp"

namespace oracle {

namespace {

bool edge_connected(const std::vector<Cell>& cells) {
    if (cells.empty()) return true;
    std::set<std::pair<int, int>> all;
    for (const Cell& c : cells) all.insert({c.row, c.col});
    std::set<std::pair<int, int>> seen{*all.begin()};
    std::vector<std::pair<int, int>> stack{*all.begin()};
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            std::pair<int, int> nb{r + dr, c + dc};
            if (all.count(nb) && seen.insert(nb).second) stack.push_back(nb);
        }
    }
    return seen.size() == all.size();
}

void partitions_in_box(int rows, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == rows) {
        out.push_back(cur);
        return;
    }
    const int hi = cur.empty() ? max_part : cur.back();
    const int lo = cur.empty() ? max_part : 1;
    for (int v = hi; v >= lo; --v) {
        cur.push_back(v);
        partitions_in_box(rows, max_part, cur, out);
        cur.pop_back();
    }
}

bool is_ribbon_set(const std::vector<Cell>& cells) {
    std::map<int, Cell> by_content;
    for (const Cell& c : cells)
        if (!by_content.emplace(c.col - c.row, c).second) return false;
    int prev = 0;
    bool first = true;
    Cell last{};
    for (const auto& [content, cell] : by_content) {
        if (!first) {
            if (content != prev + 1) return false;
            const bool east = cell.row == last.row && cell.col == last.col + 1;
            const bool north = cell.row == last.row - 1 && cell.col == last.col;
            if (!east && !north) return false;
        }
        first = false;
        prev = content;
        last = cell;
    }
    return true;
}

}  // namespace

std::vector<SkewShape> connected_diagrams(int n) {
    std::set<SkewShape> found;
    for (int rows = 1; rows <= n; ++rows) {
        for (int cols = 1; rows + cols - 1 <= n; ++cols) {
            std::vector<std::vector<int>> outers;
            std::vector<int> cur;
            partitions_in_box(rows, cols, cur, outers);
            for (const auto& lam : outers) {
                int total = 0;
                for (int x : lam) total += x;
                if (total < n) continue;
                // inner partitions with each row keeping at least one cell
                std::vector<int> mu;
                std::function<void(int, int)> rec = [&](int i, int left) {
                    if (i == rows) {
                        if (left != 0) return;
                        const SkewShape d = SkewShape::from_partitions(Partition(lam), Partition(mu));
                        if (d.size() == n && edge_connected(d.cells())) found.insert(d);
                        return;
                    }
                    const int hi = std::min(lam[static_cast<std::size_t>(i)] - 1, i == 0 ? cols : mu.back());
                    for (int v = std::min(hi, left); v >= 0; --v) {
                        mu.push_back(v);
                        rec(i + 1, left - v);
                        mu.pop_back();
                    }
                };
                rec(0, total - n);
            }
        }
    }
    return {found.begin(), found.end()};
}

namespace {

template <class Visit>
void fill(const SkewShape& d, int t, Visit&& leaf, std::vector<int>* content) {
    const std::vector<Cell> cells = d.cells();  // row-major from the top
    std::map<std::pair<int, int>, int> value;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            leaf();
            return;
        }
        const Cell c = cells[idx];
        int lo = 1;
        if (auto it = value.find({c.row, c.col - 1}); it != value.end()) lo = std::max(lo, it->second);
        if (auto it = value.find({c.row - 1, c.col}); it != value.end()) lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= t; ++v) {
            if (content) {
                if ((*content)[static_cast<std::size_t>(v - 1)] == 0) continue;
                --(*content)[static_cast<std::size_t>(v - 1)];
            }
            value[{c.row, c.col}] = v;
            rec(idx + 1);
            value.erase({c.row, c.col});
            if (content) ++(*content)[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0);
}

}  // namespace

Integer count_ssyt(const SkewShape& d, int t) {
    Integer n = 0;
    fill(d, t, [&] { ++n; }, nullptr);
    return n;
}

Integer count_tableaux_with_content(const SkewShape& d, const std::vector<int>& content) {
    std::vector<int> left = content;
    Integer n = 0;
    fill(d, static_cast<int>(content.size()), [&] { ++n; }, &left);
    return n;
}

int min_ribbon_partition(const SkewShape& d) {
    std::function<int(std::set<Cell>)> best = [&](std::set<Cell> remaining) -> int {
        if (remaining.empty()) return 0;
        const Cell start = *remaining.begin();
        // every ribbon inside `remaining` containing `start`, grown cell by cell
        std::set<std::vector<Cell>> ribbons;
        std::vector<std::vector<Cell>> frontier{{start}};
        while (!frontier.empty()) {
            std::vector<Cell> cur = frontier.back();
            frontier.pop_back();
            if (!ribbons.insert(cur).second) continue;
            for (const Cell& c : cur) {
                for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                    const Cell nb{c.row + dr, c.col + dc};
                    if (!remaining.count(nb) || std::find(cur.begin(), cur.end(), nb) != cur.end()) continue;
                    std::vector<Cell> next = cur;
                    next.push_back(nb);
                    std::sort(next.begin(), next.end());
                    if (is_ribbon_set(next) && !ribbons.count(next)) frontier.push_back(std::move(next));
                }
            }
        }
        int result = 1 << 20;
        for (const auto& r : ribbons) {
            std::set<Cell> rest = remaining;
            for (const Cell& c : r) rest.erase(c);
            result = std::min(result, 1 + best(rest));
        }
        return result;
    };
    const std::vector<Cell> cells = d.cells();
    return best(std::set<Cell>(cells.begin(), cells.end()));
}

int count_rectangles(const SkewShape& d, int k, int l) {
    int n = 0;
    for (const Cell& c : d.cells()) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = 0; j < l && ok; ++j) ok = d.contains(Cell{c.row + i, c.col + j});
        n += ok;
    }
    return n;
}

int shared_columns(const std::vector<Cell>& cells, int first_row, int k) {
    std::map<int, int> per_col;
    for (const Cell& c : cells)
        if (c.row >= first_row && c.row < first_row + k) ++per_col[c.col];
    int n = 0;
    for (const auto& [col, count] : per_col) n += count == k;
    return n;
}

skewlab::SchurVector schur_from_characters(const skewlab::CharacterVector& chi, int n) {
    using skewlab::SchurVector;
    SchurVector out;
    for (const Partition& lam : skewlab::partitions_of(n)) {
        // sum_nu chi(nu) chi^lam(nu) / z_nu, accumulated over the common
        // denominator n! since n!/z_nu is the class size.
        Integer factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        Integer total = 0;
        const SkewShape straight = SkewShape::from_partitions(lam);
        for (const auto& [nu, value] : chi.terms())
            total += value * skewlab::character(straight, nu) * (factorial / skewlab::centralizer_order(nu));
        out.add(lam, total / factorial);
    }
    return out;
}

}  // namespace oracle
