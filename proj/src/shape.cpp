#include "skewlab/shape.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "skewlab/error.hpp"

namespace skewlab {

RowSpan RowSpan::intersect(const RowSpan& other) const noexcept {
    return {std::max(first, other.first), std::min(last, other.last)};
}

SkewShape SkewShape::from_partitions(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner))
        fail(ErrorKind::NotSkew, "inner partition " + inner.str() + " is not contained in " + outer.str());
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < outer.length(); ++i)
        for (int j = inner[i]; j < outer[i]; ++j) cells.push_back({static_cast<int>(i), j});
    return normalize(cells);
}

SkewShape SkewShape::from_canonical_rows(std::span<const RowSpan> rows) {
    std::vector<int> outer;
    std::vector<int> inner;
    outer.reserve(rows.size());
    inner.reserve(rows.size());
    for (const RowSpan& r : rows) {
        outer.push_back(r.last + 1);
        inner.push_back(r.first);
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

int SkewShape::num_diagonals() const noexcept { return empty() ? 0 : max_content() - min_content() + 1; }

int SkewShape::min_content() const noexcept {
    // The southwest end of the bottom row has the least content.
    if (empty()) return 0;
    return row(num_rows() - 1).first - (num_rows() - 1);
}

int SkewShape::max_content() const noexcept {
    if (empty()) return 0;
    return outer_[0] - 1;
}

std::vector<RowSpan> SkewShape::rows() const {
    std::vector<RowSpan> out;
    out.reserve(outer_.length());
    for (int i = 0; i < num_rows(); ++i) out.push_back(row(i));
    return out;
}

std::vector<int> SkewShape::row_lengths() const {
    std::vector<int> out;
    for (int i = 0; i < num_rows(); ++i) out.push_back(row(i).size());
    return out;
}

std::vector<int> SkewShape::col_lengths() const {
    std::vector<int> out(static_cast<std::size_t>(num_cols()), 0);
    for (int i = 0; i < num_rows(); ++i) {
        const RowSpan r = row(i);
        for (int j = r.first; j <= r.last; ++j) ++out[static_cast<std::size_t>(j)];
    }
    return out;
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < num_rows(); ++i) {
        const RowSpan r = row(i);
        for (int j = r.first; j <= r.last; ++j) out.push_back({i, j});
    }
    return out;
}

bool SkewShape::contains(Cell c) const noexcept {
    if (c.row < 0 || c.row >= num_rows()) return false;
    const RowSpan r = row(c.row);
    return c.col >= r.first && c.col <= r.last;
}

bool SkewShape::is_connected() const noexcept {
    for (int i = 0; i + 1 < num_rows(); ++i)
        if (row(i + 1).last < row(i).first) return false;
    return !empty();
}

bool SkewShape::is_ribbon() const noexcept {
    for (int i = 0; i + 1 < num_rows(); ++i)
        if (row(i + 1).last != row(i).first) return false;
    return !empty();
}

std::string SkewShape::compact() const {
    std::ostringstream out;
    auto list = [&out](std::span<const int> parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out << ',';
            out << parts[i];
        }
    };
    list(outer_.parts());
    if (!inner_.empty()) {
        out << '/';
        list(inner_.parts());
    }
    return out.str();
}

std::string SkewShape::ascii() const {
    std::string out;
    for (int i = 0; i < num_rows(); ++i) {
        const RowSpan r = row(i);
        for (int j = 0; j < num_cols(); ++j) out += (j >= r.first && j <= r.last) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

std::size_t SkewShapeHash::operator()(const SkewShape& d) const noexcept {
    PartitionHash h;
    return h(d.outer()) * 31u + h(d.inner());
}

namespace {

// Per-row spans of a cell set keyed by row; false when some row has a gap
// or a cell repeats.
bool collect_rows(std::span<const Cell> cells, std::map<int, RowSpan>& rows) {
    std::map<int, std::vector<int>> cols;
    for (const Cell& c : cells) cols[c.row].push_back(c.col);
    for (auto& [r, cs] : cols) {
        std::sort(cs.begin(), cs.end());
        for (std::size_t k = 1; k < cs.size(); ++k)
            if (cs[k] != cs[k - 1] + 1) return false;
        rows[r] = {cs.front(), cs.back()};
    }
    return true;
}

bool spans_are_skew(const std::vector<RowSpan>& spans) {
    for (std::size_t i = 0; i + 1 < spans.size(); ++i)
        if (spans[i].first < spans[i + 1].first || spans[i].last < spans[i + 1].last) return false;
    return true;
}

} // namespace

SkewShape normalize(std::span<const Cell> cells) {
    if (cells.empty()) return {};
    std::set<int> row_set;
    std::set<int> col_set;
    for (const Cell& c : cells) {
        row_set.insert(c.row);
        col_set.insert(c.col);
    }
    std::map<int, int> row_rank;
    std::map<int, int> col_rank;
    for (int r : row_set) row_rank.emplace(r, static_cast<int>(row_rank.size()));
    for (int c : col_set) col_rank.emplace(c, static_cast<int>(col_rank.size()));

    std::vector<Cell> packed;
    packed.reserve(cells.size());
    for (const Cell& c : cells) packed.push_back({row_rank[c.row], col_rank[c.col]});
    std::sort(packed.begin(), packed.end());
    if (std::adjacent_find(packed.begin(), packed.end()) != packed.end())
        fail(ErrorKind::NotSkew, "cell set contains a repeated cell");

    std::map<int, RowSpan> by_row;
    if (!collect_rows(packed, by_row)) fail(ErrorKind::NotSkew, "some row of the cell set is not contiguous");
    std::vector<RowSpan> spans;
    for (const auto& [r, s] : by_row) spans.push_back(s);
    if (!spans_are_skew(spans)) fail(ErrorKind::NotSkew, "row ends of the cell set do not form a skew diagram");
    return SkewShape::from_canonical_rows(spans);
}

bool forms_skew_diagram(std::span<const Cell> cells) {
    if (cells.empty()) return true;
    std::vector<Cell> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::map<int, RowSpan> by_row;
    if (!collect_rows(sorted, by_row)) return false;
    const int top = by_row.begin()->first;
    const int bottom = by_row.rbegin()->first;
    if (bottom - top + 1 != static_cast<int>(by_row.size())) return false;
    std::vector<RowSpan> spans;
    for (const auto& [r, s] : by_row) spans.push_back(s);
    return spans_are_skew(spans);
}

bool forms_ribbon(std::span<const Cell> cells) {
    if (cells.empty()) return false;
    std::vector<Cell> by_content(cells.begin(), cells.end());
    std::sort(by_content.begin(), by_content.end(),
              [](const Cell& a, const Cell& b) { return a.content() < b.content(); });
    for (std::size_t k = 1; k < by_content.size(); ++k) {
        const Cell& prev = by_content[k - 1];
        const Cell& cur = by_content[k];
        const bool north = cur.row == prev.row - 1 && cur.col == prev.col;
        const bool east = cur.row == prev.row && cur.col == prev.col + 1;
        if (!north && !east) return false;
    }
    return true;
}

std::vector<Cell> translate(std::span<const Cell> cells, int drow, int dcol) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const Cell& c : cells) out.push_back(c.shifted(drow, dcol));
    return out;
}

SkewShape transpose(const SkewShape& d) {
    std::vector<Cell> cells;
    for (const Cell& c : d.cells()) cells.push_back({c.col, c.row});
    return normalize(cells);
}

SkewShape rotate180(const SkewShape& d) {
    std::vector<Cell> cells;
    for (const Cell& c : d.cells()) cells.push_back({-c.row, -c.col});
    return normalize(cells);
}

DiagramList components(const SkewShape& d) {
    DiagramList out;
    if (d.empty()) return out;
    std::vector<Cell> current;
    auto flush = [&] {
        out.push_back(normalize(current));
        current.clear();
    };
    // Scan from the bottom row up so the southwest component comes first.
    for (int i = d.num_rows() - 1; i >= 0; --i) {
        if (i < d.num_rows() - 1 && d.row(i).intersect(d.row(i + 1)).empty()) flush();
        const RowSpan r = d.row(i);
        for (int j = r.first; j <= r.last; ++j) current.push_back({i, j});
    }
    flush();
    return out;
}

SkewShape ribbon_to_shape(const Composition& alpha) {
    if (alpha.empty()) return {};
    std::vector<RowSpan> bottom_up;
    int start = 0;
    for (int part : alpha.parts()) {
        bottom_up.push_back({start, start + part - 1});
        start += part - 1;
    }
    std::reverse(bottom_up.begin(), bottom_up.end());
    return SkewShape::from_canonical_rows(bottom_up);
}

Composition shape_to_ribbon(const SkewShape& d) {
    if (!d.is_connected()) fail(ErrorKind::NotRibbon, "diagram " + d.compact() + " is not connected");
    if (!d.is_ribbon()) fail(ErrorKind::NotRibbon, "diagram " + d.compact() + " contains a 2x2 block");
    std::vector<int> parts = d.row_lengths();
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts));
}

DiagramList enumerate_connected(int n) {
    DiagramList out;
    if (n <= 0) return out;
    for (const Composition& rows : compositions_of(n)) {
        const std::size_t len = rows.length();
        std::vector<int> overlap(len > 0 ? len - 1 : 0, 1);
        std::vector<RowSpan> spans(len);
        while (true) {
            // Place rows from the bottom: row i sits on row i+1 sharing overlap[i] columns.
            spans[len - 1] = {0, rows[len - 1] - 1};
            for (std::size_t k = len - 1; k-- > 0;) {
                const int first = spans[k + 1].last - overlap[k] + 1;
                spans[k] = {first, first + rows[k] - 1};
            }
            out.push_back(SkewShape::from_canonical_rows(spans));

            std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(overlap.size()) - 1;
            while (pos >= 0) {
                const auto k = static_cast<std::size_t>(pos);
                if (overlap[k] < std::min(rows[k], rows[k + 1])) break;
                overlap[k] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++overlap[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto push = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "not an integer: '" + token + "'");
        }
        if (used != token.size()) fail(ErrorKind::ParseError, "not an integer: '" + token + "'");
        out.push_back(value);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            push();
        } else if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
            continue;
        } else {
            token += ch;
        }
    }
    push();
    return out;
}

} // namespace

SkewShape parse_compact(std::string_view text) {
    const std::size_t slash = text.find('/');
    const std::string_view outer_text = text.substr(0, slash);
    const std::string_view inner_text = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (inner_text.find('/') != std::string_view::npos) fail(ErrorKind::ParseError, "more than one '/' in diagram");
    Partition outer;
    Partition inner;
    try {
        outer = Partition(parse_int_list(outer_text));
        inner = Partition(parse_int_list(inner_text));
    } catch (const SkewError& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        fail(ErrorKind::ParseError, e.what());
    }
    return SkewShape::from_partitions(outer, inner);
}

SkewShape parse_ascii(std::string_view text) {
    std::vector<Cell> cells;
    int row = 0;
    bool seen_row = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank || seen_row) {
            int last = -2;
            for (std::size_t j = 0; j < line.size(); ++j) {
                const char ch = line[j];
                if (ch == 'X' || ch == 'x' || ch == '#') {
                    const int col = static_cast<int>(j);
                    if (last >= 0 && col != last + 1)
                        fail(ErrorKind::NotSkew, "row " + std::to_string(row) + " of the ASCII diagram has a gap");
                    cells.push_back({row, col});
                    last = col;
                } else if (ch != '.' && ch != ' ' && ch != '\t') {
                    fail(ErrorKind::ParseError, std::string("unexpected character '") + ch + "' in ASCII diagram");
                }
            }
            seen_row = true;
            ++row;
        }
        start = end + 1;
    }
    return normalize(cells);
}

} // namespace skewlab
