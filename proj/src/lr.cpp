#include <map>
#include <mutex>
#include <unordered_map>

#include "skewlab/diagram_ops.hpp"
#include "skewlab/error.hpp"
#include "skewlab/symfunc.hpp"

namespace skewlab {

Partition Picture::shape() const {
    std::vector<int> parts;
    for (const auto& row : tableau) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

namespace {

// Rows of D are read top to bottom; the entries r of row r form a horizontal
// strip of T. The k-th cell from the right of row r goes to the k-th r from
// the left in T, which in a horizontal strip means lowest T-rows first.
class PictureWalker {
public:
    explicit PictureWalker(const SkewShape& d) : rows_(d.rows()) {
        trow_.resize(rows_.size());
        tcol_.resize(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            trow_[r].assign(static_cast<std::size_t>(rows_[r].size()), -1);
            tcol_[r].assign(static_cast<std::size_t>(rows_[r].size()), -1);
        }
    }

    void run() { next_row(0); }

    std::vector<Picture> found;

private:
    int above_row(int r, int c) const {
        if (r == 0) return -2;
        const RowSpan& up = rows_[static_cast<std::size_t>(r - 1)];
        if (c < up.first || c > up.last) return -2;
        return trow_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - up.first)];
    }

    void next_row(int r) {
        if (r == static_cast<int>(rows_.size())) {
            emit();
            return;
        }
        place(r, static_cast<int>(lam_.size()), rows_[static_cast<std::size_t>(r)].last);
    }

    void place(int r, int i, int c) {
        const RowSpan& span = rows_[static_cast<std::size_t>(r)];
        const int remaining = c - span.first + 1;
        if (i < 0) {
            if (remaining == 0) next_row(r + 1);
            return;
        }
        const bool fresh = i == static_cast<int>(lam_.size());
        const int current = fresh ? 0 : lam_[static_cast<std::size_t>(i)];
        const int cap = i == 0 ? remaining : lam_[static_cast<std::size_t>(i - 1)] - current;
        int limit = std::min(remaining, cap);
        // Only the rightmost cell of the group needs the column check: T-rows
        // of the row above weakly decrease towards the west.
        if (limit > 0) {
            const int up = above_row(r, c);
            if (up != -2 && i <= up) limit = 0;
        }
        place(r, i - 1, c);
        if (limit == 0) return;
        if (fresh) lam_.push_back(0);
        auto& tr = trow_[static_cast<std::size_t>(r)];
        auto& tc = tcol_[static_cast<std::size_t>(r)];
        for (int cnt = 1; cnt <= limit; ++cnt) {
            const int col = c - cnt + 1;
            const auto slot = static_cast<std::size_t>(col - span.first);
            tr[slot] = i;
            tc[slot] = lam_[static_cast<std::size_t>(i)];
            ++lam_[static_cast<std::size_t>(i)];
            place(r, i - 1, c - cnt);
        }
        lam_[static_cast<std::size_t>(i)] -= limit;
        if (fresh) lam_.pop_back();
    }

    void emit() {
        Picture pic;
        pic.tableau.resize(lam_.size());
        for (std::size_t i = 0; i < lam_.size(); ++i) pic.tableau[i].assign(static_cast<std::size_t>(lam_[i]), 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (int c = rows_[r].first; c <= rows_[r].last; ++c) {
                const auto slot = static_cast<std::size_t>(c - rows_[r].first);
                const auto ti = static_cast<std::size_t>(trow_[r][slot]);
                const auto tj = static_cast<std::size_t>(tcol_[r][slot]);
                pic.tableau[ti][tj] = static_cast<int>(r) + 1;
                pic.map.push_back({Cell{static_cast<int>(r), c}, Cell{static_cast<int>(ti), static_cast<int>(tj)}});
            }
        }
        found.push_back(std::move(pic));
    }

    std::vector<RowSpan> rows_;
    std::vector<int> lam_;
    std::vector<std::vector<int>> trow_;
    std::vector<std::vector<int>> tcol_;
};

// Counts pictures by shape row by row. After a row of D is placed, the rest
// depends only on the shape of T so far and on the T-rows written into the
// cells directly above the next row, so equal states are merged.
class PictureCounter {
public:
    explicit PictureCounter(const SkewShape& d) : rows_(d.rows()) {}

    SchurVector run() {
        // key: [len, lam..., above...]; above is aligned to the row being filled
        std::map<std::vector<int>, Integer> states;
        {
            std::vector<int> start{0};
            start.resize(1 + static_cast<std::size_t>(rows_.front().size()), -2);
            states.emplace(std::move(start), 1);
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::map<std::vector<int>, Integer> next;
            for (const auto& [key, mult] : states) {
                const auto len = static_cast<std::size_t>(key[0]);
                lam_.assign(key.begin() + 1, key.begin() + 1 + static_cast<std::ptrdiff_t>(len));
                above_.assign(key.begin() + 1 + static_cast<std::ptrdiff_t>(len), key.end());
                trow_.assign(above_.size(), -1);
                row_ = r;
                out_ = &next;
                mult_ = &mult;
                place(static_cast<int>(lam_.size()), rows_[r].last);
            }
            states = std::move(next);
        }
        SchurVector result;
        for (const auto& [key, mult] : states) {
            const auto len = static_cast<std::size_t>(key[0]);
            result.add(Partition(std::vector<int>(key.begin() + 1, key.begin() + 1 + static_cast<std::ptrdiff_t>(len))),
                       mult);
        }
        return result;
    }

private:
    void finish_row() {
        const RowSpan& span = rows_[row_];
        std::vector<int> key{static_cast<int>(lam_.size())};
        key.insert(key.end(), lam_.begin(), lam_.end());
        if (row_ + 1 < rows_.size()) {
            const RowSpan& below = rows_[row_ + 1];
            for (int c = below.first; c <= below.last; ++c)
                key.push_back(c >= span.first && c <= span.last ? trow_[static_cast<std::size_t>(c - span.first)] : -2);
        }
        (*out_)[std::move(key)] += *mult_;
    }

    // Same placement rule as the picture walker, for a single row.
    void place(int i, int c) {
        const RowSpan& span = rows_[row_];
        const int remaining = c - span.first + 1;
        if (i < 0) {
            if (remaining == 0) finish_row();
            return;
        }
        const bool fresh = i == static_cast<int>(lam_.size());
        const int current = fresh ? 0 : lam_[static_cast<std::size_t>(i)];
        const int cap = i == 0 ? remaining : lam_[static_cast<std::size_t>(i - 1)] - current;
        int limit = std::min(remaining, cap);
        if (limit > 0) {
            const int up = above_[static_cast<std::size_t>(c - span.first)];
            if (up != -2 && i <= up) limit = 0;
        }
        place(i - 1, c);
        if (limit == 0) return;
        if (fresh) lam_.push_back(0);
        for (int cnt = 1; cnt <= limit; ++cnt) {
            trow_[static_cast<std::size_t>(c - cnt + 1 - span.first)] = i;
            ++lam_[static_cast<std::size_t>(i)];
            place(i - 1, c - cnt);
        }
        lam_[static_cast<std::size_t>(i)] -= limit;
        if (fresh) lam_.pop_back();
    }

    std::vector<RowSpan> rows_;
    std::size_t row_ = 0;
    std::vector<int> lam_;
    std::vector<int> above_;
    std::vector<int> trow_;
    std::map<std::vector<int>, Integer>* out_ = nullptr;
    const Integer* mult_ = nullptr;
};

} // namespace

SchurVector schur_expand_lr(const SkewShape& d) {
    if (d.empty()) return SchurVector::basis(Partition{});
    return PictureCounter(d).run();
}

std::vector<Picture> pictures(const SkewShape& d) {
    if (d.empty()) return {};
    PictureWalker walker(d);
    walker.run();
    return std::move(walker.found);
}

SchurVector schur_product_of(std::span<const SkewShape> factors) {
    return schur_expand_lr(disjoint_sum(factors));
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept {
        PartitionHash h;
        return h(p.first) * 1000003u ^ h(p.second);
    }
};

std::mutex product_mutex;
std::unordered_map<std::pair<Partition, Partition>, SchurVector, PairHash> product_cache;

const SchurVector& basis_product(const Partition& a, const Partition& b) {
    std::pair<Partition, Partition> key = a < b ? std::pair{b, a} : std::pair{a, b};
    {
        std::lock_guard lock(product_mutex);
        auto it = product_cache.find(key);
        if (it != product_cache.end()) return it->second;
    }
    const SkewShape factors[] = {SkewShape::from_partitions(key.first), SkewShape::from_partitions(key.second)};
    SchurVector value = schur_product_of(factors);
    std::lock_guard lock(product_mutex);
    return product_cache.try_emplace(std::move(key), std::move(value)).first->second;
}

} // namespace

SchurVector schur_multiply(const SchurVector& a, const SchurVector& b) {
    SchurVector out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out += basis_product(ka, kb) * (ca * cb);
    return out;
}

Integer kostka_number(const SkewShape& d, const Partition& content) {
    if (content.weight() != d.size()) return 0;
    const std::vector<RowSpan> rows = d.rows();
    const std::size_t n_rows = rows.size();
    // filled[i]: first unfilled column of row i
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    auto rec = [&](auto&& self, std::size_t step, std::vector<int>& filled) -> Integer {
        if (step == content.length()) return 1;
        auto key = std::make_pair(step, filled);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const std::vector<int> before = filled;
        Integer total = 0;
        // Choose how many new cells each row receives, top row first.
        auto choose = [&](auto&& choose_self, std::size_t i, int left) -> void {
            if (i == n_rows) {
                if (left == 0) total += self(self, step + 1, filled);
                return;
            }
            int hi = rows[i].last + 1;
            if (i > 0) hi = std::min(hi, before[i - 1]);
            const int room = std::max(0, hi - before[i]);
            for (int add = 0; add <= std::min(room, left); ++add) {
                filled[i] = before[i] + add;
                choose_self(choose_self, i + 1, left - add);
            }
            filled[i] = before[i];
        };
        choose(choose, 0, content[step]);
        memo.emplace(std::move(key), total);
        return total;
    };
    std::vector<int> filled;
    for (const RowSpan& r : rows) filled.push_back(r.first);
    return rec(rec, 0, filled);
}

MonomialVector kostka_expand(const SkewShape& d) {
    MonomialVector out;
    for (const Partition& mu : partitions_of(d.size())) out.add(mu, kostka_number(d, mu));
    return out;
}

MonomialVector to_monomial(const SchurVector& f) {
    MonomialVector out;
    for (const auto& [lam, c] : f.terms()) {
        const SkewShape straight = SkewShape::from_partitions(lam);
        for (const Partition& mu : partitions_of(lam.weight())) out.add(mu, c * kostka_number(straight, mu));
    }
    return out;
}

} // namespace skewlab
