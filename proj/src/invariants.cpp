#include "skewlab/invariants.hpp"

#include <algorithm>

#include "skewlab/error.hpp"
#include "skewlab/symfunc.hpp"

namespace skewlab {

namespace {

Partition sorted_nonzero(const std::vector<int>& comp) {
    std::vector<int> parts;
    for (int x : comp)
        if (x > 0) parts.push_back(x);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

} // namespace

std::vector<std::vector<int>> row_overlaps(std::span<const RowSpan> rows) {
    std::vector<std::vector<int>> out;
    for (std::size_t k = 1; k <= rows.size(); ++k) {
        std::vector<int> comp;
        for (std::size_t i = 0; i + k <= rows.size(); ++i) {
            RowSpan common = rows[i];
            for (std::size_t j = i + 1; j < i + k; ++j) common = common.intersect(rows[j]);
            comp.push_back(common.size());
        }
        out.push_back(std::move(comp));
    }
    return out;
}

OverlapProfile overlaps(const SkewShape& d) {
    OverlapProfile p;
    const std::vector<RowSpan> rows = d.rows();
    p.row_comps = row_overlaps(rows);
    const std::vector<RowSpan> cols = transpose(d).rows();
    p.col_comps = row_overlaps(cols);
    for (const auto& c : p.row_comps) p.row_parts.push_back(sorted_nonzero(c));
    for (const auto& c : p.col_comps) p.col_parts.push_back(sorted_nonzero(c));

    const int n_cols = d.num_cols();
    p.rect_counts.assign(p.row_comps.size(), std::vector<int>(static_cast<std::size_t>(n_cols), 0));
    for (std::size_t k = 0; k < p.row_comps.size(); ++k)
        for (int width : p.row_comps[k])
            for (int l = 1; l <= width; ++l) p.rect_counts[k][static_cast<std::size_t>(l - 1)] += width - l + 1;
    return p;
}

int frobenius_rank(const SkewShape& d) {
    if (d.empty()) fail(ErrorKind::InvalidArgument, "rank of the empty diagram");
    std::vector<Partition> classes = partitions_of(d.size());
    std::stable_sort(classes.begin(), classes.end(),
                     [](const Partition& a, const Partition& b) { return a.length() < b.length(); });
    for (const Partition& nu : classes)
        if (character(d, nu) != 0) return static_cast<int>(nu.length());
    fail(ErrorKind::InvalidArgument, "no nonzero character value");
}

int frobenius_rank_by_specialization(const SkewShape& d) {
    if (d.empty()) fail(ErrorKind::InvalidArgument, "rank of the empty diagram");
    return principal_eval(schur_expand_lr(d)).t_valuation();
}

SchurVector fingerprint(const SkewShape& d) { return schur_expand_lr(d); }

std::uint64_t fingerprint_hash(const SchurVector& f) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : f.str("s")) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Partition> prefilter_key(const SkewShape& d) {
    std::vector<Partition> key;
    for (const auto& c : row_overlaps(d.rows())) key.push_back(sorted_nonzero(c));
    return key;
}

} // namespace skewlab
