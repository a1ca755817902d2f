#include <map>
#include <mutex>

#include "skewlab/error.hpp"
#include "skewlab/symfunc.hpp"

namespace skewlab {

namespace {

constexpr int permutation_limit = 8;

struct ToeplitzEntries {
    std::vector<std::vector<int>> sub;  // negative means a zero entry
    std::size_t n = 0;
};

ToeplitzEntries toeplitz(const Partition& outer, const Partition& inner) {
    ToeplitzEntries t;
    t.n = outer.length();
    t.sub.assign(t.n, std::vector<int>(t.n, -1));
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            t.sub[i][j] = outer[i] - inner[j] - static_cast<int>(i) + static_cast<int>(j);
    return t;
}

Partition sorted_key(std::vector<int> subs) {
    std::sort(subs.begin(), subs.end(), std::greater<>());
    return Partition(std::move(subs));
}

template <class Tag>
SparseVector<Tag> det_by_permutations(const ToeplitzEntries& t) {
    SparseVector<Tag> out;
    if (t.n == 0) return SparseVector<Tag>::basis(Partition{});
    std::vector<bool> used(t.n, false);
    std::vector<int> subs;
    auto rec = [&](auto&& self, std::size_t i, int sign) -> void {
        if (i == t.n) {
            out.add(sorted_key(subs), sign);
            return;
        }
        int later_used = 0;  // used columns to the right of j
        for (std::size_t j = t.n; j-- > 0;) {
            if (used[j]) {
                ++later_used;
                continue;
            }
            const int s = t.sub[i][j];
            if (s < 0) continue;
            used[j] = true;
            if (s > 0) subs.push_back(s);
            self(self, i + 1, (later_used % 2) ? -sign : sign);
            if (s > 0) subs.pop_back();
            used[j] = false;
        }
    };
    rec(rec, 0, 1);
    return out;
}

template <class Tag>
SparseVector<Tag> times_generator(const SparseVector<Tag>& f, int s, int sign) {
    SparseVector<Tag> out;
    for (const auto& [key, c] : f.terms()) {
        std::vector<int> subs = key.vec();
        if (s > 0) subs.push_back(s);
        out.add(sorted_key(std::move(subs)), sign < 0 ? Integer(-c) : c);
    }
    return out;
}

template <class Tag>
SparseVector<Tag> det_by_subsets(const ToeplitzEntries& t) {
    if (t.n == 0) return SparseVector<Tag>::basis(Partition{});
    if (t.n >= 31) fail(ErrorKind::InvalidArgument, "determinant too large for the subset recursion");
    std::map<unsigned, SparseVector<Tag>> layer{{0u, SparseVector<Tag>::basis(Partition{})}};
    for (std::size_t i = 0; i < t.n; ++i) {
        std::map<unsigned, SparseVector<Tag>> next;
        for (const auto& [mask, poly] : layer) {
            for (std::size_t j = 0; j < t.n; ++j) {
                if (mask & (1u << j)) continue;
                const int s = t.sub[i][j];
                if (s < 0) continue;
                const int inversions = std::popcount(mask >> (j + 1));
                next[mask | (1u << j)] += times_generator(poly, s, inversions % 2 ? -1 : 1);
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find((1u << t.n) - 1);
    return it == layer.end() ? SparseVector<Tag>{} : it->second;
}

} // namespace

HPolynomial jacobi_trudi_permutations(const SkewShape& d) {
    return det_by_permutations<HTag>(toeplitz(d.outer(), d.inner()));
}

HPolynomial jacobi_trudi_subsets(const SkewShape& d) { return det_by_subsets<HTag>(toeplitz(d.outer(), d.inner())); }

HPolynomial jacobi_trudi(const SkewShape& d) {
    return d.num_rows() <= permutation_limit ? jacobi_trudi_permutations(d) : jacobi_trudi_subsets(d);
}

EPolynomial dual_jacobi_trudi(const SkewShape& d) {
    const ToeplitzEntries t = toeplitz(d.outer().conjugate(), d.inner().conjugate());
    return t.n <= permutation_limit ? det_by_permutations<ETag>(t) : det_by_subsets<ETag>(t);
}

namespace {

std::mutex ribbon_mutex;
std::map<std::vector<Composition>, SchurVector> ribbon_products;

SchurVector ribbon_product(const std::vector<Composition>& key) {
    {
        std::lock_guard lock(ribbon_mutex);
        auto it = ribbon_products.find(key);
        if (it != ribbon_products.end()) return it->second;
    }
    std::vector<SkewShape> shapes;
    for (const Composition& c : key) shapes.push_back(ribbon_to_shape(c));
    SchurVector value = schur_product_of(shapes);
    std::lock_guard lock(ribbon_mutex);
    return ribbon_products.try_emplace(key, std::move(value)).first->second;
}

} // namespace

SchurVector hamel_goulden(const SkewShape& d, const OutsideDecomposition& pi) {
    if (pi.shape != d) fail(ErrorKind::InvalidDecomposition, "decomposition belongs to a different diagram");
    if (d.empty()) return SchurVector::basis(Partition{});
    validate(pi);
    const std::size_t m = pi.ribbons.size();

    struct Entry {
        bool zero = true;
        std::optional<Composition> ribbon;  // empty optional means s = 1
    };
    std::vector<std::vector<Entry>> matrix(m, std::vector<Entry>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const HashInterval h = hash_ribbon(pi, i, j);
            Entry& e = matrix[i][j];
            if (h.kind == HashInterval::Kind::undefined) continue;
            e.zero = false;
            if (h.kind == HashInterval::Kind::interval) e.ribbon = pi.strip_segment(h.p, h.q);
        }
    }

    // Group permutation terms by their multiset of ribbons before expanding.
    std::map<std::vector<Composition>, Integer> grouped;
    std::vector<bool> used(m, false);
    std::vector<Composition> factors;
    auto rec = [&](auto&& self, std::size_t i, int sign) -> void {
        if (i == m) {
            std::vector<Composition> key = factors;
            std::sort(key.begin(), key.end());
            grouped[key] += sign;
            return;
        }
        int later_used = 0;
        for (std::size_t j = m; j-- > 0;) {
            if (used[j]) {
                ++later_used;
                continue;
            }
            const Entry& e = matrix[i][j];
            if (e.zero) continue;
            used[j] = true;
            if (e.ribbon) factors.push_back(*e.ribbon);
            self(self, i + 1, later_used % 2 ? -sign : sign);
            if (e.ribbon) factors.pop_back();
            used[j] = false;
        }
    };
    rec(rec, 0, 1);

    SchurVector out;
    for (const auto& [key, coeff] : grouped)
        if (coeff != 0) out += ribbon_product(key) * coeff;
    return out;
}

SchurVector schur_expand_hg(const SkewShape& d, Side side) {
    SchurVector out = SchurVector::basis(Partition{});
    for (const SkewShape& part : components(d)) out = schur_multiply(out, hamel_goulden(part, border_decomposition(part, side)));
    return out;
}

} // namespace skewlab
