#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "skewlab/integer.hpp"

namespace skewlab {

/// Weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped; the empty partition is the partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept;

    // Part i (0-based), zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool contains(const Partition& inner) const noexcept;

    // Partial-sum comparison; both partitions must have equal weight.
    bool dominated_by(const Partition& other) const noexcept;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Ordered sequence of positive integers; as a ribbon, row sizes read from the
/// bottom row upward.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept;
    int operator[](std::size_t i) const noexcept { return parts_[i]; }
    int back() const noexcept { return parts_.back(); }

    Composition reversed() const;
    Partition sorted() const;

    // Partial sums {a1, a1+a2, ...} excluding the total: a subset of [n-1].
    std::vector<int> partial_sums() const;
    static Composition from_partial_sums(int n, std::span<const int> subset);

    // a.b and a (.) b on compositions.
    Composition concat(const Composition& other) const;
    Composition near_concat(const Composition& other) const;

    std::string str() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

// All compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

// z_lambda = prod_i i^{m_i} m_i!, the centralizer order.
Integer centralizer_order(const Partition& p);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace skewlab
