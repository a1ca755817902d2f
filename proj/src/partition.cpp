#include "skewlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewlab/error.hpp"

namespace skewlab {

namespace {

std::string join_parts(std::span<const int> parts) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    out << ')';
    return out.str();
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            fail(ErrorKind::InvalidArgument, "partition parts must be positive: " + join_parts(parts_));
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing: " + join_parts(parts_));
    }
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::dominated_by(const Partition& other) const noexcept {
    int mine = 0;
    int theirs = 0;
    const std::size_t n = std::max(length(), other.length());
    for (std::size_t i = 0; i < n; ++i) {
        mine += (*this)[i];
        theirs += other[i];
        if (mine > theirs) return false;
    }
    return true;
}

std::string Partition::str() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int part : parts_)
        if (part <= 0) fail(ErrorKind::InvalidArgument, "composition parts must be positive: " + join_parts(parts_));
}

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::reversed() const {
    std::vector<int> rev(parts_.rbegin(), parts_.rend());
    return Composition(std::move(rev));
}

Partition Composition::sorted() const {
    std::vector<int> s = parts_;
    std::sort(s.begin(), s.end(), std::greater<>());
    return Partition(std::move(s));
}

std::vector<int> Composition::partial_sums() const {
    std::vector<int> sums;
    int total = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        total += parts_[i];
        sums.push_back(total);
    }
    return sums;
}

Composition Composition::from_partial_sums(int n, std::span<const int> subset) {
    std::vector<int> parts;
    int prev = 0;
    for (int s : subset) {
        if (s <= prev || s >= n) fail(ErrorKind::InvalidArgument, "partial sums must increase within [1, n-1]");
        parts.push_back(s - prev);
        prev = s;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> out = parts_;
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(out));
}

Composition Composition::near_concat(const Composition& other) const {
    if (parts_.empty()) return other;
    if (other.parts_.empty()) return *this;
    std::vector<int> out = parts_;
    out.back() += other.parts_.front();
    out.insert(out.end(), other.parts_.begin() + 1, other.parts_.end());
    return Composition(std::move(out));
}

std::string Composition::str() const { return join_parts(parts_); }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> current;
    // Parts chosen in decreasing order yields reverse lexicographic output.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n <= 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

Integer centralizer_order(const Partition& p) {
    Integer z = 1;
    std::size_t i = 0;
    const auto parts = p.parts();
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int mult = static_cast<int>(j - i);
        for (int k = 1; k <= mult; ++k) z *= k;
        for (int k = 0; k < mult; ++k) z *= parts[i];
        i = j;
    }
    return z;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int part : p.parts()) h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ULL;
    return h;
}

} // namespace skewlab
