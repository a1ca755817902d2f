#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "skewlab/integer.hpp"
#include "skewlab/partition.hpp"

namespace skewlab {

/// Sparse integer vector indexed by partitions, terms kept in lexicographically
/// descending order of the key; zero coefficients are never stored.
template <class Tag>
class SparseVector {
public:
    using Map = std::map<Partition, Integer, std::greater<Partition>>;

    SparseVector() = default;
    static SparseVector basis(const Partition& key, Integer coeff = 1) {
        SparseVector v;
        v.add(key, std::move(coeff));
        return v;
    }

    void add(const Partition& key, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Integer coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    const Map& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    SparseVector& operator+=(const SparseVector& other) {
        for (const auto& [k, c] : other.terms_) add(k, c);
        return *this;
    }
    SparseVector& operator-=(const SparseVector& other) {
        for (const auto& [k, c] : other.terms_) add(k, -c);
        return *this;
    }
    SparseVector& operator*=(const Integer& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= scalar;
        return *this;
    }
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(SparseVector a, const Integer& s) { return a *= s; }
    friend SparseVector operator*(const Integer& s, SparseVector a) { return a *= s; }
    SparseVector operator-() const { return SparseVector(*this) *= Integer(-1); }

    bool operator==(const SparseVector& other) const { return terms_ == other.terms_; }

    /// "s(3,1) + 2*s(2,2)" style rendering with the given basis letter.
    std::string str(const std::string& letter) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mag != 1) out += mag.str() + "*";
            out += letter + k.str();
            first = false;
        }
        return out;
    }

private:
    Map terms_;
};

struct SchurTag {};
struct HTag {};
struct ETag {};
struct MonomialTag {};
struct CharacterTag {};

using SchurVector = SparseVector<SchurTag>;
/// Polynomial in h_1, h_2, ...; a key lists the subscripts of one monomial.
using HPolynomial = SparseVector<HTag>;
/// Polynomial in e_1, e_2, ...
using EPolynomial = SparseVector<ETag>;
using MonomialVector = SparseVector<MonomialTag>;
/// chi^D(nu) indexed by nu.
using CharacterVector = SparseVector<CharacterTag>;

/// Monomial product on subscript multisets (h or e).
template <class Tag>
SparseVector<Tag> multiply_monomials(const SparseVector<Tag>& a, const SparseVector<Tag>& b) {
    SparseVector<Tag> out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<int> merged;
            merged.reserve(ka.length() + kb.length());
            std::merge(ka.parts().begin(), ka.parts().end(), kb.parts().begin(), kb.parts().end(),
                       std::back_inserter(merged), std::greater<>());
            out.add(Partition(std::move(merged)), ca * cb);
        }
    }
    return out;
}

} // namespace skewlab
