#include <map>
#include <mutex>
#include <sstream>

#include "skewlab/diagram_ops.hpp"
#include "skewlab/error.hpp"
#include "skewlab/symfunc.hpp"

namespace skewlab {

HPolynomial h_multiply(const HPolynomial& a, const HPolynomial& b) { return multiply_monomials(a, b); }

SchurVector omega(const SchurVector& f) {
    SchurVector out;
    for (const auto& [lam, c] : f.terms()) out.add(lam.conjugate(), c);
    return out;
}

const HPolynomial& e_in_h(int r) {
    if (r < 0) fail(ErrorKind::InvalidArgument, "negative subscript");
    static std::mutex mutex;
    static std::vector<HPolynomial> table{HPolynomial::basis(Partition{})};
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= r) {
        const int n = static_cast<int>(table.size());
        HPolynomial e;
        for (int i = 1; i <= n; ++i) {
            HPolynomial term = multiply_monomials(HPolynomial::basis(Partition{i}), table[static_cast<std::size_t>(n - i)]);
            if (i % 2 == 0) term *= Integer(-1);
            e += term;
        }
        table.push_back(std::move(e));
    }
    return table[static_cast<std::size_t>(r)];
}

namespace {

template <class Tag>
HPolynomial substitute_e(const SparseVector<Tag>& f) {
    HPolynomial out;
    for (const auto& [key, c] : f.terms()) {
        HPolynomial term = HPolynomial::basis(Partition{}, c);
        for (int r : key.parts()) term = multiply_monomials(term, e_in_h(r));
        out += term;
    }
    return out;
}

} // namespace

HPolynomial omega(const HPolynomial& f) { return substitute_e(f); }

HPolynomial e_to_h(const EPolynomial& f) { return substitute_e(f); }

SchurVector to_schur(const HPolynomial& f) {
    SchurVector out;
    for (const auto& [key, c] : f.terms()) {
        SchurVector term = SchurVector::basis(Partition{}, c);
        for (int r : key.parts()) term = schur_multiply(term, SchurVector::basis(Partition{r}));
        out += term;
    }
    return out;
}

HPolynomial to_h(const SchurVector& f) {
    HPolynomial out;
    for (const auto& [lam, c] : f.terms()) out += jacobi_trudi(SkewShape::from_partitions(lam)) * c;
    return out;
}

SchurVector phi_ell(const SchurVector& f, int ell) {
    if (ell < 0) fail(ErrorKind::InvalidArgument, "phi_ell needs ell >= 0");
    SchurVector out;
    for (const auto& [lam, c] : f.terms()) {
        if (static_cast<int>(lam.length()) > ell) continue;
        std::vector<int> parts(static_cast<std::size_t>(ell), 1);
        for (std::size_t i = 0; i < lam.length(); ++i) parts[i] += lam[i];
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

HPolynomial h_coeff(const HPolynomial& f, int r) {
    if (r <= 0) fail(ErrorKind::InvalidArgument, "h_coeff needs r >= 1");
    HPolynomial out;
    for (const auto& [key, c] : f.terms()) {
        const auto parts = key.parts();
        if (std::count(parts.begin(), parts.end(), r) != 1) continue;
        std::vector<int> rest;
        for (int p : parts)
            if (p != r) rest.push_back(p);
        out.add(Partition(std::move(rest)), c);
    }
    return out;
}

SchurVector hat_from_expansion(const SchurVector& s_d, int ell, int c) {
    if (ell < 1 || c < 1) fail(ErrorKind::InvalidArgument, "hat_from_expansion needs ell, c >= 1");
    const SchurVector out = to_schur(h_coeff(to_h(phi_ell(s_d, ell)), ell + c));
    return ell % 2 == 1 ? out : out * -1;
}

namespace {

SchurVector expand_monomials(const HPolynomial& f, const std::function<std::vector<SkewShape>(const Partition&)>& pieces) {
    SchurVector out;
    for (const auto& [key, c] : f.terms()) {
        const std::vector<SkewShape> factors = pieces(key);
        if (factors.empty())
            out.add(Partition{}, c);
        else
            out += schur_product_of(factors) * c;
    }
    return out;
}

} // namespace

SchurVector circ_map(const HPolynomial& f, const SkewShape& d) {
    std::map<int, SkewShape> images;
    return expand_monomials(f, [&](const Partition& key) {
        std::vector<SkewShape> factors;
        for (int r : key.parts()) {
            auto it = images.find(r);
            if (it == images.end()) it = images.emplace(r, compose_alpha_D(Composition{r}, d)).first;
            factors.push_back(it->second);
        }
        return factors;
    });
}

SchurVector circ_omega_map(const HPolynomial& f, const SkewShape& d, const Composition& omega) {
    std::size_t degree = 0;
    for (const auto& [key, c] : f.terms()) degree = std::max(degree, key.length());
    const SkewShape omega_shape = ribbon_to_shape(omega);
    std::map<int, SkewShape> images;
    return expand_monomials(f, [&](const Partition& key) {
        std::vector<SkewShape> factors;
        for (int r : key.parts()) {
            auto it = images.find(r);
            if (it == images.end()) it = images.emplace(r, amalgamate_power(d, omega, r)).first;
            factors.push_back(it->second);
        }
        factors.insert(factors.end(), degree - key.length(), omega_shape);
        return factors;
    });
}

Integer PrincipalPolynomial::at(long t) const {
    Integer value = 0;
    for (std::size_t i = numerator.size(); i-- > 0;) value = value * t + numerator[i];
    if (value % denominator != 0) fail(ErrorKind::InvalidArgument, "principal specialization is not integral here");
    return value / denominator;
}

int PrincipalPolynomial::t_valuation() const {
    for (std::size_t i = 0; i < numerator.size(); ++i)
        if (numerator[i] != 0) return static_cast<int>(i);
    return -1;
}

std::string PrincipalPolynomial::str() const {
    std::ostringstream out;
    bool first = true;
    out << '(';
    for (std::size_t i = numerator.size(); i-- > 0;) {
        const Integer& c = numerator[i];
        if (c == 0) continue;
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << '-';
        if (mag != 1 || i == 0) out << mag;
        if (i >= 1) out << "t";
        if (i >= 2) out << '^' << i;
        first = false;
    }
    if (first) out << '0';
    out << ")/" << denominator;
    return out.str();
}

PrincipalPolynomial principal_eval(const SchurVector& f) {
    // s_lambda(1^t) = prod (t + c(x)) / prod h(x)
    struct Term {
        std::vector<Integer> num;
        Integer den;
    };
    std::vector<Term> terms;
    Integer common = 1;
    for (const auto& [lam, c] : f.terms()) {
        Term term{{Integer(c)}, Integer(1)};
        const Partition conj = lam.conjugate();
        for (std::size_t i = 0; i < lam.length(); ++i) {
            for (int j = 0; j < lam[i]; ++j) {
                const int content = j - static_cast<int>(i);
                std::vector<Integer> next(term.num.size() + 1, Integer(0));
                for (std::size_t k = 0; k < term.num.size(); ++k) {
                    next[k] += term.num[k] * content;
                    next[k + 1] += term.num[k];
                }
                term.num = std::move(next);
                term.den *= (lam[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
            }
        }
        common = common / boost::multiprecision::gcd(common, term.den) * term.den;
        terms.push_back(std::move(term));
    }
    PrincipalPolynomial out;
    for (const Term& term : terms) {
        const Integer scale = common / term.den;
        if (out.numerator.size() < term.num.size()) out.numerator.resize(term.num.size(), Integer(0));
        for (std::size_t k = 0; k < term.num.size(); ++k) out.numerator[k] += term.num[k] * scale;
    }
    while (!out.numerator.empty() && out.numerator.back() == 0) out.numerator.pop_back();
    if (out.numerator.empty()) return out;
    Integer g = common;
    for (const Integer& c : out.numerator)
        if (c != 0) g = boost::multiprecision::gcd(g, c < 0 ? Integer(-c) : c);
    for (Integer& c : out.numerator) c /= g;
    out.denominator = common / g;
    return out;
}

} // namespace skewlab
