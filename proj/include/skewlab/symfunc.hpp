#pragma once

#include <vector>

#include "skewlab/decomposition.hpp"
#include "skewlab/shape.hpp"
#include "skewlab/sparse.hpp"

namespace skewlab {

// ---- Littlewood-Richardson pictures ----

/// A picture for D: rows of the column-strict tableau T, and for each cell of
/// D (row-major order) the cell of T it is sent to.
struct Picture {
    std::vector<std::vector<int>> tableau;  // entries are 1-based row indices of D
    std::vector<std::pair<Cell, Cell>> map;

    Partition shape() const;
};

SchurVector schur_expand_lr(const SkewShape& d);
std::vector<Picture> pictures(const SkewShape& d);

/// s_{D1} s_{D2} ... as one expansion of the disjoint sum of the factors.
SchurVector schur_product_of(std::span<const SkewShape> factors);

// ---- Kostka ----

Integer kostka_number(const SkewShape& d, const Partition& content);
MonomialVector kostka_expand(const SkewShape& d);
/// Monomial expansion of a Schur vector through straight-shape Kostka numbers.
MonomialVector to_monomial(const SchurVector& f);

// ---- determinants ----

/// det(h_{lambda_i - mu_j - i + j}).
HPolynomial jacobi_trudi(const SkewShape& d);
/// The same determinant by permutation expansion or by the subset recursion.
HPolynomial jacobi_trudi_permutations(const SkewShape& d);
HPolynomial jacobi_trudi_subsets(const SkewShape& d);
/// det(e_{lambda'_i - mu'_j - i + j}).
EPolynomial dual_jacobi_trudi(const SkewShape& d);

SchurVector hamel_goulden(const SkewShape& d, const OutsideDecomposition& pi);
/// Hamel-Goulden with the border decomposition of each connected component,
/// multiplied together.
SchurVector schur_expand_hg(const SkewShape& d, Side side);

// ---- ring operations and bases ----

SchurVector schur_multiply(const SchurVector& a, const SchurVector& b);
HPolynomial h_multiply(const HPolynomial& a, const HPolynomial& b);

SchurVector omega(const SchurVector& f);
HPolynomial omega(const HPolynomial& f);
/// e_r written in the h basis.
const HPolynomial& e_in_h(int r);
HPolynomial e_to_h(const EPolynomial& f);

SchurVector to_schur(const HPolynomial& f);
HPolynomial to_h(const SchurVector& f);

// ---- characters ----

Integer character(const SkewShape& d, const Partition& nu);
CharacterVector characters(const SkewShape& d);

// ---- maps of the overlap and composition theory ----

SchurVector phi_ell(const SchurVector& f, int ell);
HPolynomial h_coeff(const HPolynomial& f, int r);
/// s of the hat diagram recovered from s_D alone, given D has ell rows and c columns.
/// Equals (-1)^(ell-1) [h_{ell+c}] phi_ell(s_D); the sign is the cofactor sign of
/// the corner entry h_{ell+c} in an ell x ell Jacobi-Trudi matrix.
SchurVector hat_from_expansion(const SchurVector& s_d, int ell, int c);

/// Algebra map determined by h_r -> s_{(r) o D}.
SchurVector circ_map(const HPolynomial& f, const SkewShape& d);
/// Homogenize with t, then h_r -> s_{D amalgamated r times}, t -> s_omega.
SchurVector circ_omega_map(const HPolynomial& f, const SkewShape& d, const Composition& omega);

// ---- principal specialization ----

/// numerator(t) / denominator with integer numerator coefficients
/// (index = power of t) and positive denominator, in lowest terms.
struct PrincipalPolynomial {
    std::vector<Integer> numerator;
    Integer denominator = 1;

    /// Value at a nonnegative integer t; asserts the value is integral.
    Integer at(long t) const;
    /// Largest power of t dividing the polynomial; -1 for the zero polynomial.
    int t_valuation() const;
    std::string str() const;
};

PrincipalPolynomial principal_eval(const SchurVector& f);

} // namespace skewlab
