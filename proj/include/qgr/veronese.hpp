#pragma once

#include <array>
#include <map>
#include <vector>

#include "qgr/poly.hpp"

namespace qgr {

/// Ordered basis of the degree-d monomials in x, y, z, descending lex.
/// Index 0 is x^d; for d = 3 the order is
///   x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3,
/// which is what makes a Weierstrass cubic linearize with support
/// {0, 5, 7, 9}. M = C(d+2, 2).
class MonomialBasis {
public:
    explicit MonomialBasis(int d);

    int degree() const { return d_; }
    int size() const { return static_cast<int>(order_.size()); }
    const ExponentTuple& at(int i) const { return order_[static_cast<std::size_t>(i)]; }
    int index_of(const ExponentTuple& m) const;
    const std::vector<ExponentTuple>& order() const { return order_; }

private:
    int d_;
    std::vector<ExponentTuple> order_;
    std::map<ExponentTuple, int, DescLexOrder> index_;
};

/// Index table of the M' x 3 matrix A_d: rows are the degree-(d-1) monomials
/// in descending lex, and entry (n, i) is the basis position of n + e_i, so
/// evaluating at y in P^(M-1) reads off y[entry(n, i)]. M' = C(d+1, 2).
class AMatrixIndices {
public:
    explicit AMatrixIndices(int d);

    int degree() const { return d_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    static constexpr int column_count() { return 3; }

    /// M, the number of degree-d monomials the columns select from.
    int ambient_size() const { return ambient_; }

    const ExponentTuple& row(int n) const { return rows_[static_cast<std::size_t>(n)]; }
    int entry(int n, int i) const {
        return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }

private:
    int d_;
    int ambient_;
    std::vector<ExponentTuple> rows_;
    std::vector<std::array<int, 3>> entries_;
};

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// The d-uple Veronese embedding: coordinate index_of(m) of the image is
/// x^m. The output is never zero, so this is total on P^2.
ProjPoint veronese_map(const ProjPoint& pt, int d);

/// Entry (n, i) = y[idx.entry(n, i)].
ScalarMatrix evaluate_a_matrix(const AMatrixIndices& idx, const ProjPoint& y);

/// True iff every 2x2 minor vanishes. Division free, so valid verbatim over
/// F_p and the rationals.
bool rank_at_most_one(const ScalarMatrix& mat);

/// The curve equation as a linear form on Veronese coordinates: component
/// index_of(m) is the coefficient of x^m, so f . veronese(x) = P(x).
std::vector<Scalar> linearize(const HomogeneousPoly& P);

/// Inverts the Veronese embedding on its image: any nonzero row of A_d(y)
/// equals x^n (x0, x1, x2), so the first one gives back the point. Throws
/// NotInImageError when the A-matrix has rank >= 2.
ProjPoint inverse_veronese(const ProjPoint& y, int d);

} // namespace qgr
