#include "qgr/veronese.hpp"

namespace qgr {

MonomialBasis::MonomialBasis(int d) : d_(d) {
    if (d < 1)
        throw DomainError("monomial basis needs degree >= 1 (no curves of degree 0)");
    order_ = monomials_of_degree(d);
    for (int i = 0; i < static_cast<int>(order_.size()); ++i)
        index_.emplace(order_[static_cast<std::size_t>(i)], i);
}

int MonomialBasis::index_of(const ExponentTuple& m) const {
    const auto it = index_.find(m);
    if (it == index_.end())
        throw DomainError("monomial of degree " + std::to_string(m.degree()) +
                          " is not in the degree-" + std::to_string(d_) + " basis");
    return it->second;
}

AMatrixIndices::AMatrixIndices(int d) : d_(d) {
    if (d < 1)
        throw DomainError("A-matrix needs degree >= 1");
    const MonomialBasis basis(d);
    ambient_ = basis.size();
    rows_ = monomials_of_degree(d - 1);
    entries_.reserve(rows_.size());
    for (const auto& n : rows_) {
        std::array<int, 3> row{};
        for (int i = 0; i < 3; ++i)
            row[static_cast<std::size_t>(i)] = basis.index_of(n.plus_unit(i));
        entries_.push_back(row);
    }
}

ProjPoint veronese_map(const ProjPoint& pt, int d) {
    if (pt.dimension() != 2)
        throw DomainError("the Veronese map here embeds P^2 only");
    const MonomialBasis basis(d);
    std::vector<Scalar> coords;
    coords.reserve(static_cast<std::size_t>(basis.size()));
    for (const auto& m : basis.order()) {
        Scalar v = Scalar::one(pt.spec());
        for (int i = 0; i < 3; ++i) {
            const int k = m.e[static_cast<std::size_t>(i)];
            if (k > 0)
                v = v * pt[i].pow(static_cast<std::uint64_t>(k));
        }
        coords.push_back(v);
    }
    return ProjPoint(std::move(coords));
}

ScalarMatrix evaluate_a_matrix(const AMatrixIndices& idx, const ProjPoint& y) {
    if (y.dimension() + 1 != idx.ambient_size())
        throw DomainError("point has " + std::to_string(y.dimension() + 1) +
                          " coordinates but A_" + std::to_string(idx.degree()) + " needs " +
                          std::to_string(idx.ambient_size()));
    ScalarMatrix mat;
    mat.reserve(static_cast<std::size_t>(idx.row_count()));
    for (int n = 0; n < idx.row_count(); ++n) {
        std::vector<Scalar> row;
        row.reserve(3);
        for (int i = 0; i < 3; ++i)
            row.push_back(y[idx.entry(n, i)]);
        mat.push_back(std::move(row));
    }
    return mat;
}

bool rank_at_most_one(const ScalarMatrix& mat) {
    const std::size_t rows = mat.size();
    for (std::size_t r1 = 0; r1 + 1 < rows; ++r1) {
        const std::size_t cols = mat[r1].size();
        for (std::size_t r2 = r1 + 1; r2 < rows; ++r2) {
            for (std::size_t c1 = 0; c1 + 1 < cols; ++c1) {
                for (std::size_t c2 = c1 + 1; c2 < cols; ++c2) {
                    const Scalar minor = mat[r1][c1] * mat[r2][c2] - mat[r1][c2] * mat[r2][c1];
                    if (!minor.is_zero())
                        return false;
                }
            }
        }
    }
    return true;
}

std::vector<Scalar> linearize(const HomogeneousPoly& P) {
    if (P.is_zero())
        throw EmptyPolynomialError();
    const MonomialBasis basis(P.degree());
    std::vector<Scalar> f(static_cast<std::size_t>(basis.size()), Scalar::zero(P.spec()));
    for (const auto& [m, c] : P.coeffs())
        f[static_cast<std::size_t>(basis.index_of(m))] = c;
    return f;
}

ProjPoint inverse_veronese(const ProjPoint& y, int d) {
    const AMatrixIndices idx(d);
    const ScalarMatrix mat = evaluate_a_matrix(idx, y);
    if (!rank_at_most_one(mat))
        throw NotInImageError("point is not in the Veronese image: A_" + std::to_string(d) +
                              " has rank >= 2");
    // A nonzero row exists because every basis index occurs in the table.
    for (const auto& row : mat) {
        for (const auto& v : row) {
            if (!v.is_zero())
                return ProjPoint(row);
        }
    }
    throw DomainError("A-matrix of a projective point cannot be zero");
}

} // namespace qgr
