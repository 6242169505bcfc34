#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qgr/veronese.hpp"

namespace qgr {

/// The fixed quiver: vertices {1, 2, 3}, one arrow f: 2 -> 1 and three
/// arrows phi_0, phi_1, phi_2: 2 -> 3. Acyclic by inspection; constant for
/// the whole library.
struct QuiverShape {
    struct Arrow {
        int source;
        int target;
    };
    static constexpr int vertex_count = 3;
    static constexpr std::array<Arrow, 4> arrows{{{2, 1}, {2, 3}, {2, 3}, {2, 3}}};
};

/// The representation V_d^f attached to a curve equation P of degree d:
/// dimension vector (1, M, M'), f = linearize(P) as the map k^M -> k, and
/// phi_i: k^M -> k^M' the selection matrix whose row n picks coordinate
/// index_of(n + e_i), i.e. the i-th column of A_d. Immutable.
class QuiverRep {
public:
    explicit QuiverRep(const HomogeneousPoly& P);

    const FieldSpec& spec() const { return spec_; }
    int degree() const { return d_; }
    int vertex2_dim() const { return static_cast<int>(f_.size()); } // M
    int vertex3_dim() const { return static_cast<int>(phi_[0].size()); } // M'
    std::array<int, 3> dimension_vector() const { return {1, vertex2_dim(), vertex3_dim()}; }

    const std::vector<Scalar>& f() const { return f_; }

    /// Column of the single 1 in row `row` of phi_i.
    int phi_column(int i, int row) const {
        return phi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)];
    }

    /// phi_i applied to a representative of y (length M').
    std::vector<Scalar> apply_phi(int i, const ProjPoint& y) const;

    const HomogeneousPoly& source_poly() const { return poly_; }

    bool operator==(const QuiverRep& rhs) const;
    bool operator!=(const QuiverRep& rhs) const { return !(*this == rhs); }

private:
    FieldSpec spec_;
    int d_;
    std::vector<Scalar> f_;
    std::array<std::vector<int>, 3> phi_;
    HomogeneousPoly poly_;
};

/// A subrepresentation of dimension vector (0, 1, 1): the vertex-2 line
/// spanned by line2 and the vertex-3 line it forces through the phi maps.
struct GrassPoint {
    ProjPoint line2; // in P^(M-1)
    ProjPoint line3; // in P^(M'-1)

    bool operator==(const GrassPoint& rhs) const {
        return line2 == rhs.line2 && line3 == rhs.line3;
    }
    bool operator!=(const GrassPoint& rhs) const { return !(*this == rhs); }
};

/// Why a point failed the membership test: the linear condition f.y != 0,
/// or the first nonvanishing 2x2 minor of the stacked phi columns.
struct MembershipFailure {
    enum class Kind { f_nonzero, minor_nonzero };
    Kind kind;
    int row1 = 0, row2 = 0, col1 = 0, col2 = 0;

    std::string to_string() const;
};

QuiverRep build_representation(const HomogeneousPoly& P);

/// Decides y in Gr_(0,1,1)(V): f.y = 0 and the matrix (phi_0 y | phi_1 y |
/// phi_2 y) = A_d(y) has every 2x2 minor zero. On success the vertex-3 line
/// is the first nonzero column, normalized. Rank 0 cannot occur for a
/// projective y since every coordinate index appears in the table.
std::variant<GrassPoint, MembershipFailure> check_membership(const QuiverRep& rep,
                                                             const ProjPoint& y);
std::optional<GrassPoint> membership(const QuiverRep& rep, const ProjPoint& y);

/// Re-checks all four arrow compatibilities from scratch: f maps the line
/// into the zero space at vertex 1, and each phi_i maps it into span(line3).
bool validate_subrep(const QuiverRep& rep, const GrassPoint& candidate);

/// All points of Gr_(0,1,1)(V)(F_p), found by filtering the full ambient
/// P^(M-1)(F_p) through the membership test, in enumeration order.
std::vector<GrassPoint> enumerate_grassmannian(const QuiverRep& rep,
                                               std::uint64_t guard = kDefaultEnumerationGuard);

/// Transports u along the map psi = (psi_0, psi_1, psi_2) between the
/// realized curves: pull back through the Veronese inverse, apply psi, embed
/// into the target. The image must land in the target Grassmannian; this is
/// checked pointwise, not symbolically.
GrassPoint transport_morphism(const std::array<HomogeneousPoly, 3>& psi, const QuiverRep& src,
                              const QuiverRep& dst, const GrassPoint& u);

/// JSON document with fields degree / field / dimension_vector / f / phi /
/// source_poly; bit-exact round trip with deserialize_rep.
nlohmann::json serialize_rep(const QuiverRep& rep);

/// Validates every representation invariant and throws SerializationError
/// with a named cause on the first violation.
QuiverRep deserialize_rep(const nlohmann::json& doc);

} // namespace qgr
