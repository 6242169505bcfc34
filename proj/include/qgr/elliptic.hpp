#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgr/quiver.hpp"

namespace qgr {

/// A point of a Weierstrass curve: the point at infinity O = [0:1:0], or an
/// affine pair (x, y).
class ECPoint {
public:
    static ECPoint infinity(const FieldSpec& spec);
    static ECPoint affine(Scalar x, Scalar y);

    bool is_infinity() const { return infinite_; }
    const Scalar& x() const;
    const Scalar& y() const;
    const FieldSpec& spec() const { return spec_; }

    bool operator==(const ECPoint& rhs) const;
    bool operator!=(const ECPoint& rhs) const { return !(*this == rhs); }

    /// "O" or "(x, y)".
    std::string to_string() const;

private:
    ECPoint(const FieldSpec& spec, bool infinite, Scalar x, Scalar y);

    FieldSpec spec_;
    bool infinite_;
    Scalar x_, y_;
};

/// 4a^3 + 27b^2 != 0, evaluated exactly. Characteristic 2 and 3 are
/// rejected; the short Weierstrass form does not cover them.
bool discriminant_ok(const Scalar& a, const Scalar& b);

/// The homogenized curve equation y^2 z - x^3 - a x z^2 - b z^3. Works for
/// singular (a, b) too, so the discriminant criterion can be cross-checked
/// against the Jacobian search.
HomogeneousPoly weierstrass_poly(const Scalar& a, const Scalar& b);

/// y^2 = x^3 + ax + b over a field of characteristic not 2 or 3, with
/// 4a^3 + 27b^2 != 0 enforced at construction.
class WeierstrassCurve {
public:
    WeierstrassCurve(Scalar a, Scalar b);

    const FieldSpec& spec() const { return spec_; }
    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }

    HomogeneousPoly to_poly() const { return weierstrass_poly(a_, b_); }

    bool contains(const ECPoint& P) const;

    /// Chord-tangent addition with identity O.
    ECPoint add(const ECPoint& P, const ECPoint& Q) const;
    ECPoint negate(const ECPoint& P) const;

    /// 1 + #{(x, y) in F_p^2 : y^2 = x^3 + ax + b}, by affine scan.
    std::uint64_t group_order() const;

    /// O first, then affine points by increasing (x, y) residue.
    std::vector<ECPoint> rational_points() const;

private:
    FieldSpec spec_;
    Scalar a_, b_;
};

/// Recovers the Weierstrass curve a representation was built from: f must
/// have support inside {0, 5, 7, 9} with f[0] = -f[7] != 0, giving
/// a = -f[5]/f[7] and b = -f[9]/f[7].
WeierstrassCurve weierstrass_from_rep(const QuiverRep& rep);

/// Inverse Veronese followed by dehomogenization; z = 0 forces [0:1:0].
ECPoint decode_grass_point(const QuiverRep& rep, const GrassPoint& u);
GrassPoint encode_ec_point(const QuiverRep& rep, const ECPoint& P);

/// The elliptic group law transported through the 3-uple Veronese embedding
/// onto Grassmannian points. gr_identity is the point over e_6, the image
/// of [0:1:0].
GrassPoint gr_identity(const QuiverRep& rep);
GrassPoint gr_add(const QuiverRep& rep, const GrassPoint& u, const GrassPoint& v);
GrassPoint gr_neg(const QuiverRep& rep, const GrassPoint& u);

/// Every Grassmannian point of a Weierstrass representation over F_p,
/// obtained by encoding the curve's rational points (identity first). This
/// avoids the ambient P^9 scan, so it stays cheap for p where the full
/// enumeration would trip the guard.
std::vector<GrassPoint> grassmannian_group_points(const QuiverRep& rep);

} // namespace qgr
