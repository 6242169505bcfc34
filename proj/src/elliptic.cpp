#include "qgr/elliptic.hpp"

namespace qgr {

namespace {

void require_good_characteristic(const FieldSpec& spec) {
    const std::int64_t ch = spec.characteristic();
    if (ch == 2 || ch == 3)
        throw UnsupportedCharacteristicError(
            "short Weierstrass form needs characteristic other than 2 and 3");
}

} // namespace

ECPoint::ECPoint(const FieldSpec& spec, bool infinite, Scalar x, Scalar y)
    : spec_(spec), infinite_(infinite), x_(std::move(x)), y_(std::move(y)) {}

ECPoint ECPoint::infinity(const FieldSpec& spec) {
    return ECPoint(spec, true, Scalar::zero(spec), Scalar::zero(spec));
}

ECPoint ECPoint::affine(Scalar x, Scalar y) {
    if (x.spec() != y.spec())
        throw DomainError("coordinate field mismatch");
    const FieldSpec spec = x.spec();
    return ECPoint(spec, false, std::move(x), std::move(y));
}

const Scalar& ECPoint::x() const {
    if (infinite_)
        throw DomainError("the point at infinity has no affine coordinates");
    return x_;
}

const Scalar& ECPoint::y() const {
    if (infinite_)
        throw DomainError("the point at infinity has no affine coordinates");
    return y_;
}

bool ECPoint::operator==(const ECPoint& rhs) const {
    if (spec_ != rhs.spec_ || infinite_ != rhs.infinite_)
        return false;
    return infinite_ || (x_ == rhs.x_ && y_ == rhs.y_);
}

std::string ECPoint::to_string() const {
    if (infinite_)
        return "O";
    return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

bool discriminant_ok(const Scalar& a, const Scalar& b) {
    if (a.spec() != b.spec())
        throw DomainError("curve coefficients live in different fields");
    require_good_characteristic(a.spec());
    const FieldSpec& spec = a.spec();
    const Scalar four = Scalar::from_int(spec, 4);
    const Scalar twenty_seven = Scalar::from_int(spec, 27);
    const Scalar disc = four * a.pow(3) + twenty_seven * b.pow(2);
    return !disc.is_zero();
}

HomogeneousPoly weierstrass_poly(const Scalar& a, const Scalar& b) {
    if (a.spec() != b.spec())
        throw DomainError("curve coefficients live in different fields");
    const FieldSpec& spec = a.spec();
    const Scalar one = Scalar::one(spec);
    HomogeneousPoly::CoeffMap coeffs;
    coeffs.emplace(ExponentTuple{{0, 2, 1}}, one);  // y^2 z
    coeffs.emplace(ExponentTuple{{3, 0, 0}}, -one); // -x^3
    if (!a.is_zero())
        coeffs.emplace(ExponentTuple{{1, 0, 2}}, -a); // -a x z^2
    if (!b.is_zero())
        coeffs.emplace(ExponentTuple{{0, 0, 3}}, -b); // -b z^3
    return HomogeneousPoly(spec, 3, std::move(coeffs));
}

WeierstrassCurve::WeierstrassCurve(Scalar a, Scalar b)
    : spec_(a.spec()), a_(std::move(a)), b_(std::move(b)) {
    if (a_.spec() != b_.spec())
        throw DomainError("curve coefficients live in different fields");
    require_good_characteristic(spec_);
    if (!discriminant_ok(a_, b_))
        throw DomainError("singular curve: 4a^3 + 27b^2 = 0");
}

bool WeierstrassCurve::contains(const ECPoint& P) const {
    if (P.spec() != spec_)
        return false;
    if (P.is_infinity())
        return true;
    const Scalar lhs = P.y() * P.y();
    const Scalar rhs = P.x().pow(3) + a_ * P.x() + b_;
    return lhs == rhs;
}

ECPoint WeierstrassCurve::add(const ECPoint& P, const ECPoint& Q) const {
    if (!contains(P) || !contains(Q))
        throw DomainError("addition input is not on the curve");
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;

    Scalar lambda = Scalar::zero(spec_);
    if (P.x() == Q.x()) {
        if (P.y() == -Q.y())
            return ECPoint::infinity(spec_); // vertical chord (or 2-torsion tangent)
        // P == Q with y != 0: tangent slope.
        const Scalar three = Scalar::from_int(spec_, 3);
        const Scalar two = Scalar::from_int(spec_, 2);
        lambda = (three * P.x() * P.x() + a_) / (two * P.y());
    } else {
        lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    }
    const Scalar x3 = lambda * lambda - P.x() - Q.x();
    const Scalar y3 = lambda * (P.x() - x3) - P.y();
    return ECPoint::affine(x3, y3);
}

ECPoint WeierstrassCurve::negate(const ECPoint& P) const {
    if (!contains(P))
        throw DomainError("negation input is not on the curve");
    if (P.is_infinity())
        return P;
    return ECPoint::affine(P.x(), -P.y());
}

std::uint64_t WeierstrassCurve::group_order() const {
    return static_cast<std::uint64_t>(rational_points().size());
}

std::vector<ECPoint> WeierstrassCurve::rational_points() const {
    if (!spec_.is_prime())
        throw DomainError("rational-point scan needs a finite field");
    const std::int64_t p = spec_.modulus();
    if (p > 4000)
        throw FeasibilityError("affine scan of " + std::to_string(p * p) +
                                   " pairs is above the built-in limit",
                               static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p));
    std::vector<ECPoint> points;
    points.push_back(ECPoint::infinity(spec_));
    for (std::int64_t xi = 0; xi < p; ++xi) {
        const Scalar x = Scalar::from_int(spec_, xi);
        const Scalar rhs = x.pow(3) + a_ * x + b_;
        for (std::int64_t yi = 0; yi < p; ++yi) {
            const Scalar y = Scalar::from_int(spec_, yi);
            if (y * y == rhs)
                points.push_back(ECPoint::affine(x, y));
        }
    }
    return points;
}

WeierstrassCurve weierstrass_from_rep(const QuiverRep& rep) {
    if (rep.degree() != 3)
        throw DomainError("a Weierstrass representation has degree 3");
    const auto& f = rep.f();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i == 0 || i == 5 || i == 7 || i == 9)
            continue;
        if (!f[i].is_zero())
            throw DomainError("representation is not in Weierstrass shape: f has support "
                              "outside {0, 5, 7, 9}");
    }
    if (f[7].is_zero() || f[0] != -f[7])
        throw DomainError("representation is not in Weierstrass shape: need f[0] = -f[7] != 0");
    const Scalar a = -f[5] / f[7];
    const Scalar b = -f[9] / f[7];
    return WeierstrassCurve(a, b); // validates characteristic and discriminant
}

ECPoint decode_grass_point(const QuiverRep& rep, const GrassPoint& u) {
    const ProjPoint pt = inverse_veronese(u.line2, rep.degree());
    if (pt[2].is_zero()) {
        // On a Weierstrass cubic the only point with z = 0 is [0:1:0].
        if (!pt[0].is_zero())
            throw DomainError("point at z = 0 is not on a Weierstrass cubic");
        return ECPoint::infinity(rep.spec());
    }
    const Scalar zinv = pt[2].inv();
    return ECPoint::affine(pt[0] * zinv, pt[1] * zinv);
}

GrassPoint encode_ec_point(const QuiverRep& rep, const ECPoint& P) {
    const FieldSpec& spec = rep.spec();
    std::vector<Scalar> coords;
    if (P.is_infinity())
        coords = {Scalar::zero(spec), Scalar::one(spec), Scalar::zero(spec)};
    else
        coords = {P.x(), P.y(), Scalar::one(spec)};
    const ProjPoint embedded = veronese_map(ProjPoint(std::move(coords)), rep.degree());
    auto gp = membership(rep, embedded);
    if (!gp)
        throw DomainError("point " + P.to_string() + " is not on the represented curve");
    return std::move(*gp);
}

GrassPoint gr_identity(const QuiverRep& rep) {
    weierstrass_from_rep(rep); // validates the shape
    return encode_ec_point(rep, ECPoint::infinity(rep.spec()));
}

GrassPoint gr_add(const QuiverRep& rep, const GrassPoint& u, const GrassPoint& v) {
    const WeierstrassCurve curve = weierstrass_from_rep(rep);
    const ECPoint sum = curve.add(decode_grass_point(rep, u), decode_grass_point(rep, v));
    return encode_ec_point(rep, sum);
}

GrassPoint gr_neg(const QuiverRep& rep, const GrassPoint& u) {
    const WeierstrassCurve curve = weierstrass_from_rep(rep);
    return encode_ec_point(rep, curve.negate(decode_grass_point(rep, u)));
}

std::vector<GrassPoint> grassmannian_group_points(const QuiverRep& rep) {
    const WeierstrassCurve curve = weierstrass_from_rep(rep);
    std::vector<GrassPoint> points;
    for (const ECPoint& P : curve.rational_points())
        points.push_back(encode_ec_point(rep, P));
    return points;
}

} // namespace qgr
