#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgr/field.hpp"
#include "qgr/projective.hpp"

namespace qgr {

/// Exponent triple (m0, m1, m2) of the monomial x^m0 y^m1 z^m2.
struct ExponentTuple {
    std::array<int, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }
    ExponentTuple plus_unit(int i) const;
    ExponentTuple minus_unit(int i) const;

    friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;
};

/// Descending lexicographic order on exponent tuples. This one ordering fixes
/// the monomial layout everywhere: Veronese coordinates, A-matrix rows, and
/// polynomial printing all follow it, so index 0 of degree 3 is x^3 and index
/// 7 is y^2 z.
struct DescLexOrder {
    bool operator()(const ExponentTuple& a, const ExponentTuple& b) const { return b < a; }
};

/// All exponent tuples of total degree d, descending lex. Length C(d+2, 2).
std::vector<ExponentTuple> monomials_of_degree(int d);

/// Homogeneous polynomial in x, y, z. Every stored key has the declared
/// degree and no zero coefficients are kept; the zero polynomial is the
/// empty map (allowed here, rejected wherever a curve equation is needed).
class HomogeneousPoly {
public:
    using CoeffMap = std::map<ExponentTuple, Scalar, DescLexOrder>;

    HomogeneousPoly(const FieldSpec& spec, int degree, CoeffMap coeffs);
    static HomogeneousPoly zero(const FieldSpec& spec, int degree);

    const FieldSpec& spec() const { return spec_; }
    int degree() const { return degree_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^m, zero when the monomial is absent.
    Scalar coeff(const ExponentTuple& m) const;

    std::string to_string() const;

    bool operator==(const HomogeneousPoly& rhs) const;
    bool operator!=(const HomogeneousPoly& rhs) const { return !(*this == rhs); }

private:
    FieldSpec spec_;
    int degree_;
    CoeffMap coeffs_;
};

/// Parses the grammar
///   poly   := ["-"] term (("+"|"-") term)* ;
///   term   := [coeff "*"] factor ("*" factor)* | coeff ;
///   factor := ("x"|"y"|"z") ["^" nat] ;
///   coeff  := ["-"] nat ["/" nat] ;
/// with insignificant whitespace. Mixed total degrees raise
/// HomogeneityError; a fully cancelled input raises EmptyPolynomialError.
HomogeneousPoly parse_poly(std::string_view text, const FieldSpec& spec);

Scalar eval_poly(const HomogeneousPoly& P, const std::array<Scalar, 3>& pt);

/// Evaluates at the canonical representative of pt.
Scalar eval_poly(const HomogeneousPoly& P, const ProjPoint& pt);

/// Whether pt lies on the vanishing locus (independent of representative).
bool vanishes_at(const HomogeneousPoly& P, const ProjPoint& pt);

/// Formal partial derivative with respect to variable var in {0, 1, 2}.
/// The result may be zero (for example d/dx of x^3 over F_3).
HomogeneousPoly partial_derivative(const HomogeneousPoly& P, int var);

HomogeneousPoly poly_mul(const HomogeneousPoly& a, const HomogeneousPoly& b);

/// Quotient P / g when g divides P exactly, nullopt otherwise.
std::optional<HomogeneousPoly> poly_divide_exact(const HomogeneousPoly& P,
                                                 const HomogeneousPoly& g);

/// Searches for a factorization P = g * h over F_p with 1 <= deg g <= d/2.
/// Returns the first witness in a fixed deterministic order, or nullopt when
/// no factorization exists over F_p itself. A nullopt is NOT an
/// irreducibility certificate; factors may live in field extensions.
std::optional<std::pair<HomogeneousPoly, HomogeneousPoly>>
reducibility_witness(const HomogeneousPoly& P, std::uint64_t max_p_guard);

/// All F_p-rational points where P and its three partials vanish, in
/// enumeration order. An empty answer does not certify smoothness over the
/// algebraic closure.
std::vector<ProjPoint> singular_points(const HomogeneousPoly& P,
                                       std::uint64_t guard = kDefaultEnumerationGuard);

} // namespace qgr
