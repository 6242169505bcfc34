#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qgr/errors.hpp"

namespace qgr {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime, rational };

/// Names a coefficient domain: F_p for a prime p, or the rationals.
/// Primality is checked at construction by trial division; moduli are capped
/// below 2^31 so that residue products fit in 64-bit arithmetic.
class FieldSpec {
public:
    static FieldSpec prime(std::int64_t p);
    static FieldSpec rationals();

    /// Text forms: "p:<prime>" or "q".
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    bool is_prime() const { return kind_ == FieldKind::prime; }
    bool is_rational() const { return kind_ == FieldKind::rational; }

    /// The modulus p; only meaningful for prime fields.
    std::int64_t modulus() const;

    /// p for prime fields, 0 for the rationals.
    std::int64_t characteristic() const { return is_prime() ? p_ : 0; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::int64_t p_;
};

/// Exact element of the field named by its spec. Prime-field values are
/// canonical residues in [0, p); rationals are reduced fractions with
/// positive denominator. Values are immutable; every operation returns a
/// fresh Scalar and throws DomainError when the operand specs differ.
class Scalar {
public:
    static Scalar zero(const FieldSpec& spec);
    static Scalar one(const FieldSpec& spec);
    static Scalar from_int(const FieldSpec& spec, std::int64_t n);
    static Scalar from_big(const FieldSpec& spec, const BigInt& n);

    /// num/den as a field element (field division for prime specs).
    static Scalar fraction(const FieldSpec& spec, const BigInt& num, const BigInt& den);

    /// Decimal integer, or "n/d" with an optional leading minus.
    static Scalar parse(std::string_view text, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical residue in [0, p); prime fields only.
    std::int64_t residue() const;

    /// Reduced fraction; rationals only.
    const BigRational& value() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;

    Scalar inv() const;

    /// a^n with 0^0 = 1, by square and multiply.
    Scalar pow(std::uint64_t n) const;

    /// Scalars from different fields compare unequal (no coercion).
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    explicit Scalar(const FieldSpec& spec) : spec_(spec) {}
    void require_same_spec(const Scalar& rhs) const;

    FieldSpec spec_;
    std::int64_t r_ = 0; // prime residue
    BigRational q_;      // rational value
};

} // namespace qgr
