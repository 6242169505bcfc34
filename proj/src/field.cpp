#include "qgr/field.hpp"

#include <cctype>

namespace qgr {

namespace {

bool is_prime_small(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Inverse of a mod p for 0 < a < p, by the extended Euclidean algorithm.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    // old_r == gcd(a, p) == 1 since p is prime and a is a nonzero residue.
    return ((old_s % p) + p) % p;
}

} // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31))
        throw DomainError("prime modulus must be below 2^31, got " + std::to_string(p));
    if (!is_prime_small(p))
        throw DomainError("modulus is not prime: " + std::to_string(p));
    return FieldSpec(FieldKind::prime, p);
}

FieldSpec FieldSpec::rationals() {
    return FieldSpec(FieldKind::rational, 0);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q")
        return rationals();
    if (text.size() > 2 && (text.substr(0, 2) == "p:" || text.substr(0, 2) == "P:")) {
        std::int64_t p = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("field spec must be 'p:<prime>' or 'q'", i);
            p = p * 10 + (text[i] - '0');
            if (p >= (std::int64_t{1} << 31))
                throw DomainError("prime modulus must be below 2^31");
        }
        return prime(p);
    }
    throw ParseError("field spec must be 'p:<prime>' or 'q'", 0);
}

std::int64_t FieldSpec::modulus() const {
    if (!is_prime())
        throw DomainError("field has no finite modulus");
    return p_;
}

std::string FieldSpec::to_string() const {
    return is_prime() ? "p:" + std::to_string(p_) : "q";
}

// --- Scalar -----------------------------------------------------------

Scalar Scalar::zero(const FieldSpec& spec) {
    return Scalar(spec);
}

Scalar Scalar::one(const FieldSpec& spec) {
    Scalar s(spec);
    if (spec.is_prime())
        s.r_ = 1 % spec.modulus();
    else
        s.q_ = 1;
    return s;
}

Scalar Scalar::from_int(const FieldSpec& spec, std::int64_t n) {
    Scalar s(spec);
    if (spec.is_prime()) {
        const std::int64_t p = spec.modulus();
        s.r_ = ((n % p) + p) % p;
    } else {
        s.q_ = n;
    }
    return s;
}

Scalar Scalar::from_big(const FieldSpec& spec, const BigInt& n) {
    Scalar s(spec);
    if (spec.is_prime()) {
        const std::int64_t p = spec.modulus();
        BigInt r = n % p;
        if (r < 0) r += p;
        s.r_ = r.convert_to<std::int64_t>();
    } else {
        s.q_ = BigRational(n);
    }
    return s;
}

Scalar Scalar::fraction(const FieldSpec& spec, const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw DivisionByZeroError();
    if (spec.is_prime())
        return from_big(spec, num) / from_big(spec, den);
    Scalar s(spec);
    s.q_ = BigRational(num, den); // cpp_rational canonicalizes
    return s;
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& spec) {
    std::size_t i = 0;
    const auto fail = [&](const char* msg) { throw ParseError(msg, i); };

    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    const auto read_nat = [&]() {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected a digit");
        BigInt v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return v;
    };

    BigInt num = read_nat();
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_nat();
    }
    if (i != text.size())
        fail("trailing characters in scalar");
    if (negative) num = -num;
    return fraction(spec, num, den);
}

bool Scalar::is_zero() const {
    return spec_.is_prime() ? r_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
    return spec_.is_prime() ? r_ == 1 % spec_.modulus() : q_ == 1;
}

std::int64_t Scalar::residue() const {
    if (!spec_.is_prime())
        throw DomainError("residue() requires a prime field");
    return r_;
}

const BigRational& Scalar::value() const {
    if (!spec_.is_rational())
        throw DomainError("value() requires the rational field");
    return q_;
}

void Scalar::require_same_spec(const Scalar& rhs) const {
    if (spec_ != rhs.spec_)
        throw DomainError("field mismatch: " + spec_.to_string() + " vs " + rhs.spec_.to_string());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_spec(rhs);
    Scalar out(spec_);
    if (spec_.is_prime())
        out.r_ = (r_ + rhs.r_) % spec_.modulus();
    else
        out.q_ = q_ + rhs.q_;
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_spec(rhs);
    Scalar out(spec_);
    if (spec_.is_prime()) {
        const std::int64_t p = spec_.modulus();
        out.r_ = (r_ - rhs.r_ + p) % p;
    } else {
        out.q_ = q_ - rhs.q_;
    }
    return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_spec(rhs);
    Scalar out(spec_);
    if (spec_.is_prime())
        out.r_ = (r_ * rhs.r_) % spec_.modulus(); // p < 2^31, so no overflow
    else
        out.q_ = q_ * rhs.q_;
    return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inv();
}

Scalar Scalar::operator-() const {
    Scalar out(spec_);
    if (spec_.is_prime())
        out.r_ = r_ == 0 ? 0 : spec_.modulus() - r_;
    else
        out.q_ = -q_;
    return out;
}

Scalar Scalar::inv() const {
    if (is_zero())
        throw DivisionByZeroError();
    Scalar out(spec_);
    if (spec_.is_prime())
        out.r_ = mod_inverse(r_, spec_.modulus());
    else
        out.q_ = 1 / q_;
    return out;
}

Scalar Scalar::pow(std::uint64_t n) const {
    Scalar result = one(spec_);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (spec_ != rhs.spec_)
        return false;
    return spec_.is_prime() ? r_ == rhs.r_ : q_ == rhs.q_;
}

std::string Scalar::to_string() const {
    if (spec_.is_prime())
        return std::to_string(r_);
    const BigInt num = boost::multiprecision::numerator(q_);
    const BigInt den = boost::multiprecision::denominator(q_);
    std::string out = num.str();
    if (den != 1)
        out += "/" + den.str();
    return out;
}

} // namespace qgr
