#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgr/field.hpp"

namespace qgr {

/// Default cap on the size of any exhaustive projective-space enumeration.
inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// A point of P^N in canonical form: the first nonzero coordinate equals 1.
/// Equality and printing read the canonical representative, so two
/// proportional coordinate vectors construct equal points.
class ProjPoint {
public:
    /// Normalizes the representative; the zero vector is rejected.
    explicit ProjPoint(std::vector<Scalar> coords);

    int dimension() const { return static_cast<int>(coords_.size()) - 1; }
    const FieldSpec& spec() const { return coords_.front().spec(); }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    bool operator==(const ProjPoint& rhs) const;
    bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }

    /// "[a:b:...:c]" with field-scalar text forms.
    std::string to_string() const;
    static ProjPoint parse(std::string_view text, const FieldSpec& spec);

private:
    std::vector<Scalar> coords_;
};

/// |P^N(F_p)| = (p^(N+1) - 1) / (p - 1).
BigInt projective_point_count(int ambient_dim, std::int64_t p);

/// Streams every point of P^N(F_p) exactly once, in lexicographic order of
/// the canonical coordinate vectors, in constant memory. Restartable by
/// constructing a fresh stream; safe to run several streams concurrently.
class ProjectivePointStream {
public:
    ProjectivePointStream(int ambient_dim, const FieldSpec& spec,
                          std::uint64_t guard = kDefaultEnumerationGuard);

    std::uint64_t total() const { return total_; }
    std::optional<ProjPoint> next();

private:
    FieldSpec spec_;
    int n_;
    std::int64_t p_;
    std::uint64_t total_;
    int lead_;
    std::vector<std::int64_t> suffix_;
    bool done_ = false;
};

/// Materialized enumeration, for small spaces.
std::vector<ProjPoint> all_projective_points(int ambient_dim, const FieldSpec& spec,
                                             std::uint64_t guard = kDefaultEnumerationGuard);

} // namespace qgr
