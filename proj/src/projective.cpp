#include "qgr/projective.hpp"

#include <cctype>
#include <limits>

namespace qgr {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw DomainError("projective point needs at least one coordinate");
    const FieldSpec spec = coords_.front().spec();
    std::size_t pivot = coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].spec() != spec)
            throw DomainError("projective coordinates mix fields");
        if (pivot == coords_.size() && !coords_[i].is_zero())
            pivot = i;
    }
    if (pivot == coords_.size())
        throw DomainError("the zero vector has no projective class");
    if (!coords_[pivot].is_one()) {
        const Scalar scale = coords_[pivot].inv();
        for (auto& c : coords_)
            c = c * scale;
    }
}

bool ProjPoint::operator==(const ProjPoint& rhs) const {
    return coords_ == rhs.coords_;
}

std::string ProjPoint::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) out += ":";
        out += coords_[i].to_string();
    }
    out += "]";
    return out;
}

ProjPoint ProjPoint::parse(std::string_view text, const FieldSpec& spec) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin >= end || text[begin] != '[' || text[end - 1] != ']')
        throw ParseError("projective point must look like [a:b:...:c]", begin);

    std::vector<Scalar> coords;
    std::size_t pos = begin + 1;
    const std::size_t inner_end = end - 1;
    while (true) {
        std::size_t sep = pos;
        while (sep < inner_end && text[sep] != ':') ++sep;
        std::size_t lo = pos, hi = sep;
        while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
        while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
        if (lo == hi)
            throw ParseError("empty coordinate", pos);
        try {
            coords.push_back(Scalar::parse(text.substr(lo, hi - lo), spec));
        } catch (const ParseError& e) {
            throw ParseError("bad coordinate", lo + e.position());
        }
        if (sep == inner_end) break;
        pos = sep + 1;
    }
    return ProjPoint(std::move(coords));
}

BigInt projective_point_count(int ambient_dim, std::int64_t p) {
    BigInt power = 1;
    for (int i = 0; i <= ambient_dim; ++i)
        power *= p;
    return (power - 1) / (p - 1);
}

ProjectivePointStream::ProjectivePointStream(int ambient_dim, const FieldSpec& spec,
                                             std::uint64_t guard)
    : spec_(spec), n_(ambient_dim), p_(0), total_(0), lead_(ambient_dim) {
    if (!spec.is_prime())
        throw DomainError("projective enumeration needs a finite field");
    if (ambient_dim < 0)
        throw DomainError("ambient dimension must be nonnegative");
    p_ = spec.modulus();
    const BigInt count = projective_point_count(n_, p_);
    if (count > guard) {
        std::uint64_t required = std::numeric_limits<std::uint64_t>::max();
        if (count <= BigInt(required))
            required = count.convert_to<std::uint64_t>();
        throw FeasibilityError("P^" + std::to_string(n_) + "(F_" + std::to_string(p_) + ") has " +
                                   count.str() + " points, above the guard of " +
                                   std::to_string(guard),
                               required);
    }
    total_ = count.convert_to<std::uint64_t>();
}

std::optional<ProjPoint> ProjectivePointStream::next() {
    if (done_)
        return std::nullopt;

    std::vector<Scalar> coords;
    coords.reserve(static_cast<std::size_t>(n_) + 1);
    for (int i = 0; i < lead_; ++i)
        coords.push_back(Scalar::zero(spec_));
    coords.push_back(Scalar::one(spec_));
    for (std::int64_t digit : suffix_)
        coords.push_back(Scalar::from_int(spec_, digit));
    ProjPoint point(std::move(coords));

    // Advance: count up the suffix (leftmost digit most significant), then
    // move the leading 1 toward index 0.
    int i = static_cast<int>(suffix_.size()) - 1;
    while (i >= 0) {
        if (++suffix_[static_cast<std::size_t>(i)] < p_)
            break;
        suffix_[static_cast<std::size_t>(i)] = 0;
        --i;
    }
    if (i < 0) {
        --lead_;
        if (lead_ < 0)
            done_ = true;
        else
            suffix_.assign(static_cast<std::size_t>(n_ - lead_), 0);
    }
    return point;
}

std::vector<ProjPoint> all_projective_points(int ambient_dim, const FieldSpec& spec,
                                             std::uint64_t guard) {
    ProjectivePointStream stream(ambient_dim, spec, guard);
    std::vector<ProjPoint> points;
    points.reserve(stream.total());
    while (auto pt = stream.next())
        points.push_back(std::move(*pt));
    return points;
}

} // namespace qgr
