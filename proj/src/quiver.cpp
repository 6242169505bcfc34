#include "qgr/quiver.hpp"

namespace qgr {

QuiverRep::QuiverRep(const HomogeneousPoly& P)
    : spec_(P.spec()), d_(P.degree()), f_(linearize(P)), poly_(P) {
    // linearize has already rejected the zero polynomial and degree < 1.
    const AMatrixIndices idx(d_);
    for (int i = 0; i < 3; ++i) {
        auto& column = phi_[static_cast<std::size_t>(i)];
        column.reserve(static_cast<std::size_t>(idx.row_count()));
        for (int n = 0; n < idx.row_count(); ++n)
            column.push_back(idx.entry(n, i));
    }
}

std::vector<Scalar> QuiverRep::apply_phi(int i, const ProjPoint& y) const {
    if (y.dimension() + 1 != vertex2_dim())
        throw DomainError("point dimension mismatch: expected P^" +
                          std::to_string(vertex2_dim() - 1));
    const auto& column = phi_[static_cast<std::size_t>(i)];
    std::vector<Scalar> out;
    out.reserve(column.size());
    for (const int src : column)
        out.push_back(y[src]);
    return out;
}

bool QuiverRep::operator==(const QuiverRep& rhs) const {
    return spec_ == rhs.spec_ && d_ == rhs.d_ && f_ == rhs.f_ && phi_ == rhs.phi_ &&
           poly_ == rhs.poly_;
}

std::string MembershipFailure::to_string() const {
    if (kind == Kind::f_nonzero)
        return "f-condition";
    return "minor rows (" + std::to_string(row1) + "," + std::to_string(row2) + ") cols (" +
           std::to_string(col1) + "," + std::to_string(col2) + ")";
}

QuiverRep build_representation(const HomogeneousPoly& P) {
    return QuiverRep(P);
}

std::variant<GrassPoint, MembershipFailure> check_membership(const QuiverRep& rep,
                                                             const ProjPoint& y) {
    if (y.spec() != rep.spec())
        throw DomainError("point field differs from the representation field");
    if (y.dimension() + 1 != rep.vertex2_dim())
        throw DomainError("point has " + std::to_string(y.dimension() + 1) +
                          " coordinates but the representation needs " +
                          std::to_string(rep.vertex2_dim()));

    Scalar fy = Scalar::zero(rep.spec());
    for (int i = 0; i < rep.vertex2_dim(); ++i)
        fy = fy + rep.f()[static_cast<std::size_t>(i)] * y[i];
    if (!fy.is_zero())
        return MembershipFailure{MembershipFailure::Kind::f_nonzero};

    const std::array<std::vector<Scalar>, 3> cols{rep.apply_phi(0, y), rep.apply_phi(1, y),
                                                  rep.apply_phi(2, y)};
    const int mp = rep.vertex3_dim();
    for (int c1 = 0; c1 < 3; ++c1) {
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
            for (int r1 = 0; r1 < mp; ++r1) {
                for (int r2 = r1 + 1; r2 < mp; ++r2) {
                    const auto& a = cols[static_cast<std::size_t>(c1)];
                    const auto& b = cols[static_cast<std::size_t>(c2)];
                    const Scalar minor = a[static_cast<std::size_t>(r1)] * b[static_cast<std::size_t>(r2)] -
                                         a[static_cast<std::size_t>(r2)] * b[static_cast<std::size_t>(r1)];
                    if (!minor.is_zero())
                        return MembershipFailure{MembershipFailure::Kind::minor_nonzero, r1, r2,
                                                 c1, c2};
                }
            }
        }
    }

    for (const auto& col : cols) {
        for (const auto& v : col) {
            if (!v.is_zero())
                return GrassPoint{y, ProjPoint(col)};
        }
    }
    throw DomainError("A-matrix of a projective point cannot be zero");
}

std::optional<GrassPoint> membership(const QuiverRep& rep, const ProjPoint& y) {
    auto result = check_membership(rep, y);
    if (auto* gp = std::get_if<GrassPoint>(&result))
        return std::move(*gp);
    return std::nullopt;
}

bool validate_subrep(const QuiverRep& rep, const GrassPoint& candidate) {
    if (candidate.line2.spec() != rep.spec() || candidate.line3.spec() != rep.spec())
        return false;
    if (candidate.line2.dimension() + 1 != rep.vertex2_dim() ||
        candidate.line3.dimension() + 1 != rep.vertex3_dim())
        return false;

    // Arrow f: 2 -> 1 must map span(line2) into the zero subspace.
    Scalar fy = Scalar::zero(rep.spec());
    for (int i = 0; i < rep.vertex2_dim(); ++i)
        fy = fy + rep.f()[static_cast<std::size_t>(i)] * candidate.line2[i];
    if (!fy.is_zero())
        return false;

    // Arrows phi_i: 2 -> 3 must map span(line2) into span(line3).
    const int mp = rep.vertex3_dim();
    for (int i = 0; i < 3; ++i) {
        const std::vector<Scalar> col = rep.apply_phi(i, candidate.line2);
        for (int r1 = 0; r1 < mp; ++r1) {
            for (int r2 = r1 + 1; r2 < mp; ++r2) {
                const Scalar minor = col[static_cast<std::size_t>(r1)] * candidate.line3[r2] -
                                     col[static_cast<std::size_t>(r2)] * candidate.line3[r1];
                if (!minor.is_zero())
                    return false;
            }
        }
    }
    return true;
}

std::vector<GrassPoint> enumerate_grassmannian(const QuiverRep& rep, std::uint64_t guard) {
    ProjectivePointStream stream(rep.vertex2_dim() - 1, rep.spec(), guard);
    std::vector<GrassPoint> points;
    while (auto y = stream.next()) {
        if (auto gp = membership(rep, *y))
            points.push_back(std::move(*gp));
    }
    return points;
}

GrassPoint transport_morphism(const std::array<HomogeneousPoly, 3>& psi, const QuiverRep& src,
                              const QuiverRep& dst, const GrassPoint& u) {
    if (src.spec() != dst.spec())
        throw DomainError("source and target representations live over different fields");
    const int common = psi[0].degree();
    for (const auto& component : psi) {
        if (component.spec() != src.spec())
            throw DomainError("map components must share the source field");
        if (component.degree() != common)
            throw DomainError("map components must share a common degree");
    }
    if (!validate_subrep(src, u))
        throw DomainError("point is not a subrepresentation of the source");

    const ProjPoint pt = inverse_veronese(u.line2, src.degree());
    std::array<Scalar, 3> image{Scalar::zero(src.spec()), Scalar::zero(src.spec()),
                                Scalar::zero(src.spec())};
    bool any_nonzero = false;
    for (int i = 0; i < 3; ++i) {
        image[static_cast<std::size_t>(i)] = eval_poly(psi[static_cast<std::size_t>(i)], pt);
        any_nonzero = any_nonzero || !image[static_cast<std::size_t>(i)].is_zero();
    }
    if (!any_nonzero)
        throw UndefinedAtPointError("all map components vanish at " + pt.to_string());

    const ProjPoint image_pt(std::vector<Scalar>{image[0], image[1], image[2]});
    const ProjPoint embedded = veronese_map(image_pt, dst.degree());
    auto result = membership(dst, embedded);
    if (!result)
        throw NotAMorphismError("image " + image_pt.to_string() +
                                " is not on the target curve");
    return std::move(*result);
}

// --- serialization ----------------------------------------------------

nlohmann::json serialize_rep(const QuiverRep& rep) {
    nlohmann::json doc;
    doc["degree"] = rep.degree();
    if (rep.spec().is_prime())
        doc["field"] = {{"kind", "prime"}, {"p", rep.spec().modulus()}};
    else
        doc["field"] = {{"kind", "rational"}};
    doc["dimension_vector"] = {1, rep.vertex2_dim(), rep.vertex3_dim()};

    nlohmann::json f = nlohmann::json::array();
    for (const auto& c : rep.f())
        f.push_back(c.to_string());
    doc["f"] = std::move(f);

    nlohmann::json phis = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
        nlohmann::json ones = nlohmann::json::array();
        for (int row = 0; row < rep.vertex3_dim(); ++row)
            ones.push_back({row, rep.phi_column(i, row)});
        phis.push_back({{"rows", rep.vertex3_dim()},
                        {"cols", rep.vertex2_dim()},
                        {"ones", std::move(ones)}});
    }
    doc["phi"] = std::move(phis);
    doc["source_poly"] = rep.source_poly().to_string();
    return doc;
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end())
        throw SerializationError(std::string("missing field '") + name + "'");
    return *it;
}

QuiverRep deserialize_rep_impl(const nlohmann::json& doc);

} // namespace

QuiverRep deserialize_rep(const nlohmann::json& doc) {
    try {
        return deserialize_rep_impl(doc);
    } catch (const nlohmann::json::exception& e) {
        throw SerializationError(std::string("malformed value: ") + e.what());
    }
}

namespace {

QuiverRep deserialize_rep_impl(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw SerializationError("document is not a JSON object");

    const auto& field = require_field(doc, "field");
    const auto kind_it = field.find("kind");
    if (kind_it == field.end() || !kind_it->is_string())
        throw SerializationError("field.kind is missing");
    FieldSpec spec = FieldSpec::rationals();
    if (*kind_it == "prime") {
        const auto p_it = field.find("p");
        if (p_it == field.end() || !p_it->is_number_integer())
            throw SerializationError("field.p is missing");
        try {
            spec = FieldSpec::prime(p_it->get<std::int64_t>());
        } catch (const DomainError& e) {
            throw SerializationError(std::string("field.p: ") + e.what());
        }
    } else if (*kind_it != "rational") {
        throw SerializationError("field.kind must be 'prime' or 'rational'");
    }

    const auto& degree_json = require_field(doc, "degree");
    if (!degree_json.is_number_integer() || degree_json.get<std::int64_t>() < 1)
        throw SerializationError("degree must be a positive integer");
    const int degree = degree_json.get<int>();

    const auto& poly_json = require_field(doc, "source_poly");
    if (!poly_json.is_string())
        throw SerializationError("source_poly must be a string");
    HomogeneousPoly poly = HomogeneousPoly::zero(spec, 1);
    try {
        poly = parse_poly(poly_json.get<std::string>(), spec);
    } catch (const Error& e) {
        throw SerializationError(std::string("source_poly: ") + e.what());
    }
    if (poly.degree() != degree)
        throw SerializationError("degree does not match source_poly");

    // Everything else is determined by the source polynomial; the document
    // must agree with the canonical construction.
    QuiverRep canonical(poly);

    const auto& dims = require_field(doc, "dimension_vector");
    const std::array<int, 3> expected_dims = canonical.dimension_vector();
    if (!dims.is_array() || dims.size() != 3 || dims[0].get<int>() != expected_dims[0] ||
        dims[1].get<int>() != expected_dims[1] || dims[2].get<int>() != expected_dims[2])
        throw SerializationError("dimension_vector mismatch: degree " + std::to_string(degree) +
                                 " forces [1, " + std::to_string(expected_dims[1]) + ", " +
                                 std::to_string(expected_dims[2]) + "]");

    const auto& f_json = require_field(doc, "f");
    if (!f_json.is_array() || static_cast<int>(f_json.size()) != canonical.vertex2_dim())
        throw SerializationError("f must list exactly M scalars");
    for (int i = 0; i < canonical.vertex2_dim(); ++i) {
        const auto& entry = f_json[static_cast<std::size_t>(i)];
        if (!entry.is_string())
            throw SerializationError("f entries must be scalar strings");
        Scalar value = Scalar::zero(spec);
        try {
            value = Scalar::parse(entry.get<std::string>(), spec);
        } catch (const Error& e) {
            throw SerializationError(std::string("f entry: ") + e.what());
        }
        if (value != canonical.f()[static_cast<std::size_t>(i)])
            throw SerializationError("f does not equal the linearization of source_poly");
    }

    const auto& phis = require_field(doc, "phi");
    if (!phis.is_array() || phis.size() != 3)
        throw SerializationError("phi must list exactly three matrices");
    const int mp = canonical.vertex3_dim();
    for (int i = 0; i < 3; ++i) {
        const auto& phi = phis[static_cast<std::size_t>(i)];
        if (!phi.is_object())
            throw SerializationError("phi entries must be objects");
        if (require_field(phi, "rows").get<int>() != mp ||
            require_field(phi, "cols").get<int>() != canonical.vertex2_dim())
            throw SerializationError("phi shape mismatch");
        const auto& ones = require_field(phi, "ones");
        if (!ones.is_array() || static_cast<int>(ones.size()) != mp)
            throw SerializationError("phi must have exactly one 1 per row");
        std::vector<bool> seen(static_cast<std::size_t>(mp), false);
        int prev_row = -1;
        for (const auto& one : ones) {
            if (!one.is_array() || one.size() != 2)
                throw SerializationError("phi ones entries must be [row, col] pairs");
            const int row = one[0].get<int>();
            const int col = one[1].get<int>();
            if (row < 0 || row >= mp || col < 0 || col >= canonical.vertex2_dim())
                throw SerializationError("phi ones entry out of range");
            if (seen[static_cast<std::size_t>(row)])
                throw SerializationError("phi row has more than one 1");
            seen[static_cast<std::size_t>(row)] = true;
            if (row < prev_row)
                throw SerializationError("phi ones must be sorted by row");
            prev_row = row;
            if (canonical.phi_column(i, row) != col)
                throw SerializationError("phi row selects the wrong column for degree " +
                                         std::to_string(degree));
        }
    }

    return canonical;
}

} // namespace

} // namespace qgr
