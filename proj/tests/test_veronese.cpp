#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <string>

#include "qgr/veronese.hpp"

using qgr::AMatrixIndices;
using qgr::ExponentTuple;
using qgr::FieldSpec;
using qgr::MonomialBasis;
using qgr::ProjPoint;
using qgr::Scalar;

namespace {

const FieldSpec kF5 = FieldSpec::prime(5);
const FieldSpec kQ = FieldSpec::rationals();

ProjPoint make_point(const FieldSpec& spec, std::initializer_list<std::int64_t> values) {
    std::vector<Scalar> coords;
    for (const auto v : values)
        coords.push_back(Scalar::from_int(spec, v));
    return ProjPoint(std::move(coords));
}

} // namespace

TEST_CASE("monomial basis orders") {
    const MonomialBasis d3(3);
    CHECK(d3.size() == 10);
    const std::vector<ExponentTuple> expected{
        {{3, 0, 0}}, {{2, 1, 0}}, {{2, 0, 1}}, {{1, 2, 0}}, {{1, 1, 1}},
        {{1, 0, 2}}, {{0, 3, 0}}, {{0, 2, 1}}, {{0, 1, 2}}, {{0, 0, 3}}};
    CHECK(d3.order() == expected);
    CHECK(d3.index_of({{0, 2, 1}}) == 7); // y^2 z

    const MonomialBasis d1(1);
    CHECK(d1.order() == std::vector<ExponentTuple>{{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}});

    const MonomialBasis d2(2);
    CHECK(d2.size() == 6);
    const std::vector<ExponentTuple> expected2{{{2, 0, 0}}, {{1, 1, 0}}, {{1, 0, 1}},
                                               {{0, 2, 0}}, {{0, 1, 1}}, {{0, 0, 2}}};
    CHECK(d2.order() == expected2);

    CHECK_THROWS_AS(MonomialBasis(0), qgr::DomainError);
    CHECK_THROWS_AS(d3.index_of({{1, 0, 0}}), qgr::DomainError);
}

TEST_CASE("veronese map examples") {
    CHECK(qgr::veronese_map(make_point(kF5, {0, 1, 0}), 3).to_string() ==
          "[0:0:0:0:0:0:1:0:0:0]"); // the y^3 slot

    CHECK(qgr::veronese_map(make_point(kQ, {1, 1, 1}), 2).to_string() == "[1:1:1:1:1:1]");

    CHECK(qgr::veronese_map(make_point(kF5, {1, 2, 1}), 3).to_string() ==
          "[1:2:1:4:2:1:3:4:2:1]");
}

TEST_CASE("A-matrix index tables") {
    const AMatrixIndices d2(2);
    CHECK(d2.row_count() == 3);
    CHECK(d2.ambient_size() == 6);
    const int expected2[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    for (int n = 0; n < 3; ++n)
        for (int i = 0; i < 3; ++i)
            CHECK(d2.entry(n, i) == expected2[n][i]);

    const AMatrixIndices d3(3);
    CHECK(d3.row_count() == 6);
    CHECK(d3.ambient_size() == 10);

    const AMatrixIndices d1(1);
    CHECK(d1.row_count() == 1);
    CHECK(d1.row(0) == ExponentTuple{{0, 0, 0}});
    for (int i = 0; i < 3; ++i)
        CHECK(d1.entry(0, i) == i);
}

TEST_CASE("every coordinate index appears in the A-matrix table") {
    for (int d = 1; d <= 5; ++d) {
        const AMatrixIndices idx(d);
        std::set<int> seen;
        for (int n = 0; n < idx.row_count(); ++n)
            for (int i = 0; i < 3; ++i)
                seen.insert(idx.entry(n, i));
        CHECK(static_cast<int>(seen.size()) == idx.ambient_size());
    }
}

TEST_CASE("evaluate_a_matrix") {
    const AMatrixIndices d1(1);
    const auto m1 = qgr::evaluate_a_matrix(d1, make_point(kF5, {1, 2, 3}));
    CHECK(m1.size() == 1);
    CHECK(m1[0][0] == Scalar::from_int(kF5, 1));
    CHECK(m1[0][1] == Scalar::from_int(kF5, 2));
    CHECK(m1[0][2] == Scalar::from_int(kF5, 3));

    const AMatrixIndices d2(2);
    const auto all_ones = qgr::evaluate_a_matrix(d2, qgr::veronese_map(make_point(kQ, {1, 1, 1}), 2));
    CHECK(qgr::rank_at_most_one(all_ones));

    // y = [1:0:0:1:0:0] is not a Veronese image: rows (1,0,0), (0,1,0), (0,0,0)
    const auto bad = qgr::evaluate_a_matrix(d2, make_point(kQ, {1, 0, 0, 1, 0, 0}));
    CHECK(bad[0][0] == Scalar::one(kQ));
    CHECK(bad[1][1] == Scalar::one(kQ));
    CHECK(bad[2][0].is_zero());
    CHECK(!qgr::rank_at_most_one(bad));

    CHECK_THROWS_AS(qgr::evaluate_a_matrix(d2, make_point(kQ, {1, 0, 0})), qgr::DomainError);
}

TEST_CASE("rank_at_most_one on corner cases") {
    const auto zero = Scalar::zero(kQ);
    const auto one = Scalar::one(kQ);
    CHECK(qgr::rank_at_most_one({{one, one, one}, {one, one, one}, {one, one, one}}));
    CHECK(qgr::rank_at_most_one({{zero, zero, zero}, {zero, zero, zero}})); // rank 0 <= 1
    CHECK(qgr::rank_at_most_one({{one, one, one}}));                        // single row
    CHECK(!qgr::rank_at_most_one({{one, zero, zero}, {zero, one, zero}}));
}

TEST_CASE("linearize") {
    // Weierstrass cubic with a = 2, b = 3 over Q: support {0, 5, 7, 9},
    // coefficients (-1, -a, +1, -b).
    const auto P = qgr::parse_poly("y^2*z - x^3 - 2*x*z^2 - 3*z^3", kQ);
    const auto f = qgr::linearize(P);
    REQUIRE(f.size() == 10);
    CHECK(f[0] == Scalar::from_int(kQ, -1));
    CHECK(f[5] == Scalar::from_int(kQ, -2));
    CHECK(f[7] == Scalar::one(kQ));
    CHECK(f[9] == Scalar::from_int(kQ, -3));
    for (const int i : {1, 2, 3, 4, 6, 8})
        CHECK(f[static_cast<std::size_t>(i)].is_zero());

    // degenerate double line, unit use only
    const auto f2 = qgr::linearize(qgr::parse_poly("x^2", kF5));
    CHECK(f2[0].is_one());
    for (std::size_t i = 1; i < 6; ++i)
        CHECK(f2[i].is_zero());

    CHECK_THROWS_AS(qgr::linearize(qgr::HomogeneousPoly::zero(kQ, 2)),
                    qgr::EmptyPolynomialError);
}

TEST_CASE("f . veronese(pt) = P(pt) on random points") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<std::int64_t> val(0, 4);
    const auto P = qgr::parse_poly("y^2*z - x^3 - x*z^2 - z^3", kF5);
    const auto f = qgr::linearize(P);
    const MonomialBasis basis(3);
    int checked = 0;
    while (checked < 100) {
        const std::array<Scalar, 3> pt{Scalar::from_int(kF5, val(rng)),
                                       Scalar::from_int(kF5, val(rng)),
                                       Scalar::from_int(kF5, val(rng))};
        if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero())
            continue;
        ++checked;
        // evaluate monomials without normalizing, to compare exactly
        Scalar dot = Scalar::zero(kF5);
        for (int i = 0; i < basis.size(); ++i) {
            Scalar mono = Scalar::one(kF5);
            for (int v = 0; v < 3; ++v) {
                const int k = basis.at(i).e[static_cast<std::size_t>(v)];
                if (k > 0)
                    mono = mono * pt[static_cast<std::size_t>(v)].pow(static_cast<std::uint64_t>(k));
            }
            dot = dot + f[static_cast<std::size_t>(i)] * mono;
        }
        CHECK(dot == qgr::eval_poly(P, pt));
    }
}

TEST_CASE("inverse veronese examples") {
    const auto pt = make_point(kF5, {1, 2, 1});
    CHECK(qgr::inverse_veronese(qgr::veronese_map(pt, 3), 3) == pt);

    CHECK(qgr::inverse_veronese(make_point(kF5, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}), 3) ==
          make_point(kF5, {0, 1, 0}));

    const auto p2 = make_point(kF5, {2, 3, 4});
    CHECK(qgr::inverse_veronese(p2, 1) == p2);

    CHECK_THROWS_AS(qgr::inverse_veronese(make_point(kQ, {1, 0, 0, 1, 0, 0}), 2),
                    qgr::NotInImageError);
}

TEST_CASE("round trip and injectivity, exhaustive for p in {2, 3}, d in {1..3}") {
    // the acceptance suite extends this to p in {2,3,5,7} and d up to 4
    for (const std::int64_t p : {2, 3}) {
        const auto spec = FieldSpec::prime(p);
        const auto plane = qgr::all_projective_points(2, spec);
        for (int d = 1; d <= 3; ++d) {
            std::set<std::string> images;
            for (const auto& pt : plane) {
                const auto image = qgr::veronese_map(pt, d);
                CHECK(qgr::inverse_veronese(image, d) == pt);
                images.insert(image.to_string());
            }
            CHECK(images.size() == plane.size());
        }
    }
}

TEST_CASE("rank criterion characterizes the image, exhaustive for d = 2, p = 2") {
    const auto spec = FieldSpec::prime(2);
    std::set<std::string> image;
    for (const auto& pt : qgr::all_projective_points(2, spec))
        image.insert(qgr::veronese_map(pt, 2).to_string());

    const AMatrixIndices idx(2);
    std::set<std::string> rank_one;
    for (const auto& y : qgr::all_projective_points(5, spec))
        if (qgr::rank_at_most_one(qgr::evaluate_a_matrix(idx, y)))
            rank_one.insert(y.to_string());

    CHECK(image == rank_one);
}

TEST_CASE("all nonzero rows of a rank-1 A-matrix agree projectively") {
    const auto spec = FieldSpec::prime(3);
    const AMatrixIndices idx(2);
    for (const auto& pt : qgr::all_projective_points(2, spec)) {
        const auto y = qgr::veronese_map(pt, 2);
        const auto mat = qgr::evaluate_a_matrix(idx, y);
        for (const auto& row : mat) {
            bool nonzero = false;
            for (const auto& v : row)
                nonzero = nonzero || !v.is_zero();
            if (nonzero)
                CHECK(ProjPoint(row) == pt);
        }
    }
}
