// Command-line frontend: build a quiver representation from a plane curve,
// test membership, enumerate Grassmannians over small finite fields, and run
// the transported elliptic group law.
//
// Exit codes: 0 success (including non-member verdicts), 2 input error,
// 3 enumeration guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgr/elliptic.hpp"
#include "qgr/poly.hpp"
#include "qgr/quiver.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string field_text = "q";
    std::uint64_t guard = qgr::kDefaultEnumerationGuard;
    std::string format = "text";
    bool show_curve = false;
};

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_file);
        if (!out)
            throw qgr::Error("cannot open output file: " + out_file);
        out << text << "\n";
    }
}

qgr::QuiverRep load_rep(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw qgr::Error("cannot open representation file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw qgr::SerializationError(std::string("malformed JSON: ") + e.what());
    }
    return qgr::deserialize_rep(doc);
}

void print_build_diagnostics(const qgr::HomogeneousPoly& poly, std::uint64_t guard) {
    if (!poly.spec().is_prime())
        return;
    const std::string field = "F_" + std::to_string(poly.spec().modulus());
    try {
        if (auto witness = qgr::reducibility_witness(poly, guard)) {
            std::cerr << "warning: curve is reducible over " << field << ": ("
                      << witness->first.to_string() << ") * (" << witness->second.to_string()
                      << ")\n";
        }
    } catch (const qgr::FeasibilityError&) {
        std::cerr << "note: reducibility check skipped (search space above guard)\n";
    }
    try {
        for (const auto& pt : qgr::singular_points(poly, guard))
            std::cerr << "warning: " << field << "-rational singular point at " << pt.to_string()
                      << "\n";
    } catch (const qgr::FeasibilityError&) {
        std::cerr << "note: singular-point check skipped (P^2 scan above guard)\n";
    }
}

std::string grass_point_line(const qgr::GrassPoint& gp) {
    return gp.line2.to_string() + "  line3=" + gp.line3.to_string();
}

qgr::GrassPoint parse_grass_point(const qgr::QuiverRep& rep, const std::string& text) {
    const qgr::ProjPoint y = qgr::ProjPoint::parse(text, rep.spec());
    auto gp = qgr::membership(rep, y);
    if (!gp)
        throw qgr::DomainError("point " + text + " is not in the Grassmannian");
    return std::move(*gp);
}

int run(int argc, char** argv) {
    CLI::App app{"Plane curves as quiver Grassmannians"};
    app.require_subcommand(1);
    Options opt;

    // --- build ---------------------------------------------------------
    auto* build = app.add_subcommand("build", "Construct the representation of a curve");
    std::string build_poly;
    std::string build_out;
    build->add_option("--poly", build_poly, "curve equation, e.g. \"y^2*z - x^3 - x*z^2 - z^3\"")
        ->required();
    build->add_option("--field", opt.field_text, "field spec: p:<prime> or q")->required();
    build->add_option("-o,--output", build_out, "write the JSON document to a file");
    build->add_option("--guard", opt.guard, "cap on diagnostic searches");
    build->callback([&] {
        const qgr::FieldSpec spec = qgr::FieldSpec::parse(opt.field_text);
        const qgr::HomogeneousPoly poly = qgr::parse_poly(build_poly, spec);
        const qgr::QuiverRep rep = qgr::build_representation(poly);
        print_build_diagnostics(poly, opt.guard);
        emit(qgr::serialize_rep(rep).dump(2), build_out);
    });

    // --- member --------------------------------------------------------
    auto* member = app.add_subcommand("member", "Test a point against the membership criterion");
    std::string member_rep;
    std::string member_point;
    member->add_option("--rep", member_rep, "representation JSON file")->required();
    member->add_option("--point", member_point, "projective point [a:b:...:c]")->required();
    member->add_option("--format", opt.format, "json or text");
    member->callback([&] {
        const qgr::QuiverRep rep = load_rep(member_rep);
        const qgr::ProjPoint y = qgr::ProjPoint::parse(member_point, rep.spec());
        const auto result = qgr::check_membership(rep, y);
        if (const auto* gp = std::get_if<qgr::GrassPoint>(&result)) {
            if (opt.format == "json")
                emit(json{{"verdict", "member"}, {"line3", gp->line3.to_string()}}.dump(2), "");
            else
                emit("member\nline3: " + gp->line3.to_string(), "");
        } else {
            const auto& failure = std::get<qgr::MembershipFailure>(result);
            if (opt.format == "json")
                emit(json{{"verdict", "non-member"}, {"failed", failure.to_string()}}.dump(2), "");
            else
                emit("non-member\nfailed: " + failure.to_string(), "");
        }
    });

    // --- enumerate -----------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "List every Grassmannian point over F_p");
    std::string enum_rep;
    enumerate->add_option("--rep", enum_rep, "representation JSON file")->required();
    enumerate->add_option("--guard", opt.guard, "ambient enumeration guard");
    enumerate->add_option("--format", opt.format, "json or text");
    enumerate->callback([&] {
        const qgr::QuiverRep rep = load_rep(enum_rep);
        const auto points = qgr::enumerate_grassmannian(rep, opt.guard);
        if (opt.format == "json") {
            json arr = json::array();
            for (const auto& gp : points)
                arr.push_back({{"line2", gp.line2.to_string()}, {"line3", gp.line3.to_string()}});
            emit(json{{"count", points.size()}, {"points", std::move(arr)}}.dump(2), "");
        } else {
            std::ostringstream out;
            for (const auto& gp : points)
                out << grass_point_line(gp) << "\n";
            out << "count: " << points.size();
            emit(out.str(), "");
        }
    });

    // --- curve-points ----------------------------------------------------
    auto* curve_points =
        app.add_subcommand("curve-points", "Count the F_p-rational points of a curve directly");
    std::string cp_poly;
    curve_points->add_option("--poly", cp_poly, "curve equation")->required();
    curve_points->add_option("--field", opt.field_text, "field spec: p:<prime>")->required();
    curve_points->add_option("--guard", opt.guard, "P^2 enumeration guard");
    curve_points->add_option("--format", opt.format, "json or text");
    curve_points->callback([&] {
        const qgr::FieldSpec spec = qgr::FieldSpec::parse(opt.field_text);
        if (!spec.is_prime())
            throw qgr::DomainError("curve-points needs a finite field");
        const qgr::HomogeneousPoly poly = qgr::parse_poly(cp_poly, spec);
        std::vector<qgr::ProjPoint> points;
        qgr::ProjectivePointStream stream(2, spec, opt.guard);
        while (auto pt = stream.next())
            if (qgr::vanishes_at(poly, *pt))
                points.push_back(std::move(*pt));
        if (opt.format == "json") {
            json arr = json::array();
            for (const auto& pt : points)
                arr.push_back(pt.to_string());
            emit(json{{"count", points.size()}, {"points", std::move(arr)}}.dump(2), "");
        } else {
            std::ostringstream out;
            for (const auto& pt : points)
                out << pt.to_string() << "\n";
            out << "count: " << points.size();
            emit(out.str(), "");
        }
    });

    // --- ec --------------------------------------------------------------
    auto* ec = app.add_subcommand("ec", "Transported elliptic group law on Grassmannian points");
    ec->require_subcommand(1);
    std::string ec_a = "0", ec_b = "0";
    std::vector<std::string> ec_points;
    ec->add_option("--a", ec_a, "Weierstrass coefficient a")->required();
    ec->add_option("--b", ec_b, "Weierstrass coefficient b")->required();
    ec->add_option("--field", opt.field_text, "field spec: p:<prime> or q")->required();
    // allow_extra_args(false) also keeps CLI11 from eating the [...] brackets
    ec->add_option("--points", ec_points,
                   "operand GrassPoint as [a:...:j]; repeat the flag for two operands")
        ->allow_extra_args(false);
    ec->add_option("--format", opt.format, "json or text");
    ec->add_flag("--show-curve", opt.show_curve, "also print decoded curve points");

    const auto make_rep = [&] {
        const qgr::FieldSpec spec = qgr::FieldSpec::parse(opt.field_text);
        const qgr::Scalar a = qgr::Scalar::parse(ec_a, spec);
        const qgr::Scalar b = qgr::Scalar::parse(ec_b, spec);
        const qgr::WeierstrassCurve curve(a, b); // exits 2 on a singular curve
        return qgr::build_representation(curve.to_poly());
    };
    const auto print_result = [&](const qgr::QuiverRep& rep, const qgr::GrassPoint& gp) {
        std::string line = gp.line2.to_string();
        if (opt.show_curve)
            line += "  curve=" + qgr::decode_grass_point(rep, gp).to_string();
        emit(line, "");
    };

    auto* ec_identity = ec->add_subcommand("identity", "Print the identity point");
    ec_identity->fallthrough();
    ec_identity->callback([&] {
        const auto rep = make_rep();
        print_result(rep, qgr::gr_identity(rep));
    });

    auto* ec_add = ec->add_subcommand("add", "Add two Grassmannian points");
    ec_add->fallthrough();
    ec_add->callback([&] {
        const auto rep = make_rep();
        if (ec_points.size() != 2)
            throw qgr::DomainError("ec add needs exactly two --points");
        const auto u = parse_grass_point(rep, ec_points[0]);
        const auto v = parse_grass_point(rep, ec_points[1]);
        print_result(rep, qgr::gr_add(rep, u, v));
    });

    auto* ec_neg = ec->add_subcommand("neg", "Negate a Grassmannian point");
    ec_neg->fallthrough();
    ec_neg->callback([&] {
        const auto rep = make_rep();
        if (ec_points.size() != 1)
            throw qgr::DomainError("ec neg needs exactly one --points");
        print_result(rep, qgr::gr_neg(rep, parse_grass_point(rep, ec_points[0])));
    });

    auto* ec_order = ec->add_subcommand("order", "Group order by affine scan");
    ec_order->fallthrough();
    ec_order->callback([&] {
        const auto rep = make_rep();
        const auto curve = qgr::weierstrass_from_rep(rep);
        if (opt.format == "json")
            emit(json{{"order", curve.group_order()}}.dump(2), "");
        else
            emit(std::to_string(curve.group_order()), "");
    });

    auto* ec_table = ec->add_subcommand("table", "Full addition table on Grassmannian points");
    ec_table->fallthrough();
    ec_table->callback([&] {
        const auto rep = make_rep();
        const auto points = qgr::grassmannian_group_points(rep);
        const auto n = points.size();
        if (opt.format == "json") {
            json legend = json::array();
            for (const auto& gp : points)
                legend.push_back(gp.line2.to_string());
            json table = json::array();
            for (std::size_t i = 0; i < n; ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < n; ++j)
                    row.push_back(qgr::gr_add(rep, points[i], points[j]).line2.to_string());
                table.push_back(std::move(row));
            }
            emit(json{{"order", n}, {"points", std::move(legend)}, {"table", std::move(table)}}
                     .dump(2),
                 "");
        } else {
            std::ostringstream out;
            for (std::size_t i = 0; i < n; ++i) {
                out << i << ": " << points[i].line2.to_string();
                if (opt.show_curve)
                    out << "  curve=" << qgr::decode_grass_point(rep, points[i]).to_string();
                out << "\n";
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const auto sum = qgr::gr_add(rep, points[i], points[j]);
                    std::size_t k = n;
                    for (std::size_t s = 0; s < n; ++s) {
                        if (points[s] == sum) {
                            k = s;
                            break;
                        }
                    }
                    out << (j == 0 ? "" : " ") << k;
                }
                out << "\n";
            }
            out << "order: " << n;
            emit(out.str(), "");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // flag misuse is an input error
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qgr::FeasibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "required guard: " << e.required_guard() << "\n";
        return 3;
    } catch (const qgr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
