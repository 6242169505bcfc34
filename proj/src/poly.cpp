#include "qgr/poly.hpp"

#include <cctype>
#include <limits>

namespace qgr {

ExponentTuple ExponentTuple::plus_unit(int i) const {
    ExponentTuple out = *this;
    out.e[static_cast<std::size_t>(i)] += 1;
    return out;
}

ExponentTuple ExponentTuple::minus_unit(int i) const {
    ExponentTuple out = *this;
    out.e[static_cast<std::size_t>(i)] -= 1;
    return out;
}

std::vector<ExponentTuple> monomials_of_degree(int d) {
    if (d < 0)
        throw DomainError("degree must be nonnegative");
    std::vector<ExponentTuple> out;
    out.reserve(static_cast<std::size_t>((d + 2) * (d + 1) / 2));
    for (int m0 = d; m0 >= 0; --m0)
        for (int m1 = d - m0; m1 >= 0; --m1)
            out.push_back(ExponentTuple{{m0, m1, d - m0 - m1}});
    return out;
}

HomogeneousPoly::HomogeneousPoly(const FieldSpec& spec, int degree, CoeffMap coeffs)
    : spec_(spec), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0)
        throw DomainError("degree must be nonnegative");
    for (const auto& [m, c] : coeffs_) {
        if (m.degree() != degree_)
            throw HomogeneityError("coefficient map holds a monomial of degree " +
                                   std::to_string(m.degree()) + " in a degree-" +
                                   std::to_string(degree_) + " polynomial");
        if (c.spec() != spec_)
            throw DomainError("coefficient field mismatch");
        if (c.is_zero())
            throw DomainError("zero coefficients must not be stored");
    }
}

HomogeneousPoly HomogeneousPoly::zero(const FieldSpec& spec, int degree) {
    return HomogeneousPoly(spec, degree, CoeffMap{});
}

Scalar HomogeneousPoly::coeff(const ExponentTuple& m) const {
    const auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Scalar::zero(spec_) : it->second;
}

bool HomogeneousPoly::operator==(const HomogeneousPoly& rhs) const {
    return spec_ == rhs.spec_ && degree_ == rhs.degree_ && coeffs_ == rhs.coeffs_;
}

std::string HomogeneousPoly::to_string() const {
    if (coeffs_.empty())
        return "0";
    static const char* kVars[3] = {"x", "y", "z"};
    std::string out;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        // Rationals may print with a sign; prime residues are never negative.
        bool negative = false;
        std::string mag = c.to_string();
        if (!mag.empty() && mag[0] == '-') {
            negative = true;
            mag.erase(0, 1);
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i < 3; ++i) {
            const int k = m.e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += kVars[i];
            if (k > 1) vars += "^" + std::to_string(k);
        }
        if (vars.empty()) {
            out += mag; // degree-0 polynomial (derivative output only)
        } else if (mag == "1") {
            out += vars;
        } else {
            out += mag + "*" + vars;
        }
    }
    return out;
}

// --- parser -----------------------------------------------------------

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const FieldSpec& spec) : text_(text), spec_(spec) {}

    HomogeneousPoly parse() {
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        read_term(negative);
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-')
                throw ParseError("expected '+' or '-' between terms", pos_);
            ++pos_;
            read_term(c == '-');
        }
        if (terms_.empty())
            throw EmptyPolynomialError();
        if (degree_ == 0)
            throw DomainError("constant polynomial: a curve equation needs degree >= 1");
        return HomogeneousPoly(spec_, degree_, std::move(terms_));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    BigInt read_nat() {
        if (!at_digit())
            throw ParseError("expected a number", pos_);
        BigInt v = 0;
        while (at_digit()) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    int read_exponent() {
        const std::size_t at = pos_;
        const BigInt v = read_nat();
        if (v > 1000)
            throw ParseError("exponent too large", at);
        return v.convert_to<int>();
    }

    // factor := ("x"|"y"|"z") ["^" nat]
    void read_factor(ExponentTuple& exps) {
        skip_ws();
        const char c = peek();
        int var;
        switch (c) {
            case 'x': var = 0; break;
            case 'y': var = 1; break;
            case 'z': var = 2; break;
            default: throw ParseError("expected a variable x, y, or z", pos_);
        }
        ++pos_;
        skip_ws();
        int k = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            k = read_exponent();
        }
        exps.e[static_cast<std::size_t>(var)] += k;
    }

    void read_term(bool negated) {
        skip_ws();
        Scalar coeff = Scalar::one(spec_);
        bool saw_coeff = false;
        if (peek() == '-') { // coeff := ["-"] nat ...
            ++pos_;
            skip_ws();
            negated = !negated;
            if (!at_digit())
                throw ParseError("expected a number after '-'", pos_);
        }
        if (at_digit()) {
            const BigInt num = read_nat();
            BigInt den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                den = read_nat();
            }
            coeff = Scalar::fraction(spec_, num, den);
            saw_coeff = true;
            skip_ws();
        }

        ExponentTuple exps;
        bool saw_factor = false;
        if (!saw_coeff || peek() == '*') {
            if (saw_coeff) {
                ++pos_; // consume '*'
            }
            read_factor(exps);
            saw_factor = true;
            while (true) {
                skip_ws();
                if (peek() != '*') break;
                ++pos_;
                read_factor(exps);
            }
        }
        if (!saw_coeff && !saw_factor)
            throw ParseError("expected a term", pos_);

        if (negated)
            coeff = -coeff;
        const int term_degree = exps.degree();
        if (degree_ < 0) {
            degree_ = term_degree;
        } else if (term_degree != degree_) {
            throw HomogeneityError("mixed degrees " + std::to_string(degree_) + " and " +
                                   std::to_string(term_degree) + ": input is not homogeneous");
        }
        if (coeff.is_zero())
            return; // e.g. "5*x" over F_5
        const auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    std::string_view text_;
    FieldSpec spec_;
    std::size_t pos_ = 0;
    int degree_ = -1;
    HomogeneousPoly::CoeffMap terms_;
};

} // namespace

HomogeneousPoly parse_poly(std::string_view text, const FieldSpec& spec) {
    return PolyParser(text, spec).parse();
}

Scalar eval_poly(const HomogeneousPoly& P, const std::array<Scalar, 3>& pt) {
    for (const auto& c : pt)
        if (c.spec() != P.spec())
            throw DomainError("evaluation point field mismatch");
    Scalar acc = Scalar::zero(P.spec());
    for (const auto& [m, c] : P.coeffs()) {
        Scalar term = c;
        for (int i = 0; i < 3; ++i) {
            const int k = m.e[static_cast<std::size_t>(i)];
            if (k > 0)
                term = term * pt[static_cast<std::size_t>(i)].pow(static_cast<std::uint64_t>(k));
        }
        acc = acc + term;
    }
    return acc;
}

Scalar eval_poly(const HomogeneousPoly& P, const ProjPoint& pt) {
    if (pt.dimension() != 2)
        throw DomainError("curve equations evaluate on P^2 points");
    return eval_poly(P, std::array<Scalar, 3>{pt[0], pt[1], pt[2]});
}

bool vanishes_at(const HomogeneousPoly& P, const ProjPoint& pt) {
    return eval_poly(P, pt).is_zero();
}

HomogeneousPoly partial_derivative(const HomogeneousPoly& P, int var) {
    if (var < 0 || var > 2)
        throw DomainError("variable index must be 0, 1, or 2");
    if (P.degree() == 0)
        return HomogeneousPoly::zero(P.spec(), 0);
    HomogeneousPoly::CoeffMap out;
    for (const auto& [m, c] : P.coeffs()) {
        const int k = m.e[static_cast<std::size_t>(var)];
        if (k == 0)
            continue;
        const Scalar factor = Scalar::from_int(P.spec(), k);
        const Scalar nc = c * factor;
        if (nc.is_zero())
            continue; // characteristic divides the exponent
        out.emplace(m.minus_unit(var), nc);
    }
    return HomogeneousPoly(P.spec(), P.degree() - 1, std::move(out));
}

HomogeneousPoly poly_mul(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.spec() != b.spec())
        throw DomainError("polynomial field mismatch");
    HomogeneousPoly::CoeffMap out;
    for (const auto& [ma, ca] : a.coeffs()) {
        for (const auto& [mb, cb] : b.coeffs()) {
            ExponentTuple m{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
            const Scalar prod = ca * cb;
            const auto it = out.find(m);
            if (it == out.end()) {
                if (!prod.is_zero())
                    out.emplace(m, prod);
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    }
    return HomogeneousPoly(a.spec(), a.degree() + b.degree(), std::move(out));
}

std::optional<HomogeneousPoly> poly_divide_exact(const HomogeneousPoly& P,
                                                 const HomogeneousPoly& g) {
    if (P.spec() != g.spec())
        throw DomainError("polynomial field mismatch");
    if (g.is_zero())
        throw DivisionByZeroError();
    if (P.is_zero() || P.degree() < g.degree())
        return std::nullopt;

    // Long division on the descending-lex order; for an exact factorization
    // the leading monomial of the remainder always stays divisible by
    // lead(g), so any failed monomial division disproves divisibility.
    HomogeneousPoly::CoeffMap rem = P.coeffs();
    HomogeneousPoly::CoeffMap quot;
    const auto& glead = *g.coeffs().begin();
    while (!rem.empty()) {
        const auto& rlead = *rem.begin();
        ExponentTuple t{{rlead.first.e[0] - glead.first.e[0],
                         rlead.first.e[1] - glead.first.e[1],
                         rlead.first.e[2] - glead.first.e[2]}};
        if (t.e[0] < 0 || t.e[1] < 0 || t.e[2] < 0)
            return std::nullopt;
        const Scalar tc = rlead.second / glead.second;
        quot.emplace(t, tc);
        for (const auto& [mg, cg] : g.coeffs()) {
            ExponentTuple m{{mg.e[0] + t.e[0], mg.e[1] + t.e[1], mg.e[2] + t.e[2]}};
            const Scalar delta = cg * tc;
            const auto it = rem.find(m);
            if (it == rem.end()) {
                rem.emplace(m, -delta);
            } else {
                it->second = it->second - delta;
                if (it->second.is_zero())
                    rem.erase(it);
            }
        }
    }
    return HomogeneousPoly(P.spec(), P.degree() - g.degree(), std::move(quot));
}

namespace {

// Iterates all coefficient vectors over the degree-k monomials whose first
// nonzero entry is 1 (one representative per scalar class), in a fixed order.
class CanonicalPolyIter {
public:
    CanonicalPolyIter(const FieldSpec& spec, int k)
        : spec_(spec), p_(spec.modulus()), basis_(monomials_of_degree(k)), k_(k),
          digits_(basis_.size(), 0) {}

    std::optional<HomogeneousPoly> next() {
        while (advance()) {
            std::size_t pivot = digits_.size();
            for (std::size_t i = 0; i < digits_.size(); ++i) {
                if (digits_[i] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == digits_.size() || digits_[pivot] != 1)
                continue;
            HomogeneousPoly::CoeffMap coeffs;
            for (std::size_t i = 0; i < digits_.size(); ++i)
                if (digits_[i] != 0)
                    coeffs.emplace(basis_[i], Scalar::from_int(spec_, digits_[i]));
            return HomogeneousPoly(spec_, k_, std::move(coeffs));
        }
        return std::nullopt;
    }

private:
    bool advance() {
        int i = static_cast<int>(digits_.size()) - 1;
        while (i >= 0) {
            if (++digits_[static_cast<std::size_t>(i)] < p_)
                return true;
            digits_[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        return false;
    }

    FieldSpec spec_;
    std::int64_t p_;
    std::vector<ExponentTuple> basis_;
    int k_;
    std::vector<std::int64_t> digits_;
};

} // namespace

std::optional<std::pair<HomogeneousPoly, HomogeneousPoly>>
reducibility_witness(const HomogeneousPoly& P, std::uint64_t max_p_guard) {
    if (!P.spec().is_prime())
        throw DomainError("reducibility search runs over prime fields only");
    if (P.is_zero())
        throw EmptyPolynomialError();
    const int d = P.degree();
    const std::int64_t p = P.spec().modulus();

    // Feasibility: the brute-force search space is bounded by the number of
    // coefficient vectors on the degree-(d-1) monomials.
    const int monomials = (d + 1) * d / 2;
    BigInt space = 1;
    for (int i = 0; i < monomials; ++i)
        space *= p;
    if (space > max_p_guard) {
        std::uint64_t required = std::numeric_limits<std::uint64_t>::max();
        if (space <= BigInt(required))
            required = space.convert_to<std::uint64_t>();
        throw FeasibilityError("reducibility search space " + space.str() +
                                   " exceeds the guard of " + std::to_string(max_p_guard),
                               required);
    }

    for (int k = 1; k <= d / 2; ++k) {
        CanonicalPolyIter candidates(P.spec(), k);
        while (auto g = candidates.next()) {
            if (auto h = poly_divide_exact(P, *g))
                return std::make_pair(std::move(*g), std::move(*h));
        }
    }
    return std::nullopt;
}

std::vector<ProjPoint> singular_points(const HomogeneousPoly& P, std::uint64_t guard) {
    if (!P.spec().is_prime())
        throw DomainError("singular-point search runs over prime fields only");
    const std::array<HomogeneousPoly, 3> partials{
        partial_derivative(P, 0), partial_derivative(P, 1), partial_derivative(P, 2)};

    std::vector<ProjPoint> found;
    ProjectivePointStream stream(2, P.spec(), guard);
    while (auto pt = stream.next()) {
        if (!vanishes_at(P, *pt))
            continue;
        bool all_zero = true;
        for (const auto& dP : partials) {
            if (!dP.is_zero() && !vanishes_at(dP, *pt)) {
                all_zero = false;
                break;
            }
        }
        if (all_zero)
            found.push_back(std::move(*pt));
    }
    return found;
}

} // namespace qgr
