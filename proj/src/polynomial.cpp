#include "ncp/polynomial.hpp"

#include "ncp/errors.hpp"

#include <cctype>
#include <sstream>

namespace ncp {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs, PolyBasis basis)
    : coeffs_(std::move(coeffs)), basis_(basis) {
    trim();
}

RationalPolynomial RationalPolynomial::zero(PolyBasis basis) {
    return RationalPolynomial({}, basis);
}

RationalPolynomial RationalPolynomial::constant(const Rational& c, PolyBasis basis) {
    return RationalPolynomial({c}, basis);
}

RationalPolynomial RationalPolynomial::x() {
    return RationalPolynomial({0, 1}, PolyBasis::monomial);
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int RationalPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool RationalPolynomial::is_zero() const { return coeffs_.empty(); }

Rational RationalPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

RationalPolynomial RationalPolynomial::to_basis(PolyBasis basis) const {
    if (basis == basis_) return *this;
    if (basis == PolyBasis::monomial) {
        // expand each H_k, built incrementally as H_k = H_{k-1} * (X - k + 1) / k
        std::vector<Rational> out;
        std::vector<Rational> h{1};  // H_0
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k > 0) {
                std::vector<Rational> next(h.size() + 1, 0);
                Rational shift = -Rational(static_cast<int>(k) - 1);
                for (std::size_t i = 0; i < h.size(); ++i) {
                    next[i + 1] += h[i];
                    next[i] += h[i] * shift;
                }
                for (auto& c : next) c /= static_cast<int>(k);
                h = std::move(next);
            }
            if (coeffs_[k] == 0) continue;
            if (out.size() < h.size()) out.resize(h.size(), 0);
            for (std::size_t i = 0; i < h.size(); ++i) out[i] += coeffs_[k] * h[i];
        }
        return RationalPolynomial(std::move(out), PolyBasis::monomial);
    }
    // monomial -> binomial: strip leading terms downward
    std::vector<Rational> rest = coeffs_;
    std::vector<Rational> out(coeffs_.size(), 0);
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    while (!rest.empty()) {
        int d = static_cast<int>(rest.size()) - 1;
        Rational c = rest.back() * factorial(d);  // H_d has leading coefficient 1/d!
        out[d] = c;
        std::vector<Rational> hc(d + 1, 0);
        hc[d] = 1;
        RationalPolynomial hd(std::move(hc), PolyBasis::binomial_falling);
        RationalPolynomial expanded = hd.to_basis(PolyBasis::monomial);
        for (int i = 0; i <= d; ++i) rest[i] -= c * expanded.coefficient(i);
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
    }
    return RationalPolynomial(std::move(out), PolyBasis::binomial_falling);
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    RationalPolynomial rhs = o.basis_ == basis_ ? o : o.to_basis(basis_);
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return RationalPolynomial(std::move(out), basis_);
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    return *this + o.scaled(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    RationalPolynomial a = to_basis(PolyBasis::monomial);
    RationalPolynomial b = o.to_basis(PolyBasis::monomial);
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out), PolyBasis::monomial);
}

RationalPolynomial RationalPolynomial::scaled(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& v : out) v *= c;
    return RationalPolynomial(std::move(out), basis_);
}

bool RationalPolynomial::operator==(const RationalPolynomial& o) const {
    return to_basis(PolyBasis::monomial).coeffs_ ==
           o.to_basis(PolyBasis::monomial).coeffs_;
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
    if (basis_ == PolyBasis::monomial) {
        Rational r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }
    Rational r = 0, term = 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) term *= (x - Rational(static_cast<int>(k) - 1)) / static_cast<int>(k);
        r += coeffs_[k] * term;
    }
    return r;
}

RationalPolynomial RationalPolynomial::reflected() const {
    RationalPolynomial m = to_basis(PolyBasis::monomial);
    for (std::size_t k = 1; k < m.coeffs_.size(); k += 2) m.coeffs_[k] = -m.coeffs_[k];
    return m;
}

RationalPolynomial RationalPolynomial::antidifference() const {
    RationalPolynomial b = to_basis(PolyBasis::binomial_falling);
    std::vector<Rational> out(b.coeffs_.size() + 1, 0);
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k + 1] = b.coeffs_[k];
    return RationalPolynomial(std::move(out), PolyBasis::binomial_falling);
}

std::string RationalPolynomial::text() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string name;
        if (k > 0) {
            if (basis_ == PolyBasis::monomial)
                name = k == 1 ? "X" : "X^" + std::to_string(k);
            else
                name = "H" + std::to_string(k);
        }
        if (name.empty()) {
            out << format_rational(a);
        } else if (a == 1) {
            out << name;
        } else {
            out << format_rational(a) << '*' << name;
        }
        first = false;
    }
    return out.str();
}

RationalPolynomial RationalPolynomial::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");
    if (s == "0") return zero();

    std::vector<Rational> coeffs;
    bool saw_h = false, saw_x = false;
    std::size_t pos = 0;
    int sign = 1;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        pos = 1;
    }
    while (pos < s.size()) {
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw ParseError("malformed polynomial '" + text + "'");

        Rational coeff = 1;
        int power = 0;
        auto var = term.find_first_of("XH");
        if (var == std::string::npos) {
            coeff = parse_rational(term);
        } else {
            std::string head = term.substr(0, var);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) coeff = parse_rational(head);
            char kind = term[var];
            std::string tail = term.substr(var + 1);
            if (kind == 'X') {
                saw_x = true;
                if (tail.empty()) {
                    power = 1;
                } else {
                    if (tail[0] != '^') throw ParseError("expected '^' after X");
                    power = std::stoi(tail.substr(1));
                }
            } else {
                saw_h = true;
                if (tail.empty()) throw ParseError("H needs an index");
                power = std::stoi(tail);
            }
            if (power < 0) throw ParseError("negative exponent");
        }
        if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(power + 1, 0);
        coeffs[power] += sign * coeff;

        if (end == s.size()) break;
        sign = s[end] == '-' ? -1 : 1;
        pos = end + 1;
    }
    if (saw_h && saw_x) throw ParseError("mixed bases in polynomial '" + text + "'");
    return RationalPolynomial(std::move(coeffs),
                              saw_h ? PolyBasis::binomial_falling : PolyBasis::monomial);
}

RationalPolynomial lagrange_interpolate(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& values) {
    if (nodes.size() != values.size()) throw Error("interpolation size mismatch");
    RationalPolynomial result = RationalPolynomial::zero();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        RationalPolynomial term = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            term = term * (RationalPolynomial::x() -
                           RationalPolynomial::constant(nodes[j]));
            denom *= nodes[i] - nodes[j];
        }
        if (denom == 0) throw Error("repeated interpolation node");
        result = result + term.scaled(values[i] / denom);
    }
    return result;
}

} // namespace ncp
