#include "ncp/algebra.hpp"

#include "ncp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ncp {

// ---- Monomial ------------------------------------------------------------

Monomial::Monomial(NoncrossingPartition p) {
    if (!p.empty()) factors_.push_back(std::move(p));
}

Monomial::Monomial(std::vector<NoncrossingPartition> factors) {
    for (auto& f : factors)
        if (!f.empty()) factors_.push_back(std::move(f));
    std::sort(factors_.begin(), factors_.end());
}

int Monomial::total_blocks() const {
    int b = 0;
    for (const auto& f : factors_) b += f.block_count();
    return b;
}

int Monomial::total_legs() const {
    int l = 0;
    for (const auto& f : factors_) l += f.legs();
    return l;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<NoncrossingPartition> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return Monomial(std::move(all));
}

std::string Monomial::text() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << '.';
        out << '(' << factors_[i].text() << ')';
    }
    return out.str();
}

Monomial Monomial::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "1") return Monomial();
    std::vector<NoncrossingPartition> factors;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw ParseError("expected '(' in monomial '" + text + "'");
        auto close = s.find(')', i);
        if (close == std::string::npos)
            throw ParseError("unbalanced parentheses in monomial '" + text + "'");
        factors.push_back(NoncrossingPartition::parse(s.substr(i + 1, close - i - 1)));
        i = close + 1;
        if (i < s.size()) {
            if (s[i] != '.') throw ParseError("expected '.' between factors");
            ++i;
        }
    }
    return Monomial(std::move(factors));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = factors_.size() <=> o.factors_.size(); c != 0) return c;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (auto c = factors_[i] <=> o.factors_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// ---- AlgebraElement ------------------------------------------------------

AlgebraElement AlgebraElement::unit() {
    AlgebraElement e;
    e.add_term(Monomial(), 1);
    return e;
}

AlgebraElement AlgebraElement::from(const NoncrossingPartition& p) {
    return from(Monomial(p));
}

AlgebraElement AlgebraElement::from(const Monomial& m, const Rational& c) {
    AlgebraElement e;
    e.add_term(m, c);
    return e;
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

std::string AlgebraElement::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        out << format_rational(c) << '*' << m.text();
        first = false;
    }
    return out.str();
}

AlgebraElement AlgebraElement::parse(const std::string& text) {
    AlgebraElement e;
    std::string s = text;
    if (s.empty()) throw ParseError("empty element");
    if (s == "0") return e;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto next = s.find(" + ", pos);
        std::string term =
            next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        auto star = term.find('*');
        if (star == std::string::npos) {
            e.add_term(Monomial(), parse_rational(term));
        } else {
            e.add_term(Monomial::parse(term.substr(star + 1)),
                       parse_rational(term.substr(0, star)));
        }
        pos = next == std::string::npos ? s.size() : next + 3;
    }
    return e;
}

// ---- TensorElement -------------------------------------------------------

void TensorElement::add_term(const std::vector<Monomial>& key, const Rational& c) {
    if (static_cast<int>(key.size()) != order_)
        throw Error("tensor key order mismatch");
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

TensorElement TensorElement::scaled(const Rational& c) const {
    TensorElement r(order_);
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (order_ != o.order_) throw Error("tensor order mismatch in product");
    TensorElement r(order_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            std::vector<Monomial> k(order_);
            for (int i = 0; i < order_; ++i) k[i] = k1[i] * k2[i];
            r.add_term(k, c1 * c2);
        }
    return r;
}

std::string TensorElement::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        out << format_rational(c) << '*';
        for (int i = 0; i < order_; ++i) {
            if (i) out << " (x) ";
            out << k[i].text();
        }
        first = false;
    }
    return out.str();
}

// ---- coproducts ----------------------------------------------------------

TensorElement coproduct_separation(const NoncrossingPartition& p) {
    TensorElement t(2);
    int k = p.block_count();
    for (const auto& ideal : ideals(p)) {
        std::vector<char> in(k, 0);
        for (int b : ideal) in[b] = 1;
        std::vector<int> complement;
        for (int b = 0; b < k; ++b)
            if (!in[b]) complement.push_back(b);
        Monomial left(restrict_class(p, complement));
        Monomial right(restrict_blocks(p, ideal));
        t.add_term({left, right}, 1);
    }
    return t;
}

TensorElement coproduct_separation(const Monomial& m) {
    TensorElement t(2);
    t.add_term({Monomial(), Monomial()}, 1);
    for (const auto& f : m.factors()) t = t * coproduct_separation(f);
    return t;
}

TensorElement coproduct_separation(const AlgebraElement& x) {
    TensorElement t(2);
    for (const auto& [m, c] : x.terms()) t = t + coproduct_separation(m).scaled(c);
    return t;
}

TensorElement coproduct_fusion(const NoncrossingPartition& p) {
    TensorElement t(2);
    for (const auto& e : contractible_equivalences(p)) {
        Monomial left(quotient(p, e));
        std::vector<NoncrossingPartition> parts;
        for (const auto& cls : e.classes) parts.push_back(restrict_class(p, cls));
        Monomial right(std::move(parts));
        t.add_term({left, right}, 1);
    }
    return t;
}

TensorElement coproduct_fusion(const Monomial& m) {
    TensorElement t(2);
    t.add_term({Monomial(), Monomial()}, 1);
    for (const auto& f : m.factors()) t = t * coproduct_fusion(f);
    return t;
}

TensorElement coproduct_fusion(const AlgebraElement& x) {
    TensorElement t(2);
    for (const auto& [m, c] : x.terms()) t = t + coproduct_fusion(m).scaled(c);
    return t;
}

// ---- counits -------------------------------------------------------------

Rational counit_separation(const AlgebraElement& x) {
    auto it = x.terms().find(Monomial());
    return it == x.terms().end() ? Rational(0) : it->second;
}

Rational counit_fusion(const Monomial& m) {
    for (const auto& f : m.factors())
        if (f.block_count() != 1) return 0;
    return 1;
}

Rational counit_fusion(const AlgebraElement& x) {
    Rational r = 0;
    for (const auto& [m, c] : x.terms()) r += c * counit_fusion(m);
    return r;
}

// ---- iterated reduced coproduct -----------------------------------------

namespace {

TensorElement reduced_separation_first_slot(const TensorElement& t) {
    TensorElement r(t.order() + 1);
    for (const auto& [key, c] : t.terms()) {
        TensorElement cp = coproduct_separation(key[0]);
        for (const auto& [pair, c2] : cp.terms()) {
            if (pair[0].is_unit() || pair[1].is_unit()) continue;  // reduced part
            std::vector<Monomial> k{pair[0], pair[1]};
            k.insert(k.end(), key.begin() + 1, key.end());
            r.add_term(k, c * c2);
        }
    }
    return r;
}

} // namespace

TensorElement reduced_separation_iterate(const AlgebraElement& x, int k) {
    if (counit_separation(x) != 0)
        throw NotAugmentation("iterated reduced coproduct outside the augmentation ideal");
    TensorElement t(1);
    for (const auto& [m, c] : x.terms()) t.add_term({m}, c);
    for (int step = 0; step < k; ++step) t = reduced_separation_first_slot(t);
    return t;
}

// ---- structure checks ----------------------------------------------------

TensorElement apply_to_slot(const TensorElement& t, int slot,
                            TensorElement (*coproduct)(const Monomial&)) {
    TensorElement r(t.order() + 1);
    for (const auto& [key, c] : t.terms()) {
        TensorElement cp = coproduct(key[slot]);
        for (const auto& [pair, c2] : cp.terms()) {
            std::vector<Monomial> k(key.begin(), key.begin() + slot);
            k.push_back(pair[0]);
            k.push_back(pair[1]);
            k.insert(k.end(), key.begin() + slot + 1, key.end());
            r.add_term(k, c * c2);
        }
    }
    return r;
}

TensorElement contract_1_3_24(const TensorElement& t) {
    if (t.order() != 4) throw Error("contract_1_3_24 expects an order-4 tensor");
    TensorElement r(3);
    for (const auto& [key, c] : t.terms())
        r.add_term({key[0], key[2], key[1] * key[3]}, c);
    return r;
}

bool check_cointeraction(const NoncrossingPartition& p) {
    Monomial m(p);
    TensorElement lhs = apply_to_slot(coproduct_fusion(m), 0, &coproduct_separation);
    TensorElement t = apply_to_slot(coproduct_separation(m), 0, &coproduct_fusion);
    t = apply_to_slot(t, 2, &coproduct_fusion);
    TensorElement rhs = contract_1_3_24(t);
    return lhs == rhs;
}

Gradings gradings(const Monomial& m) {
    Gradings g;
    g.legs = m.total_legs();
    g.blocks = m.total_blocks();
    g.length = m.length();
    g.degree = g.blocks - g.length;
    return g;
}

} // namespace ncp
