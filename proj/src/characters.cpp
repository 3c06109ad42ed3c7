#include "ncp/characters.hpp"

#include "ncp/combinatorics.hpp"
#include "ncp/errors.hpp"

namespace ncp {

Character::Character(std::string name,
                     std::function<Rational(const NoncrossingPartition&)> rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

Rational Character::operator()(const NoncrossingPartition& p) const {
    if (p.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->values.find(p.text());
        if (it != memo_->values.end()) return it->second;
    }
    Rational v = rule_(p);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->values.emplace(p.text(), v);
    return v;
}

Rational Character::operator()(const Monomial& m) const {
    Rational v = 1;
    for (const auto& f : m.factors()) v *= (*this)(f);
    return v;
}

Rational Character::operator()(const AlgebraElement& x) const {
    Rational v = 0;
    for (const auto& [m, c] : x.terms()) v += c * (*this)(m);
    return v;
}

// ---- convolutions --------------------------------------------------------

Character convolve_separation(const Character& a, const Character& b) {
    return Character(
        "(" + a.name() + " * " + b.name() + ")",
        [a, b](const NoncrossingPartition& p) {
            Rational v = 0;
            TensorElement t = coproduct_separation(p);
            for (const auto& [key, c] : t.terms()) v += c * a(key[0]) * b(key[1]);
            return v;
        });
}

Character convolve_fusion(const Character& a, const Character& b) {
    return Character(
        "(" + a.name() + " . " + b.name() + ")",
        [a, b](const NoncrossingPartition& p) {
            Rational v = 0;
            TensorElement t = coproduct_fusion(p);
            for (const auto& [key, c] : t.terms()) v += c * a(key[0]) * b(key[1]);
            return v;
        });
}

namespace {

struct RecMemo {
    std::mutex mutex;
    std::map<std::string, Rational> values;
};

// mu(p) = -a(p) - sum over proper nonempty ideals of a(rest) * mu(ideal part),
// where mu is extended multiplicatively to the ideal's component factors.
Rational invert_separation_rec(const Character& a, const NoncrossingPartition& p,
                               RecMemo& memo) {
    {
        std::lock_guard<std::mutex> lock(memo.mutex);
        auto it = memo.values.find(p.text());
        if (it != memo.values.end()) return it->second;
    }
    Monomial whole(p);
    Rational v = -a(p);
    TensorElement sep = coproduct_separation(p);
    for (const auto& [key, c] : sep.terms()) {
        if (key[1].is_unit() || key[1] == whole) continue;
        Rational mu = 1;
        for (const auto& f : key[1].factors()) mu *= invert_separation_rec(a, f, memo);
        v -= c * a(key[0]) * mu;
    }
    std::lock_guard<std::mutex> lock(memo.mutex);
    memo.values.emplace(p.text(), v);
    return v;
}

// mu(p) = (eps_fusion(p) - sum over equivalences with >1 class of a(quotient) *
// mu(classwise restrictions)) / a(one-block), the denominator being a's value
// on the one-block partition with as many legs as p.
Rational invert_fusion_rec(const Character& a, const NoncrossingPartition& p,
                           RecMemo& memo) {
    {
        std::lock_guard<std::mutex> lock(memo.mutex);
        auto it = memo.values.find(p.text());
        if (it != memo.values.end()) return it->second;
    }
    NoncrossingPartition top = one_block(p.legs());
    Rational denom = a(top);
    if (denom == 0)
        throw NonInvertible("character '" + a.name() +
                            "' vanishes on the one-block partition with " +
                            std::to_string(p.legs()) + " legs");
    Monomial top_mono(top);
    Rational v = p.block_count() == 1 ? 1 : 0;
    TensorElement fus = coproduct_fusion(p);
    for (const auto& [key, c] : fus.terms()) {
        if (key[0] == top_mono) continue;  // the one-class term carries mu(p)
        Rational mu = 1;
        for (const auto& f : key[1].factors()) mu *= invert_fusion_rec(a, f, memo);
        v -= c * a(key[0]) * mu;
    }
    v /= denom;
    std::lock_guard<std::mutex> lock(memo.mutex);
    memo.values.emplace(p.text(), v);
    return v;
}

} // namespace

Character invert_separation(const Character& a) {
    auto memo = std::make_shared<RecMemo>();
    return Character("inv*(" + a.name() + ")",
                     [a, memo](const NoncrossingPartition& p) {
                         return invert_separation_rec(a, p, *memo);
                     });
}

Character invert_fusion(const Character& a) {
    auto memo = std::make_shared<RecMemo>();
    return Character("inv.(" + a.name() + ")",
                     [a, memo](const NoncrossingPartition& p) {
                         return invert_fusion_rec(a, p, *memo);
                     });
}

// ---- named characters ----------------------------------------------------

Character eps_separation_char() {
    return Character("eps-delta", [](const NoncrossingPartition&) { return Rational(0); });
}

Character eps_fusion_char() {
    return Character("eps-fusion", [](const NoncrossingPartition& p) {
        return Rational(p.block_count() == 1 ? 1 : 0);
    });
}

Character lambda_all_one() {
    return Character("lambda", [](const NoncrossingPartition&) { return Rational(1); });
}

Character lambda_strict() {
    return Character("lambda-strict", [](const NoncrossingPartition& p) {
        return Rational(static_cast<int>(base_blocks(p).size()) == p.block_count() ? 1
                                                                                  : 0);
    });
}

Character lambda_zero() {
    return Character("lambda0", [](const NoncrossingPartition& p) {
        return Rational(linear_extension_count(p)) / factorial(p.block_count());
    });
}

Character lambda_ncp() {
    static Character inv = invert_fusion(lambda_zero());
    return inv;
}

Character mu_all_one() {
    static Character inv = invert_fusion(lambda_all_one());
    return inv;
}

Character mu_strict() {
    return Character("mu-s", [](const NoncrossingPartition& p) {
        if (static_cast<int>(base_blocks(p).size()) != p.block_count()) return Rational(0);
        return Rational(p.block_count() % 2 == 1 ? 1 : -1);
    });
}

Character mu_ncp() {
    return Character("mu-ncp", [](const NoncrossingPartition& p) {
        Rational v = p.block_count() % 2 == 0 ? 1 : -1;
        for (const auto& cls : adjacency_classes(p).classes)
            v *= catalan(static_cast<int>(cls.size()));
        return v;
    });
}

Character gamma_char(const Rational& q) {
    return Character("gamma", [q](const NoncrossingPartition& p) {
        return p.block_count() == 1 ? q : Rational(0);
    });
}

Character character_by_name(const std::string& name, const Rational& q) {
    if (name == "eps-delta") return eps_separation_char();
    if (name == "eps-fusion") return eps_fusion_char();
    if (name == "lambda") return lambda_all_one();
    if (name == "lambda-strict") return lambda_strict();
    if (name == "lambda0") return lambda_zero();
    if (name == "lambda-ncp") return lambda_ncp();
    if (name == "mu") return mu_all_one();
    if (name == "mu-s") return mu_strict();
    if (name == "mu-ncp") return mu_ncp();
    if (name == "gamma") return gamma_char(q);
    throw Error("unknown character '" + name + "'");
}

} // namespace ncp
