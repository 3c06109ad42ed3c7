#pragma once

#include "ncp/algebra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace ncp {

// Multiplicative rational functional on the partition algebra, determined by
// its values on single partitions.  Evaluations are memoized; the memo is
// safe to fill from several threads (idempotent writes behind a mutex).
class Character {
public:
    Character() = default;
    Character(std::string name, std::function<Rational(const NoncrossingPartition&)> rule);

    const std::string& name() const { return name_; }

    Rational operator()(const NoncrossingPartition& p) const;
    Rational operator()(const Monomial& m) const;       // product over factors
    Rational operator()(const AlgebraElement& x) const; // linear extension

private:
    std::string name_;
    std::function<Rational(const NoncrossingPartition&)> rule_;
    struct Memo {
        std::mutex mutex;
        std::map<std::string, Rational> values;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// ---- convolutions --------------------------------------------------------

// Convolution along the separation coproduct; unit counit_separation.
Character convolve_separation(const Character& a, const Character& b);

// Convolution along the fusion coproduct; unit counit_fusion.
Character convolve_fusion(const Character& a, const Character& b);

// Inverse for the separation convolution (every character is invertible).
Character invert_separation(const Character& a);

// Inverse for the fusion convolution; requires nonzero values on one-block
// partitions, otherwise NonInvertible (raised lazily at evaluation).
Character invert_fusion(const Character& a);

// ---- named characters ----------------------------------------------------

Character eps_separation_char();  // counit of separation as a character
Character eps_fusion_char();      // counit of fusion as a character

Character lambda_all_one();       // 1 on every partition
Character lambda_strict();        // 1 exactly on partitions equal to their base
Character lambda_zero();          // linear extensions / blocks!
Character lambda_ncp();           // fusion inverse of lambda_zero
Character mu_all_one();           // fusion inverse of lambda_all_one
Character mu_strict();            // closed form: 0 unless base, else (-1)^(blocks-1)
Character mu_ncp();               // closed form: (-1)^blocks * prod Catalan(class sizes)
Character gamma_char(const Rational& q);  // q on one-block partitions, else 0

// Named lookup for the CLI: eps-delta, eps-fusion, lambda, lambda-strict,
// lambda0, lambda-ncp, mu, mu-s, mu-ncp, gamma.
Character character_by_name(const std::string& name, const Rational& q = 1);

} // namespace ncp
