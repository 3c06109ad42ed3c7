#include "ncp/series.hpp"

#include "ncp/combinatorics.hpp"
#include "ncp/errors.hpp"
#include "ncp/guards.hpp"

#include <map>
#include <mutex>

namespace ncp {

FormalSeries::FormalSeries(std::vector<Rational> a) : a_(std::move(a)) {}

FormalSeries FormalSeries::identity(int order) {
    return FormalSeries(std::vector<Rational>(order, 0));
}

Rational FormalSeries::coefficient(int n) const {
    if (n < 1 || n > order()) throw OrderOverflow("series coefficient out of range");
    return a_[n - 1];
}

namespace {

void check_order(int order) {
    if (order < 0) throw OrderOverflow("negative series order");
    if (order > guards().series_order)
        throw OrderOverflow("series order " + std::to_string(order) +
                            " exceeds the configured bound " +
                            std::to_string(guards().series_order));
}

// dense coefficient vector c[k] = coefficient of x^k, k = 0..maxdeg
std::vector<Rational> dense(const FormalSeries& f, int maxdeg) {
    std::vector<Rational> c(maxdeg + 1, 0);
    if (maxdeg >= 1) c[1] = 1;
    for (int n = 1; n <= f.order() && n + 1 <= maxdeg; ++n)
        c[n + 1] = f.coefficients()[n - 1];
    return c;
}

std::vector<Rational> mul_trunc(const std::vector<Rational>& a,
                                const std::vector<Rational>& b, int maxdeg) {
    std::vector<Rational> r(maxdeg + 1, 0);
    for (int i = 0; i <= maxdeg && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= maxdeg && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<Rational> compose_dense(const std::vector<Rational>& f,
                                    const std::vector<Rational>& g, int maxdeg) {
    std::vector<Rational> r(maxdeg + 1, 0);
    std::vector<Rational> power{1};
    for (int k = 0; k < static_cast<int>(f.size()); ++k) {
        if (k > 0) power = mul_trunc(power, g, maxdeg);
        if (f[k] == 0) continue;
        for (int i = 0; i <= maxdeg && i < static_cast<int>(power.size()); ++i)
            r[i] += f[k] * power[i];
    }
    return r;
}

FormalSeries from_dense(const std::vector<Rational>& c, int order) {
    std::vector<Rational> a(order, 0);
    for (int n = 1; n <= order && n + 1 < static_cast<int>(c.size()); ++n)
        a[n - 1] = c[n + 1];
    return FormalSeries(std::move(a));
}

} // namespace

FormalSeries compose(const FormalSeries& f, const FormalSeries& g) {
    int order = std::min(f.order(), g.order());
    int maxdeg = order + 1;
    auto r = compose_dense(dense(f, maxdeg), dense(g, maxdeg), maxdeg);
    return from_dense(r, order);
}

FormalSeries invert_oracle(const FormalSeries& f, int order) {
    check_order(order);
    int maxdeg = order + 1;
    auto fc = dense(f, maxdeg);
    std::vector<Rational> g(maxdeg + 1, 0);
    if (maxdeg >= 1) g[1] = 1;
    for (int d = 2; d <= maxdeg; ++d) {
        auto comp = compose_dense(fc, g, d);
        g[d] = -comp[d];  // the unknown enters the degree-d coefficient linearly
    }
    return from_dense(g, order);
}

// ---- closed-form inversion ----------------------------------------------

Rational lambda_coefficient(const Profile& profile) {
    int n = 0, blocks = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] < 0) throw Error("negative profile entry");
        n += static_cast<int>(i + 1) * profile[i];
        blocks += profile[i];
    }
    if (n == 0) return 0;
    check_order(n);
    Integer total = 0;
    visit_ncp(n, [&](const NoncrossingPartition& p) {
        if (p.block_count() != blocks) return;
        PartitionProfile pp = ncp::profile(p);
        if (static_cast<int>(pp.counts.size()) > static_cast<int>(profile.size()))
            return;
        for (std::size_t i = 0; i < profile.size(); ++i) {
            int have = i < pp.counts.size() ? pp.counts[i] : 0;
            if (have != profile[i]) return;
        }
        Integer prod = 1;
        for (const auto& cls : adjacency_classes(p).classes)
            prod *= catalan(static_cast<int>(cls.size()));
        total += prod;
    });
    return blocks % 2 == 0 ? Rational(total) : -Rational(total);
}

FormalSeries invert_ncp(const FormalSeries& f, int order) {
    check_order(order);
    auto coeff_or_zero = [&f](int j) {
        return j <= f.order() ? f.coefficient(j) : Rational(0);
    };
    std::vector<Rational> b(order, 0);
    for (int n = 1; n <= order; ++n) {
        // sum over profiles (k_1..k_n) with sum i*k_i = n
        Profile profile(n, 0);
        Rational bn = 0;
        auto rec = [&](auto&& self, int i, int rest) -> void {
            if (i > n) {
                if (rest != 0) return;
                Rational coeff = lambda_coefficient(profile);
                if (coeff == 0) return;
                Rational prod = 1;
                for (int j = 1; j <= n; ++j)
                    for (int t = 0; t < profile[j - 1]; ++t) prod *= coeff_or_zero(j);
                bn += coeff * prod;
                return;
            }
            for (int k = 0; i * k <= rest; ++k) {
                profile[i - 1] = k;
                self(self, i + 1, rest - i * k);
            }
            profile[i - 1] = 0;
        };
        rec(rec, 1, n);
        b[n - 1] = bn;
    }
    return FormalSeries(std::move(b));
}

TensorElement faadibruno_separation(int n) {
    if (n < 0) throw Error("negative ladder size");
    TensorElement t(2);
    // choose multiplicities k_i of right factors J_i (i >= 1) and k_0 erased
    // singletons, with sum (i+1) k_i = n + 1; the multinomial coefficient
    // counts the arrangements.
    std::vector<int> k(n + 1, 0);
    auto emit = [&]() {
        int s = 0;
        for (int i = 0; i <= n; ++i) s += k[i];
        Integer coeff = factorial(s);
        for (int i = 0; i <= n; ++i) coeff /= factorial(k[i]);
        std::vector<NoncrossingPartition> right;
        for (int i = 1; i <= n; ++i)
            for (int t2 = 0; t2 < k[i]; ++t2) right.push_back(singletons(i));
        Monomial left(singletons(s - 1));
        t.add_term({left, Monomial(std::move(right))}, Rational(coeff));
    };
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i > n) {
            if (rest == 0) emit();
            return;
        }
        for (int c = 0; (i + 1) * c <= rest; ++c) {
            k[i] = c;
            self(self, i + 1, rest - (i + 1) * c);
        }
        k[i] = 0;
    };
    rec(rec, 0, n + 1);
    return t;
}

// ---- coefficient tables --------------------------------------------------

std::vector<std::vector<Integer>> a_table(int max_i, int max_n) {
    std::vector<std::vector<Integer>> a(max_i, std::vector<Integer>(max_n, 0));
    for (int n = 1; n <= max_n; ++n) a[0][n - 1] = n == 1 ? 1 : 0;
    for (int i = 2; i <= max_i; ++i)
        for (int n = 1; n <= max_n; ++n) {
            Integer v = 0;
            for (int k = 1; k < n; ++k)
                v += binomial(Integer(n - k + 1), k) * a[i - 2][n - k - 1];
            a[i - 1][n - 1] = v;
        }
    return a;
}

RationalPolynomial ladder_polynomial(int n) {
    if (n < 0) throw Error("negative ladder size");
    if (n == 0) return RationalPolynomial::constant(1, PolyBasis::binomial_falling);
    auto a = a_table(n, n);
    std::vector<Rational> coeffs(n + 1, 0);
    for (int i = 1; i <= n; ++i) coeffs[i] = Rational(a[i - 1][n - 1]);
    return RationalPolynomial(std::move(coeffs), PolyBasis::binomial_falling);
}

Rational zeta1(int n) {
    Rational r = 0;
    for (int i = 1; i <= n; ++i) r += Rational(1, i);
    return r;
}

Rational zeta11(int n) {
    Rational r = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) r += Rational(1) / (Integer(i) * Integer(j));
    return r;
}

Integer a_closed_diag0(int n) { return factorial(n); }

Rational a_closed_diag1(int n) {
    return Rational(factorial(n)) * (Rational(n + 1, 2) - zeta1(n));
}

Rational a_closed_diag2(int n) {
    Rational inner = zeta11(n) - Rational(n, 2) * zeta1(n) +
                     Rational(Integer(3 * n - 2) * Integer(n * n + n + 6), 24 * n);
    return Rational(factorial(n)) * inner;
}

// ---- the binomial Riordan route ------------------------------------------

TriMatrix riordan_matrix(int n) {
    TriMatrix m(n, std::vector<Rational>(n, 0));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l)
            m[k - 1][l - 1] = Rational(binomial(Integer(l), k - l));
    return m;
}

TriMatrix tri_mul(const TriMatrix& a, const TriMatrix& b) {
    int n = static_cast<int>(a.size());
    TriMatrix r(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= i; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j <= k; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

TriMatrix tri_log(const TriMatrix& m) {
    int n = static_cast<int>(m.size());
    TriMatrix nil = m;
    for (int i = 0; i < n; ++i) nil[i][i] -= 1;
    TriMatrix result(n, std::vector<Rational>(n, 0));
    TriMatrix power = nil;
    for (int j = 1; j < n; ++j) {
        Rational c = Rational(j % 2 == 1 ? 1 : -1, j);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) result[r][s] += c * power[r][s];
        power = tri_mul(power, nil);
    }
    return result;
}

std::vector<RationalPolynomial> riordan_ladder_polynomials(int n) {
    TriMatrix l = tri_log(riordan_matrix(n));
    // column exp(X log M) e_1, with row k holding P_{k-1} in powers of X
    std::vector<std::vector<Rational>> columns;
    std::vector<Rational> v(n, 0);
    v[0] = 1;
    columns.push_back(v);
    Rational fact = 1;
    for (int i = 1; i < n; ++i) {
        std::vector<Rational> next(n, 0);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s <= r; ++s) next[r] += l[r][s] * v[s];
        v = next;
        fact *= i;
        std::vector<Rational> scaled = v;
        for (auto& c : scaled) c /= fact;
        columns.push_back(std::move(scaled));
    }
    std::vector<RationalPolynomial> out;
    for (int row = 0; row < n; ++row) {
        std::vector<Rational> coeffs(n, 0);
        for (int i = 0; i < n; ++i) coeffs[i] = columns[i][row];
        out.emplace_back(std::move(coeffs), PolyBasis::monomial);
    }
    return out;
}

Rational lambda_ncp_ladder(int n) {
    static std::mutex mutex;
    static std::map<int, Rational> memo{{1, Rational(1)}};
    if (n < 1) throw Error("ladder index must be positive");
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    Rational sum = 0;
    for (int i = 1; 2 * i <= n; ++i)
        sum += Rational(binomial(Integer(n - i + 1), i + 1)) * lambda_ncp_ladder(n - i);
    Rational v = -sum / (n - 1);
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(n, v);
    return v;
}

// ---- zero threshold ------------------------------------------------------

Rational ladder_value(int k, int n) {
    if (k < 0 || n < 0) throw Error("negative ladder arguments");
    if (k == 0) return 1;
    auto a = a_table(k, k);
    Rational v = 0;
    for (int i = 1; i <= k && i <= n; ++i)
        v += Rational(a[i - 1][k - 1]) * Rational(binomial(Integer(n), i));
    return v;
}

std::vector<int> threshold_witness(int n) {
    if (n < 1) throw Error("witness index must be positive");
    std::vector<int> w{1};
    for (int level = 2; level <= n; ++level) {
        std::vector<int> next;
        next.push_back(level);
        for (int x : w) {
            next.push_back(x);
            next.push_back(level);
        }
        w = std::move(next);
    }
    return w;
}

int chromatic_threshold(int k) {
    if (k < 0) throw Error("negative color count");
    if (k == 0) return 0;
    for (int n = 1;; ++n)
        if (ladder_value(k, n) > 0) return n;
}

} // namespace ncp
