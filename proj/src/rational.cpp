#include "ncp/rational.hpp"

#include "ncp/errors.hpp"
#include "ncp/guards.hpp"

#include <cctype>
#include <mutex>
#include <sstream>

namespace ncp {

Guards& guards() {
    static Guards g;
    return g;
}

std::string format_rational(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    auto parse_int = [](const std::string& t) -> Integer {
        std::size_t i = 0;
        bool neg = false;
        if (i < t.size() && (t[i] == '-' || t[i] == '+')) neg = t[i++] == '-';
        if (i == t.size()) throw ParseError("missing digits in rational literal");
        Integer v = 0;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw ParseError("bad character in rational literal: '" + t + "'");
            v = v * 10 + (t[i] - '0');
        }
        return neg ? Integer(-v) : v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(const Integer& n, int k) {
    if (k < 0) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        Integer top = n - i;
        if (top == 0) return 0;
        r = r * top / (i + 1);
    }
    return r;
}

const std::vector<Integer>& catalan_numbers(int up_to) {
    static std::vector<Integer> cache{1};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= up_to) {
        int k = static_cast<int>(cache.size());
        Integer c = 0;
        for (int i = 1; i <= k; ++i) c += cache[i - 1] * cache[k - i];
        cache.push_back(c);
    }
    return cache;
}

Integer catalan(int n) {
    return catalan_numbers(n)[n];
}

} // namespace ncp
