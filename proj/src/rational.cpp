#include "crdcache/rational.hpp"

#include "crdcache/errors.hpp"

namespace crdcache {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt acc = base;
    while (exp != 0) {
        if (exp & 1u) result *= acc;
        exp >>= 1;
        if (exp != 0) acc *= acc;
    }
    return result;
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational result = 1;
    Rational acc = base;
    while (exp != 0) {
        if (exp & 1u) result *= acc;
        exp >>= 1;
        if (exp != 0) acc *= acc;
    }
    return result;
}

std::string to_fraction_string(const Rational& value) {
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
    if (significant_digits < 1) fail(Errc::invalid_params, "significant_digits must be >= 1");
    if (value == 0) return "0";

    BigInt num = numerator(value);
    const BigInt& den = denominator(value); // always positive in canonical form
    const bool negative = num < 0;
    if (negative) num = -num;

    // Decimal exponent e: the largest e with 10^e <= num/den.
    int e = 0;
    if (num >= den) {
        e = static_cast<int>(BigInt(num / den).str().size()) - 1;
    } else {
        BigInt scaled = num * 10;
        e = -1;
        while (scaled < den) {
            scaled *= 10;
            --e;
        }
    }

    // Round num/den to significant_digits digits (half-to-even).
    const int shift = significant_digits - 1 - e;
    BigInt n2 = num;
    BigInt d2 = den;
    if (shift >= 0) {
        n2 *= ipow(10, static_cast<unsigned>(shift));
    } else {
        d2 *= ipow(10, static_cast<unsigned>(-shift));
    }
    BigInt q = n2 / d2;
    const BigInt twice_rem = (n2 % d2) * 2;
    if (twice_rem > d2 || (twice_rem == d2 && (q & 1) == 1)) ++q;

    std::string digits = q.str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        // Rounding carried into a new leading digit (999... -> 1000...).
        ++e;
        digits.pop_back();
    }

    auto trim_zeros = [](std::string& s) {
        while (!s.empty() && s.back() == '0') s.pop_back();
    };

    std::string out;
    if (e < -4 || e >= significant_digits) {
        std::string rest = digits.substr(1);
        trim_zeros(rest);
        out = digits.substr(0, 1);
        if (!rest.empty()) out += "." + rest;
        out += 'e';
        out += (e < 0) ? '-' : '+';
        const int abs_e = e < 0 ? -e : e;
        std::string es = std::to_string(abs_e);
        if (es.size() < 2) es.insert(es.begin(), '0');
        out += es;
    } else if (e >= 0) {
        std::string frac = digits.substr(static_cast<std::size_t>(e) + 1);
        trim_zeros(frac);
        out = digits.substr(0, static_cast<std::size_t>(e) + 1);
        if (!frac.empty()) out += "." + frac;
    } else {
        std::string frac(static_cast<std::size_t>(-e - 1), '0');
        frac += digits;
        trim_zeros(frac);
        out = "0." + frac;
    }
    return negative ? "-" + out : out;
}

} // namespace crdcache
