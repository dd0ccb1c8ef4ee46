#include "rhoslice/arith.hpp"

#include <cctype>
#include <cstdlib>

namespace rhoslice {

namespace {

// Trial-division factorization for the small moduli used by cyclotomic
// indexing (m stays in the low thousands).
std::vector<std::pair<unsigned long, unsigned long>> factorize(unsigned long m) {
    std::vector<std::pair<unsigned long, unsigned long>> out;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            unsigned long e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

}  // namespace

unsigned long totient(unsigned long m) {
    if (m == 0) throw std::invalid_argument("totient: m must be positive");
    unsigned long result = 1;
    for (const auto& [p, e] : factorize(m)) {
        unsigned long pe = 1;
        for (unsigned long i = 1; i < e; ++i) pe *= p;
        result *= pe * (p - 1);
    }
    return result;
}

std::vector<unsigned long> prime_divisors(unsigned long m) {
    std::vector<unsigned long> out;
    for (const auto& [p, e] : factorize(m)) out.push_back(p);
    return out;
}

bool is_prime(unsigned long m) {
    if (m < 2) return false;
    auto f = factorize(m);
    return f.size() == 1 && f[0].second == 1;
}

bool is_prime_power(unsigned long m) {
    if (m < 2) return false;
    return factorize(m).size() == 1;
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rat r;
        if (r.set_str(text, 10) != 0) throw std::invalid_argument("parse_rational: bad fraction");
        if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
        r.canonicalize();
        return r;
    }

    // Decimal or scientific literal, parsed exactly.
    std::string digits;
    long exponent10 = 0;
    bool negative = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    bool seen_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        digits += text[i];
        seen_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            digits += text[i];
            --exponent10;
            seen_digit = true;
        }
    }
    if (!seen_digit) throw std::invalid_argument("parse_rational: no digits");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i >= text.size()) throw std::invalid_argument("parse_rational: dangling exponent");
        char* end = nullptr;
        const long e = std::strtol(text.c_str() + i, &end, 10);
        if (end != text.c_str() + text.size()) {
            throw std::invalid_argument("parse_rational: bad exponent");
        }
        exponent10 += e;
        i = text.size();
    }
    if (i != text.size()) throw std::invalid_argument("parse_rational: trailing characters");

    Int mantissa(digits.empty() ? "0" : digits, 10);
    if (negative) mantissa = -mantissa;
    Rat r(mantissa);
    if (exponent10 > 0) {
        r *= Rat(pow_int(Int(10), static_cast<unsigned long>(exponent10)));
    } else if (exponent10 < 0) {
        r /= Rat(pow_int(Int(10), static_cast<unsigned long>(-exponent10)));
    }
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace rhoslice
