/*
 * arith.hpp
 * ---------
 * Arbitrary-precision integer/rational aliases and the small helpers the
 * rest of the library leans on. Everything is exact; no floating point.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace rhoslice {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when the adaptive-precision ladder hits its bit cap without
// certifying a sign. Callers treat this as "no answer", never as a sign.
struct precision_exhausted : std::runtime_error {
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

inline Int abs_int(const Int& x) { return abs(x); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division (gmp's fdiv), as opposed to mpz_class's truncating '/'.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Exact division; throws if b does not divide a.
inline Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("divexact: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::invalid_argument("divexact: not divisible");
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Floor/ceil of num/den as integers.
inline Int rat_floor(const Rat& x) { return fdiv(x.get_num(), x.get_den()); }
inline Int rat_ceil(const Rat& x) { return cdiv(x.get_num(), x.get_den()); }

// Euler's totient and the distinct prime divisors of m, by trial division.
unsigned long totient(unsigned long m);
std::vector<unsigned long> prime_divisors(unsigned long m);
bool is_prime(unsigned long m);
bool is_prime_power(unsigned long m);

// Parses a rational from "p/q", a decimal ("0.25") or scientific ("1e-9")
// literal. Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

// Reduced "p/q" (or "p" when q = 1).
std::string rational_to_string(const Rat& x);

}  // namespace rhoslice
