/*
 * signature.hpp
 * -------------
 * Certified sign determination and exact signatures of Hermitian matrices.
 *
 * Signatures are computed from the characteristic polynomial by Descartes
 * counting: Hermitian char polys are real-rooted, so the count of coefficient
 * sign variations of p(x) (resp. p(-x)) is exactly the number of positive
 * (resp. negative) eigenvalues once the x^m factor of zero eigenvalues is
 * stripped. Every coefficient sign is certified: exact zero tests first,
 * then interval evaluation on a doubling precision ladder.
 */
#pragma once

#include <variant>
#include <vector>

#include "rhoslice/arith.hpp"
#include "rhoslice/cyclotomic.hpp"
#include "rhoslice/quad_ext.hpp"

namespace rhoslice {

// A point of the unit circle, exactly described: either zeta_k^j, or the
// point above/below a rational abscissa x in [-1, 1].
struct CirclePoint {
    struct RootOfUnity {
        unsigned long k = 1;
        long j = 1;  // 1 <= j <= k
    };
    struct RationalAbscissa {
        Rat x;
        bool upper_half = true;
    };

    static CirclePoint root_of_unity(unsigned long k, long j);
    static CirclePoint rational_abscissa(const Rat& x, bool upper_half = true);

    std::variant<RootOfUnity, RationalAbscissa> point;
};

struct SignPolicy {
    long start_bits = 64;
    long max_bits = 4096;
};

struct CertifiedSign {
    enum class Kind { exact, interval };
    int value = 0;          // -1, 0, +1; 0 only ever from an exact zero test
    Kind certificate = Kind::exact;
    long bits_used = 0;     // interval certificates only
};

CertifiedSign certified_sign(const Rat& x);
// Throws std::invalid_argument("not real") on non-real input and
// precision_exhausted past the bit cap.
CertifiedSign certified_sign(const CyclotomicElement& x, const SignPolicy& policy = {});
CertifiedSign certified_sign(const QuadExtNumber& x);
inline CertifiedSign certified_sign(const Rat& x, const SignPolicy&) { return certified_sign(x); }
inline CertifiedSign certified_sign(const QuadExtNumber& x, const SignPolicy&) {
    return certified_sign(x);
}

namespace detail {

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat conj_of(const Rat& x) { return x; }
inline bool real_check(const Rat&) { return true; }
inline Rat scaled_by(const Rat& x, const Rat& c) { return x * c; }

inline CyclotomicElement zero_like(const CyclotomicElement& e) {
    return CyclotomicElement(e.order());
}
inline CyclotomicElement one_like(const CyclotomicElement& e) {
    return CyclotomicElement::from_rational(e.order(), Rat(1));
}
inline CyclotomicElement conj_of(const CyclotomicElement& x) { return x.conj(); }
inline bool real_check(const CyclotomicElement& x) { return x.is_real(); }
inline CyclotomicElement scaled_by(const CyclotomicElement& x, const Rat& c) {
    return x.scaled(c);
}

inline QuadExtNumber zero_like(const QuadExtNumber&) { return QuadExtNumber(); }
inline QuadExtNumber one_like(const QuadExtNumber&) {
    return QuadExtNumber::from_rational(Rat(1));
}
inline QuadExtNumber conj_of(const QuadExtNumber& x) { return x.conj(); }
inline bool real_check(const QuadExtNumber& x) { return x.is_real(); }
inline QuadExtNumber scaled_by(const QuadExtNumber& x, const Rat& c) { return x.scaled(c); }

}  // namespace detail

// Exact Hermitian validation: m[j][i] == conj(m[i][j]).
template <typename F>
bool is_hermitian(const std::vector<std::vector<F>>& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(m[j][i] == detail::conj_of(m[i][j]))) return false;
        }
    }
    return true;
}

// Characteristic polynomial det(xI - M) of a Hermitian matrix by the
// Faddeev-LeVerrier recurrence (exact; only divisions by integers occur).
// Returned ascending; every coefficient is checked to be real.
template <typename F>
std::vector<F> char_poly(const std::vector<std::vector<F>>& m) {
    if (!is_hermitian(m)) throw std::invalid_argument("char_poly: matrix is not Hermitian");
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("char_poly: empty matrix");
    const F zero = detail::zero_like(m[0][0]);
    const F one = detail::one_like(m[0][0]);

    std::vector<std::vector<F>> work(n, std::vector<F>(n, zero));  // M_k
    std::vector<F> cs(n + 1, zero);
    cs[n] = one;  // leading coefficient

    std::vector<std::vector<F>> prev(n, std::vector<F>(n, zero));
    F ck = one;  // c_{k-1} scalar carried through the recurrence
    for (std::size_t k = 1; k <= n; ++k) {
        // work = m * (prev + ck * I)
        std::vector<std::vector<F>> addend = prev;
        for (std::size_t i = 0; i < n; ++i) addend[i][i] = addend[i][i] + ck;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                F acc = zero;
                for (std::size_t l = 0; l < n; ++l) acc = acc + m[i][l] * addend[l][j];
                work[i][j] = acc;
            }
        }
        F trace = zero;
        for (std::size_t i = 0; i < n; ++i) trace = trace + work[i][i];
        ck = detail::scaled_by(trace, Rat(-1, static_cast<long>(k)));
        cs[n - k] = ck;
        prev = work;
    }
    for (const F& c : cs) {
        if (!detail::real_check(c)) {
            throw std::invalid_argument("char_poly: non-real coefficient");
        }
    }
    return cs;
}

namespace detail {

int descartes_signature(const std::vector<int>& signs);

}  // namespace detail

// Signature (#positive - #negative eigenvalues) from an ascending,
// real-rooted characteristic polynomial. x^m factors are stripped exactly.
template <typename F>
int signature_descartes(const std::vector<F>& charpoly, const SignPolicy& policy = {}) {
    std::vector<int> signs;
    signs.reserve(charpoly.size());
    for (const F& c : charpoly) signs.push_back(certified_sign(c, policy).value);
    return detail::descartes_signature(signs);
}

}  // namespace rhoslice
