#include "rhoslice/signature.hpp"

namespace rhoslice {

CirclePoint CirclePoint::root_of_unity(unsigned long k, long j) {
    if (k == 0 || j < 1 || j > static_cast<long>(k)) {
        throw std::invalid_argument("root_of_unity: need 1 <= j <= k");
    }
    return CirclePoint{RootOfUnity{k, j}};
}

CirclePoint CirclePoint::rational_abscissa(const Rat& x, bool upper_half) {
    if (x < -1 || x > 1) throw std::invalid_argument("rational_abscissa: |x| <= 1 required");
    return CirclePoint{RationalAbscissa{x, upper_half}};
}

CertifiedSign certified_sign(const Rat& x) {
    return CertifiedSign{sgn(x), CertifiedSign::Kind::exact, 0};
}

CertifiedSign certified_sign(const QuadExtNumber& x) {
    return CertifiedSign{x.exact_sign(), CertifiedSign::Kind::exact, 0};
}

CertifiedSign certified_sign(const CyclotomicElement& x, const SignPolicy& policy) {
    if (x.is_zero()) return CertifiedSign{0, CertifiedSign::Kind::exact, 0};
    if (x.is_rational()) {
        return CertifiedSign{sgn(x.rational_value()), CertifiedSign::Kind::exact, 0};
    }
    if (!x.is_real()) throw std::invalid_argument("not real");
    for (long bits = policy.start_bits; bits <= policy.max_bits; bits *= 2) {
        const DyadicInterval enc = x.real_enclosure(bits);
        const int s = enc.definite_sign();
        if (s != 0) return CertifiedSign{s, CertifiedSign::Kind::interval, bits};
    }
    throw precision_exhausted("certified_sign: precision cap reached");
}

namespace detail {

int descartes_signature(const std::vector<int>& signs) {
    // Strip the x^m factor (m zero eigenvalues contribute nothing).
    std::size_t start = 0;
    while (start < signs.size() && signs[start] == 0) ++start;
    if (start == signs.size()) {
        throw std::invalid_argument("descartes_signature: zero polynomial");
    }
    int positive = 0;
    int negative = 0;
    int prev_plus = 0;   // last nonzero sign of p(x)
    int prev_minus = 0;  // last nonzero sign of p(-x)
    for (std::size_t i = start; i < signs.size(); ++i) {
        const int s = signs[i];
        if (s == 0) continue;
        if (prev_plus != 0 && s != prev_plus) ++positive;
        prev_plus = s;
        const int sm = (i % 2 == 0) ? s : -s;
        if (prev_minus != 0 && sm != prev_minus) ++negative;
        prev_minus = sm;
    }
    return positive - negative;
}

}  // namespace detail

}  // namespace rhoslice
