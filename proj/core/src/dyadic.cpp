#include "rhoslice/dyadic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace rhoslice {

namespace {

Int two_pow(long p) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(p));
    return r;
}

// Rescale an endpoint value from precision p1 to p2, rounding down/up.
Int rescale_floor(const Int& v, long from, long to) {
    if (to >= from) return v * two_pow(to - from);
    return fdiv(v, two_pow(from - to));
}

Int rescale_ceil(const Int& v, long from, long to) {
    if (to >= from) return v * two_pow(to - from);
    return cdiv(v, two_pow(from - to));
}

}  // namespace

DyadicInterval DyadicInterval::from_rational(const Rat& x, long prec) {
    const Int scale = two_pow(prec);
    const Rat scaled = x * Rat(scale);
    return {rat_floor(scaled), rat_ceil(scaled), prec};
}

Rat DyadicInterval::lower() const { return rat(lo, two_pow(prec)); }
Rat DyadicInterval::upper() const { return rat(hi, two_pow(prec)); }
Rat DyadicInterval::width() const { return rat(hi - lo, two_pow(prec)); }

int DyadicInterval::definite_sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
}

namespace {

DyadicInterval align(const DyadicInterval& x, long prec) {
    return {rescale_floor(x.lo, x.prec, prec), rescale_ceil(x.hi, x.prec, prec), prec};
}

}  // namespace

DyadicInterval DyadicInterval::operator+(const DyadicInterval& rhs) const {
    const long p = std::max(prec, rhs.prec);
    const DyadicInterval a = align(*this, p);
    const DyadicInterval b = align(rhs, p);
    return {a.lo + b.lo, a.hi + b.hi, p};
}

DyadicInterval DyadicInterval::operator-(const DyadicInterval& rhs) const {
    return *this + (-rhs);
}

DyadicInterval DyadicInterval::operator-() const { return {-hi, -lo, prec}; }

DyadicInterval DyadicInterval::operator*(const DyadicInterval& rhs) const {
    const long p = std::max(prec, rhs.prec);
    const DyadicInterval a = align(*this, p);
    const DyadicInterval b = align(rhs, p);
    const Int c1 = a.lo * b.lo;
    const Int c2 = a.lo * b.hi;
    const Int c3 = a.hi * b.lo;
    const Int c4 = a.hi * b.hi;
    const Int lo4 = std::min(std::min(c1, c2), std::min(c3, c4));
    const Int hi4 = std::max(std::max(c1, c2), std::max(c3, c4));
    // Products carry scale 2^-2p; renormalize to 2^-p.
    return {rescale_floor(lo4, 2 * p, p), rescale_ceil(hi4, 2 * p, p), p};
}

DyadicInterval DyadicInterval::scaled(const Rat& c) const {
    if (c == 0) return exact_zero(prec);
    const Rat l = lower() * c;
    const Rat h = upper() * c;
    DyadicInterval a = from_rational(c > 0 ? l : h, prec);
    DyadicInterval b = from_rational(c > 0 ? h : l, prec);
    return {a.lo, b.hi, prec};
}

namespace {

// Integer arctan series: floor(2^prec * atan(1/x)) with a certified error
// of at most `slack` units, returned with the interval widened accordingly.
DyadicInterval atan_inv(unsigned long x, long prec) {
    const long guard = 32;
    const long p = prec + guard;
    Int acc = 0;
    Int term = fdiv(two_pow(p), Int(x));
    unsigned long n = 0;
    unsigned long steps = 0;
    const Int x2(static_cast<unsigned long>(x) * x);
    Int power = term;  // floor(2^p / x^(2n+1)), divided by (2n+1) below
    while (true) {
        const Int contrib = fdiv(power, Int(2 * n + 1));
        if (contrib == 0) break;
        if (n % 2 == 0) {
            acc += contrib;
        } else {
            acc -= contrib;
        }
        power = fdiv(power, x2);
        ++n;
        ++steps;
    }
    // Each floor loses < 1 unit and the truncated alternating tail is < 1
    // unit; widen by steps + 2 at the guard precision.
    const Int slack(static_cast<unsigned long>(steps + 2));
    return {rescale_floor(acc - slack, p, prec), rescale_ceil(acc + slack, p, prec), prec};
}

}  // namespace

DyadicInterval pi_interval(long prec) {
    static std::map<long, DyadicInterval> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(prec);
        if (it != cache.end()) return it->second;
    }
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    const DyadicInterval a5 = atan_inv(5, prec + 8);
    const DyadicInterval a239 = atan_inv(239, prec + 8);
    DyadicInterval pi{16 * a5.lo - 4 * a239.hi, 16 * a5.hi - 4 * a239.lo, prec + 8};
    const DyadicInterval out = align(pi, prec);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(prec, out);
    return out;
}

namespace {

DyadicInterval cos_two_pi_uncached(const Rat& qr, long prec);

}  // namespace

DyadicInterval cos_two_pi(const Rat& q, long prec) {
    // Reduce to theta = 2 pi q' with q' in [0, 1/2] (cos is even and
    // 1-periodic in q).
    Rat qr = q - Rat(rat_floor(q));
    if (qr > Rat(1, 2)) qr = 1 - qr;

    static std::map<std::pair<std::string, long>, DyadicInterval> cache;
    static std::mutex cache_mutex;
    const std::pair<std::string, long> key{rational_to_string(qr), prec};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const DyadicInterval out = cos_two_pi_uncached(qr, prec);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, out);
    return out;
}

namespace {

DyadicInterval cos_two_pi_uncached(const Rat& qr, long prec) {
    if (qr == 0) {
        const Int one = two_pow(prec);
        return {one, one, prec};
    }
    if (qr == Rat(1, 2)) {
        const Int one = two_pow(prec);
        return {-one, -one, prec};
    }
    if (qr == Rat(1, 4)) return DyadicInterval::exact_zero(prec);
    if (qr == Rat(1, 3)) return DyadicInterval::from_rational(Rat(-1, 2), prec);
    if (qr == Rat(1, 6)) return DyadicInterval::from_rational(Rat(1, 2), prec);

    const long guard = 32;
    const long p = prec + guard;
    const DyadicInterval theta = pi_interval(p).scaled(2 * qr);  // in (0, pi)
    const DyadicInterval theta2 = theta * theta;

    // cos(theta) = sum (-1)^k theta^(2k) / (2k)!, alternating with
    // decreasing terms once 2k(2k-1) > theta^2 (theta < pi so k >= 2).
    DyadicInterval acc{two_pow(p), two_pow(p), p};  // k = 0 term
    DyadicInterval term{two_pow(p), two_pow(p), p};
    unsigned long k = 0;
    while (true) {
        ++k;
        term = term * theta2;
        // Divide by (2k-1)(2k), outward.
        const Int denom(static_cast<unsigned long>(2 * k - 1) * (2 * k));
        term = DyadicInterval{fdiv(term.lo, denom), cdiv(term.hi, denom), term.prec};
        if (k % 2 == 1) {
            acc = acc - term;
        } else {
            acc = acc + term;
        }
        // Stop when the term magnitude is below one target unit and the
        // series has entered its decreasing regime.
        const Int mag = std::max(abs_int(term.lo), abs_int(term.hi));
        if (2 * k * (2 * k - 1) > 11 && mag <= two_pow(p - prec)) {
            // Tail bound: next term magnitude, already below resolution.
            acc = DyadicInterval{acc.lo - mag, acc.hi + mag, acc.prec};
            break;
        }
        if (k > 200) throw std::logic_error("cos_two_pi: series failed to converge");
    }
    return align(acc, prec);
}

}  // namespace

DyadicInterval arccos_over_pi(const IsolatedRoot& root, long prec) {
    // Exact rational abscissae with known arccos/pi.
    if (root.is_exact()) {
        const Rat& x = root.lo;
        if (x == 1) return DyadicInterval::exact_zero(prec);
        if (x == -1) return DyadicInterval::from_rational(Rat(1), prec);
        if (x == 0) return DyadicInterval::from_rational(Rat(1, 2), prec);
        if (x == Rat(1, 2)) return DyadicInterval::from_rational(Rat(1, 3), prec);
        if (x == Rat(-1, 2)) return DyadicInterval::from_rational(Rat(2, 3), prec);
    }

    IsolatedRoot r = root;
    // s in [0, 1] with cos(pi s) = x, found by dyadic bisection against a
    // shrinking enclosure of x. Both shrink together until they separate.
    Rat s_lo(0);
    Rat s_hi(1);
    long working = std::max<long>(prec + 16, 64);
    const Rat target = rat(Int(1), two_pow(prec));
    while (s_hi - s_lo > target) {
        const Rat s_mid = (s_lo + s_hi) / 2;
        bool decided = false;
        for (int attempt = 0; attempt < 64 && !decided; ++attempt) {
            const DyadicInterval c = cos_two_pi(s_mid / 2, working);
            // cos(pi s) decreasing: x < cos(pi s_mid) means s > s_mid.
            if (Rat(r.lo) > c.upper()) {
                s_hi = s_mid;  // x above the cosine: angle below s_mid
                decided = true;
            } else if (Rat(r.hi) < c.lower()) {
                s_lo = s_mid;
                decided = true;
            } else {
                r.refine();
                working += 32;
            }
        }
        if (!decided) {
            throw precision_exhausted("arccos_over_pi: abscissa indistinguishable from a dyadic angle");
        }
    }
    return {rescale_floor(DyadicInterval::from_rational(s_lo, prec).lo, prec, prec),
            rescale_ceil(DyadicInterval::from_rational(s_hi, prec).hi, prec, prec), prec};
}

}  // namespace rhoslice
