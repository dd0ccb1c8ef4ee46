#include "rhoslice/real_poly.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace rhoslice {

RealPoly::RealPoly(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

RealPoly RealPoly::constant(const Rat& c) { return RealPoly({c}); }

void RealPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RealPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat RealPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RealPoly RealPoly::operator-() const {
    std::vector<Rat> out(coeffs_);
    for (Rat& c : out) c = -c;
    return RealPoly(std::move(out));
}

RealPoly RealPoly::operator+(const RealPoly& rhs) const {
    std::vector<Rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return RealPoly(std::move(out));
}

RealPoly RealPoly::operator-(const RealPoly& rhs) const { return *this + (-rhs); }

RealPoly RealPoly::operator*(const RealPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return RealPoly();
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return RealPoly(std::move(out));
}

RealPoly RealPoly::operator*(const Rat& scalar) const {
    std::vector<Rat> out(coeffs_);
    for (Rat& c : out) c *= scalar;
    return RealPoly(std::move(out));
}

RealPoly RealPoly::derivative() const {
    if (coeffs_.size() <= 1) return RealPoly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return RealPoly(std::move(out));
}

std::pair<RealPoly, RealPoly> RealPoly::divmod(const RealPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(coeffs_);
    const long dn = degree();
    const long dd = divisor.degree();
    if (dn < dd) return {RealPoly(), *this};
    std::vector<Rat> q(static_cast<std::size_t>(dn - dd + 1), Rat(0));
    const Rat lead = divisor.leading();
    for (long k = dn - dd; k >= 0; --k) {
        const Rat c = rem[static_cast<std::size_t>(k + dd)] / lead;
        q[static_cast<std::size_t>(k)] = c;
        if (c != 0) {
            for (long i = 0; i <= dd; ++i) {
                rem[static_cast<std::size_t>(k + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
            }
        }
    }
    return {RealPoly(std::move(q)), RealPoly(std::move(rem))};
}

RealPoly RealPoly::gcd(const RealPoly& a, const RealPoly& b) {
    RealPoly x = a;
    RealPoly y = b;
    while (!y.is_zero()) {
        RealPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RealPoly RealPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

RealPoly RealPoly::squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (degree() == 0) return RealPoly::constant(Rat(1));
    const RealPoly g = gcd(*this, derivative());
    return divmod(g).first.monic();
}

std::string RealPoly::to_string(const std::string& var_name) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Rat c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (!(c == 1 && i != 0)) os << rational_to_string(c);
        if (i != 0) {
            os << var_name;
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

std::vector<RealPoly> sturm_chain(const RealPoly& p) {
    std::vector<RealPoly> chain;
    chain.push_back(p);
    RealPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        RealPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

unsigned long sign_variations(const std::vector<RealPoly>& chain, const Rat& x) {
    unsigned long v = 0;
    int prev = 0;
    for (const RealPoly& p : chain) {
        const int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Yun's squarefree decomposition: p = prod f_i^i with the f_i pairwise
// coprime and squarefree.
std::vector<RealPoly> yun_decomposition(const RealPoly& p) {
    std::vector<RealPoly> factors;  // factors[i] has multiplicity i + 1
    RealPoly a = p.monic();
    if (a.degree() <= 0) return factors;
    RealPoly b = a.derivative();
    RealPoly g = RealPoly::gcd(a, b);
    if (g.degree() == 0) {
        factors.push_back(a);
        return factors;
    }
    RealPoly c = a.divmod(g).first;
    RealPoly d = b.divmod(g).first - c.derivative();
    while (true) {
        if (c.degree() == 0) break;
        RealPoly f = RealPoly::gcd(c, d);
        factors.push_back(f.monic());
        c = c.divmod(f).first;
        d = d.divmod(f).first - c.derivative();
    }
    return factors;
}

}  // namespace

unsigned long sturm_count(const RealPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    const auto chain = sturm_chain(p.squarefree_part());
    const long vl = static_cast<long>(sign_variations(chain, lo));
    const long vh = static_cast<long>(sign_variations(chain, hi));
    return static_cast<unsigned long>(vl - vh);
}

void IsolatedRoot::refine() {
    if (is_exact()) return;
    const Rat mid = midpoint();
    const int sm = sgn(poly.eval(mid));
    if (sm == 0) {
        lo = mid;
        hi = mid;
        return;
    }
    const int sl = sgn(poly.eval(lo));
    if (sl != 0 && sm != sl) {
        hi = mid;
    } else {
        lo = mid;
    }
}

void IsolatedRoot::refine_below_width(const Rat& width) {
    while (!is_exact() && hi - lo >= width) refine();
}

std::vector<IsolatedRoot> sturm_isolate(const RealPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_isolate: empty interval");
    std::vector<IsolatedRoot> out;
    if (p.degree() == 0) return out;

    const auto yun = yun_decomposition(p);
    RealPoly sf = RealPoly::constant(Rat(1));
    for (const RealPoly& f : yun) sf = sf * f;

    const auto multiplicity_of = [&](const IsolatedRoot& r) -> unsigned long {
        for (std::size_t i = 0; i < yun.size(); ++i) {
            if (yun[i].degree() <= 0) continue;
            if (r.is_exact()) {
                if (yun[i].eval(r.lo) == 0) return static_cast<unsigned long>(i + 1);
            } else if (sturm_count(yun[i], r.lo, r.hi) == 1) {
                return static_cast<unsigned long>(i + 1);
            }
        }
        return 1;  // unreachable for consistent input
    };

    const auto chain = sturm_chain(sf);
    const auto count_open_closed = [&](const Rat& a, const Rat& b) {
        return static_cast<long>(sign_variations(chain, a)) -
               static_cast<long>(sign_variations(chain, b));
    };

    // Endpoint roots first: Sturm counts are for half-open intervals.
    if (sf.eval(lo) == 0) out.push_back({sf, lo, lo, 0});

    std::deque<std::pair<Rat, Rat>> work;  // half-open (a, b]
    work.emplace_back(lo, hi);
    std::vector<IsolatedRoot> found;
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        const long n = count_open_closed(a, b);
        if (n <= 0) continue;
        if (sf.eval(b) == 0) {
            found.push_back({sf, b, b, 0});
            if (n > 1) {
                // The remaining roots are strictly inside; re-split (the
                // duplicate at b is weeded out below).
                const Rat mid = (a + b) / 2;
                work.emplace_back(a, mid);
                work.emplace_back(mid, b);
            }
            continue;
        }
        if (n == 1) {
            // One simple root in (a, b]; push toward a sign-change bracket.
            Rat la = a;
            Rat lb = b;
            while (sgn(sf.eval(la)) == 0 || sgn(sf.eval(la)) == sgn(sf.eval(lb))) {
                const Rat mid = (la + lb) / 2;
                const int sm = sgn(sf.eval(mid));
                if (sm == 0) {
                    la = mid;
                    lb = mid;
                    break;
                }
                if (count_open_closed(la, mid) == 1) {
                    lb = mid;
                } else {
                    la = mid;
                }
            }
            found.push_back({sf, la, lb, 0});
            continue;
        }
        const Rat mid = (a + b) / 2;
        work.emplace_back(a, mid);
        work.emplace_back(mid, b);
    }

    // De-duplicate exact roots that can surface from two adjacent splits.
    std::sort(found.begin(), found.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
    for (const auto& r : found) {
        if (!out.empty() && out.back().is_exact() && r.is_exact() && out.back().lo == r.lo) continue;
        out.push_back(r);
    }

    // Shrink intervals until pairwise strictly disjoint, then attach
    // multiplicities. Distinct roots separate in finitely many halvings.
    bool overlap = true;
    while (overlap) {
        overlap = false;
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].hi >= out[i + 1].lo) {
                out[i].refine();
                out[i + 1].refine();
                overlap = true;
            }
        }
    }
    for (auto& r : out) r.multiplicity = multiplicity_of(r);
    return out;
}

}  // namespace rhoslice
