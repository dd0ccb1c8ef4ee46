#include "rhoslice/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "rhoslice/int_matrix.hpp"
#include "rhoslice/real_poly.hpp"

namespace rhoslice {

LaurentPoly::LaurentPoly(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long exponent, const Int& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exponent] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
    return coeffs_.size() == 1 && abs_int(coeffs_.begin()->second) == 1;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw std::invalid_argument("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw std::invalid_argument("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

long LaurentPoly::span() const { return is_zero() ? -1 : max_exp() - min_exp(); }

Int LaurentPoly::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(long exponent, const Int& value) {
    if (value == 0) {
        coeffs_.erase(exponent);
    } else {
        coeffs_[exponent] = value;
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = out.coeffs_.find(e);
        if (it == out.coeffs_.end()) {
            out.coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    if (is_zero() || rhs.is_zero()) return out;
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : rhs.coeffs_) {
            auto& slot = out.coeffs_[e1 + e2];
            slot += c1 * c2;
        }
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
        it = it->second == 0 ? out.coeffs_.erase(it) : std::next(it);
    }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        base = base * base;
        e >>= 1UL;
    }
    return result;
}

LaurentPoly LaurentPoly::involute() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
    return out;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

Int LaurentPoly::eval_at_minus_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) {
        s += (e % 2 == 0) ? c : -c;
    }
    return s;
}

LaurentPoly LaurentPoly::substitute_power(long a) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) {
        auto& slot = out.coeffs_[e * a];
        slot += c;
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
        it = it->second == 0 ? out.coeffs_.erase(it) : std::next(it);
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(long shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + shift] = c;
    return out;
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (is_zero()) throw std::invalid_argument("unit_normalized: zero polynomial");
    LaurentPoly out = shifted(-min_exp());
    if (out.coeffs_.rbegin()->second < 0) out = -out;
    return out;
}

std::pair<std::vector<Int>, long> LaurentPoly::dense_parts() const {
    if (is_zero()) return {{}, 0};
    const long lo = min_exp();
    const long hi = max_exp();
    std::vector<Int> dense(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (const auto& [e, c] : coeffs_) dense[static_cast<std::size_t>(e - lo)] = c;
    return {dense, lo};
}

namespace {

// Euclidean division of dense integer polynomials over Q; returns
// {quotient, remainder} with rational coefficients avoided by detecting
// non-exactness early when `require_exact`.
bool divide_dense_exact(const std::vector<Int>& num, const std::vector<Int>& den,
                        std::vector<Int>* quotient) {
    if (den.empty()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(num.begin(), num.end());
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    if (dn < dd) {
        if (num.empty()) {
            quotient->clear();
            return true;
        }
        return false;
    }
    std::vector<Rat> q(static_cast<std::size_t>(dn - dd + 1), Rat(0));
    const Rat lead(den.back());
    for (long k = dn - dd; k >= 0; --k) {
        const Rat c = rem[static_cast<std::size_t>(k + dd)] / lead;
        q[static_cast<std::size_t>(k)] = c;
        if (c != 0) {
            for (long i = 0; i <= dd; ++i) {
                rem[static_cast<std::size_t>(k + i)] -= c * Rat(den[static_cast<std::size_t>(i)]);
            }
        }
    }
    for (const Rat& r : rem) {
        if (r != 0) return false;
    }
    quotient->clear();
    quotient->reserve(q.size());
    for (const Rat& c : q) {
        if (c.get_den() != 1) return false;
        quotient->push_back(c.get_num());
    }
    while (!quotient->empty() && quotient->back() == 0) quotient->pop_back();
    return true;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& rhs) const {
    if (rhs.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return LaurentPoly::zero();
    auto [num, num_shift] = dense_parts();
    auto [den, den_shift] = rhs.dense_parts();
    std::vector<Int> q;
    if (!divide_dense_exact(num, den, &q)) return std::nullopt;
    LaurentPoly out;
    const long base = num_shift - den_shift;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] != 0) out.coeffs_[base + static_cast<long>(i)] = q[i];
    }
    return out;
}

std::string LaurentPoly::to_string(const std::string& var_name) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent first reads conventionally.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit_coeff = a == 1 && e != 0;
        if (!unit_coeff) os << a.get_str();
        if (e != 0) {
            os << var_name;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly operator*(const Int& scalar, const LaurentPoly& p) {
    LaurentPoly out;
    if (scalar == 0) return out;
    for (const auto& [e, c] : p.terms()) out.set_coeff(e, scalar * c);
    return out;
}

LaurentPoly cyclotomic_poly(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_poly: m must be positive");
    static std::map<unsigned long, LaurentPoly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }

    LaurentPoly result;
    if (m == 1) {
        result = LaurentPoly::var() - LaurentPoly::one();
    } else {
        LaurentPoly numerator = LaurentPoly::monomial(static_cast<long>(m), Int(1)) - LaurentPoly::one();
        for (unsigned long d = 1; d < m; ++d) {
            if (m % d == 0) {
                auto q = numerator.divided_exactly_by(cyclotomic_poly(d));
                if (!q) throw std::logic_error("cyclotomic_poly: division chain failed");
                numerator = *q;
            }
        }
        result = numerator;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(m, result);
    return result;
}

Int resultant(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    auto [fc, fs] = f.shifted(-f.min_exp()).dense_parts();
    auto [gc, gs] = g.shifted(-g.min_exp()).dense_parts();
    (void)fs;
    (void)gs;
    const long m = static_cast<long>(fc.size()) - 1;
    const long n = static_cast<long>(gc.size()) - 1;
    if (m == 0 && n == 0) return Int(1);
    if (m == 0) return pow_int(fc[0], static_cast<unsigned long>(n));
    if (n == 0) return pow_int(gc[0], static_cast<unsigned long>(m));

    // Sylvester matrix, f-block on top, coefficients descending.
    const std::size_t size = static_cast<std::size_t>(m + n);
    IntMatrix syl(size, size);
    for (long row = 0; row < n; ++row) {
        for (long i = 0; i <= m; ++i) {
            syl.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + i)) =
                fc[static_cast<std::size_t>(m - i)];
        }
    }
    for (long row = 0; row < m; ++row) {
        for (long i = 0; i <= n; ++i) {
            syl.at(static_cast<std::size_t>(n + row), static_cast<std::size_t>(row + i)) =
                gc[static_cast<std::size_t>(n - i)];
        }
    }
    return det_bareiss(syl);
}

RealPoly chebyshev_reduce(const LaurentPoly& d) {
    if (!d.is_palindromic()) throw std::invalid_argument("not real on circle");
    if (d.is_zero()) return RealPoly::zero();
    const long top = d.max_exp();

    // Chebyshev polynomials T_k(x), computed on demand.
    std::vector<RealPoly> cheb;
    cheb.push_back(RealPoly::constant(Rat(1)));
    if (top >= 1) cheb.push_back(RealPoly({Rat(0), Rat(1)}));
    for (long k = 2; k <= top; ++k) {
        const RealPoly two_x = RealPoly({Rat(0), Rat(2)});
        cheb.push_back(two_x * cheb[static_cast<std::size_t>(k - 1)] -
                       cheb[static_cast<std::size_t>(k - 2)]);
    }

    RealPoly out = RealPoly::constant(Rat(d.coeff(0)));
    for (long k = 1; k <= top; ++k) {
        const Int c = d.coeff(k);
        if (c != 0) out = out + cheb[static_cast<std::size_t>(k)] * Rat(2 * c);
    }
    return out;
}

CyclotomicSplit cyclotomic_strip(const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cyclotomic_strip: zero polynomial");
    CyclotomicSplit out;
    LaurentPoly rem = f.unit_normalized();
    long deg = rem.span();
    // phi(m) >= sqrt(m/2), so phi(m) <= deg bounds m by 2 deg^2.
    const unsigned long m_bound = 2 * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg) + 1;
    for (unsigned long m = 1; m <= m_bound && deg > 0; ++m) {
        if (totient(m) > static_cast<unsigned long>(deg)) continue;
        const LaurentPoly phi = cyclotomic_poly(m);
        unsigned long mult = 0;
        while (true) {
            auto q = rem.divided_exactly_by(phi);
            if (!q) break;
            rem = q->unit_normalized();
            deg = rem.span();
            ++mult;
        }
        if (mult > 0) out.factors.push_back({m, mult});
    }
    out.remainder = rem;
    return out;
}

LaurentPoly alexander_normalize(const LaurentPoly& f) { return f.unit_normalized(); }

LaurentPoly laurent_matrix_det(const std::vector<LaurentPoly>& row_major, std::size_t n) {
    if (row_major.size() != n * n) throw std::invalid_argument("laurent_matrix_det: bad shape");
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return row_major[0];
    LaurentPoly acc;
    std::vector<LaurentPoly> minor((n - 1) * (n - 1));
    for (std::size_t col = 0; col < n; ++col) {
        if (row_major[col].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t mj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[(i - 1) * (n - 1) + mj] = row_major[i * n + j];
                ++mj;
            }
        }
        LaurentPoly term = row_major[col] * laurent_matrix_det(minor, n - 1);
        acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace rhoslice
