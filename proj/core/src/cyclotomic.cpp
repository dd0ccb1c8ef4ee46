#include "rhoslice/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "rhoslice/laurent.hpp"

namespace rhoslice {

namespace {

// Dense integer coefficients of Phi_k, cached per order.
const std::vector<Int>& phi_coeffs(unsigned long k) {
    static std::map<unsigned long, std::vector<Int>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    auto [dense, shift] = cyclotomic_poly(k).dense_parts();
    (void)shift;
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(k, std::move(dense)).first->second;
}

// Remainder of a dense rational polynomial modulo the (monic) Phi_k.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> poly, unsigned long k) {
    const std::vector<Int>& phi = phi_coeffs(k);
    const std::size_t deg_phi = phi.size() - 1;
    while (poly.size() > deg_phi) {
        const Rat c = poly.back();
        poly.pop_back();
        if (c != 0) {
            const std::size_t base = poly.size() - deg_phi;
            for (std::size_t i = 0; i < deg_phi; ++i) {
                poly[base + i] -= c * Rat(phi[i]);
            }
        }
    }
    poly.resize(deg_phi, Rat(0));
    return poly;
}

}  // namespace

CyclotomicElement::CyclotomicElement(unsigned long order) : order_(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    coords_.assign(totient(order), Rat(0));
}

CyclotomicElement CyclotomicElement::from_rational(unsigned long order, const Rat& value) {
    CyclotomicElement e(order);
    e.coords_[0] = value;
    return e;
}

CyclotomicElement CyclotomicElement::root_power(unsigned long order, long power) {
    CyclotomicElement e(order);
    long j = power % static_cast<long>(order);
    if (j < 0) j += static_cast<long>(order);
    std::vector<Rat> poly(static_cast<std::size_t>(j) + 1, Rat(0));
    poly.back() = Rat(1);
    e.coords_ = reduce_mod_phi(std::move(poly), order);
    return e;
}

bool CyclotomicElement::is_zero() const {
    for (const Rat& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] != 0) return false;
    }
    return true;
}

Rat CyclotomicElement::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("not a rational element");
    return coords_[0];
}

void CyclotomicElement::check_same_order(const CyclotomicElement& rhs) const {
    if (order_ != rhs.order_) throw std::invalid_argument("mismatched cyclotomic orders");
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& rhs) const {
    check_same_order(rhs);
    CyclotomicElement out(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] + rhs.coords_[i];
    return out;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& rhs) const {
    check_same_order(rhs);
    CyclotomicElement out(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] - rhs.coords_[i];
    return out;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement out(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = -coords_[i];
    return out;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& rhs) const {
    check_same_order(rhs);
    CyclotomicElement out(order_);
    const std::size_t n = coords_.size();
    std::vector<Rat> prod(2 * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (rhs.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * rhs.coords_[j];
        }
    }
    out.coords_ = reduce_mod_phi(std::move(prod), order_);
    return out;
}

CyclotomicElement CyclotomicElement::scaled(const Rat& c) const {
    CyclotomicElement out(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] * c;
    return out;
}

bool CyclotomicElement::operator==(const CyclotomicElement& rhs) const {
    return order_ == rhs.order_ && coords_ == rhs.coords_;
}

CyclotomicElement CyclotomicElement::conj() const {
    CyclotomicElement out(order_);
    std::vector<Rat> acc(order_, Rat(0));
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        const std::size_t e = j == 0 ? 0 : order_ - j;
        acc[e] += coords_[j];
    }
    out.coords_ = reduce_mod_phi(std::move(acc), order_);
    return out;
}

bool CyclotomicElement::is_real() const { return conj() == *this; }

DyadicInterval CyclotomicElement::real_enclosure(long prec) const {
    // For a conjugation-fixed element, the value equals the sum of
    // coordinate * cos(2 pi j / order).
    DyadicInterval acc = DyadicInterval::exact_zero(prec);
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        const DyadicInterval c =
            cos_two_pi(rat(Int(static_cast<unsigned long>(j)), Int(order_)), prec);
        acc = acc + c.scaled(coords_[j]);
    }
    return acc;
}

std::string CyclotomicElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << rational_to_string(coords_[i]);
    }
    os << ") in Q(zeta_" << order_ << ")";
    return os.str();
}

}  // namespace rhoslice
