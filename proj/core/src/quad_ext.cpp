#include "rhoslice/quad_ext.hpp"

#include <sstream>

namespace rhoslice {

namespace {

// Exact square root of a nonnegative rational if it is a perfect square.
bool rational_sqrt(const Rat& x, Rat* out) {
    if (x < 0) return false;
    Int num = x.get_num();
    Int den = x.get_den();
    Int sn, sd;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    *out = rat(sn, sd);
    return true;
}

}  // namespace

QuadExtNumber::QuadExtNumber(Rat a, Rat b, Rat rad) : a_(std::move(a)), b_(std::move(b)), rad_(std::move(rad)) {
    if (b_ == 0) {
        rad_ = 0;
        return;
    }
    if (rad_ == 0) {
        b_ = 0;
        return;
    }
    // Perfect-square radicands collapse to rationals.
    Rat root;
    if (rad_ > 0 && rational_sqrt(rad_, &root)) {
        a_ += b_ * root;
        b_ = 0;
        rad_ = 0;
    }
}

void QuadExtNumber::check_compatible(const QuadExtNumber& rhs) const {
    if (b_ != 0 && rhs.b_ != 0 && rad_ != rhs.rad_) {
        throw std::invalid_argument("mismatched radicands");
    }
}

QuadExtNumber QuadExtNumber::operator+(const QuadExtNumber& rhs) const {
    check_compatible(rhs);
    const Rat rad = b_ != 0 ? rad_ : rhs.rad_;
    return QuadExtNumber(a_ + rhs.a_, b_ + rhs.b_, rad);
}

QuadExtNumber QuadExtNumber::operator-(const QuadExtNumber& rhs) const { return *this + (-rhs); }

QuadExtNumber QuadExtNumber::operator-() const { return QuadExtNumber(-a_, -b_, rad_); }

QuadExtNumber QuadExtNumber::operator*(const QuadExtNumber& rhs) const {
    check_compatible(rhs);
    const Rat rad = b_ != 0 ? rad_ : rhs.rad_;
    return QuadExtNumber(a_ * rhs.a_ + b_ * rhs.b_ * rad, a_ * rhs.b_ + b_ * rhs.a_, rad);
}

QuadExtNumber QuadExtNumber::scaled(const Rat& c) const {
    return QuadExtNumber(a_ * c, b_ * c, rad_);
}

bool QuadExtNumber::operator==(const QuadExtNumber& rhs) const {
    if (a_ != rhs.a_ || b_ != rhs.b_) return false;
    return b_ == 0 || rad_ == rhs.rad_;
}

QuadExtNumber QuadExtNumber::conj() const {
    if (rad_ < 0) return QuadExtNumber(a_, -b_, rad_);
    return *this;
}

int QuadExtNumber::exact_sign() const {
    if (!is_real()) throw std::invalid_argument("not real");
    if (b_ == 0) return sgn(a_);
    // a + b sqrt(rad) with rad > 0 not a perfect square; rationalize.
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs differ: compare a^2 against b^2 rad.
    const Rat left = a_ * a_;
    const Rat right = b_ * b_ * rad_;
    if (left == right) return 0;  // unreachable for irrational sqrt(rad)
    return left > right ? sa : sb;
}

std::string QuadExtNumber::to_string() const {
    std::ostringstream os;
    os << rational_to_string(a_);
    if (b_ != 0) {
        os << (b_ < 0 ? " - " : " + ");
        const Rat ab = b_ < 0 ? Rat(-b_) : b_;
        if (ab != 1) os << rational_to_string(ab) << "*";
        os << "sqrt(" << rational_to_string(rad_) << ")";
    }
    return os.str();
}

}  // namespace rhoslice
