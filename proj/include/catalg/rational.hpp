#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace catalg {

// Arbitrary-precision rational, always canonical: gcd(num, den) = 1, den > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rat fromString(const std::string& s) { return Rat(mpq_class(s)); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool isZero() const { return sgn(v_) == 0; }
    bool isOne() const { return v_ == 1; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const { return Rat(mpq_class(v_ / o.v_)); }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

    Rat inverse() const { return Rat(mpq_class(1 / v_)); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rat operator*(long n, const Rat& r) { return Rat(n) * r; }

} // namespace catalg
