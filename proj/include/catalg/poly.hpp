#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalg/rational.hpp"

namespace catalg {

// Univariate polynomial over Q, dense coefficients indexed by degree.
// Invariant: leading coefficient nonzero unless the polynomial is zero.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { coeffs_.push_back(c); normalize(); }
    Poly(long c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rat(1)); }
    // c * x^k
    static Poly monomial(const Rat& c, int k);
    static Poly variable() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool isZero() const { return coeffs_.empty(); }
    bool isOne() const { return degree() == 0 && coeffs_[0].isOne(); }
    bool isConstant() const { return degree() <= 0; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : Rat(0); }
    Rat lc() const { return isZero() ? Rat(0) : coeffs_.back(); }
    bool isMonic() const { return !isZero() && lc().isOne(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const { return isZero() ? *this : *this * lc().inverse(); }
    Poly derivative() const;
    Poly pow(int n) const;
    Rat eval(const Rat& x) const;
    Poly compose(const Poly& g) const; // this(g(x))

    // Euclidean division by a nonzero divisor: returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // Exact division; nullopt if the remainder is nonzero.
    std::optional<Poly> divideExact(const Poly& d) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// Monic gcd; zero iff both inputs are zero.
Poly polyGcd(const Poly& a, const Poly& b);
// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
struct BezoutTriple { Poly g, u, v; };
BezoutTriple polyExtGcd(const Poly& a, const Poly& b);
Poly polyLcm(const Poly& a, const Poly& b);

// Rational function p/q in lowest terms, q monic; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly::one()) {}
    RatFunc(long c) : num_(Poly(c)), den_(Poly::one()) {}
    RatFunc(const Poly& p, const Poly& q); // normalizes; q must be nonzero

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isPolynomial() const { return den_.isOne(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const; // o nonzero
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const; // nonzero
    std::string str(const std::string& var = "x") const;

private:
    Poly num_, den_;
};

} // namespace catalg
