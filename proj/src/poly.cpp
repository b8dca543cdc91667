#include "catalg/poly.hpp"

#include <sstream>

namespace catalg {

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
    if (c.isZero()) return Poly();
    std::vector<Rat> cs(static_cast<size_t>(k) + 1, Rat(0));
    cs[static_cast<size_t>(k)] = c;
    return Poly(std::move(cs));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
    return Poly(std::move(cs));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> cs(coeffs_);
    for (auto& c : cs) c = -c;
    return Poly(std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
    if (isZero() || o.isZero()) return Poly();
    std::vector<Rat> cs(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(cs));
}

Poly Poly::operator*(const Rat& c) const {
    if (c.isZero()) return Poly();
    std::vector<Rat> cs(coeffs_);
    for (auto& x : cs) x *= c;
    return Poly(std::move(cs));
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly();
    std::vector<Rat> cs(coeffs_.size() - 1, Rat(0));
    for (size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(cs));
}

Poly Poly::pow(int n) const {
    Poly r = Poly::one(), b = *this;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + coeffs_[static_cast<size_t>(i)];
    return r;
}

Poly Poly::compose(const Poly& g) const {
    Poly r;
    for (int i = degree(); i >= 0; --i) r = r * g + Poly(coeffs_[static_cast<size_t>(i)]);
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    Poly q, r = *this;
    const Rat dl = d.lc().inverse();
    while (!r.isZero() && r.degree() >= d.degree()) {
        Rat c = r.lc() * dl;
        int k = r.degree() - d.degree();
        Poly t = Poly::monomial(c, k);
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

std::optional<Poly> Poly::divideExact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.isZero()) return std::nullopt;
    return q;
}

std::string Poly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeffs_[static_cast<size_t>(i)];
        if (c.isZero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rat a = c.abs();
        if (i == 0 || !a.isOne()) os << a.str();
        if (i > 0) {
            if (!a.isOne()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly polyGcd(const Poly& a, const Poly& b) {
    Poly x = a.monic(), y = b.monic();
    while (!y.isZero()) {
        Poly r = x.divmod(y).second.monic(); // keep coefficients small
        x = y;
        y = r;
    }
    return x;
}

BezoutTriple polyExtGcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(), u1 = Poly::zero();
    Poly v0 = Poly::zero(), v1 = Poly::one();
    while (!r1.isZero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        Poly u2 = u0 - q * u1; u0 = u1; u1 = u2;
        Poly v2 = v0 - q * v1; v0 = v1; v1 = v2;
    }
    if (r0.isZero()) return {Poly::zero(), Poly::zero(), Poly::zero()};
    Rat s = r0.lc().inverse();
    return {r0 * s, u0 * s, v0 * s};
}

Poly polyLcm(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly::zero();
    Poly g = polyGcd(a, b);
    return (a * b).divideExact(g)->monic();
}

RatFunc::RatFunc(const Poly& p, const Poly& q) : num_(p), den_(q) {
    if (num_.isZero()) { den_ = Poly::one(); return; }
    Poly g = polyGcd(num_, den_);
    if (!g.isOne()) {
        num_ = *num_.divideExact(g);
        den_ = *den_.divideExact(g);
    }
    Rat s = den_.lc().inverse();
    num_ = num_ * s;
    den_ = den_ * s;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }
RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::inverse() const { return RatFunc(den_, num_); }

std::string RatFunc::str(const std::string& var) const {
    if (isPolynomial()) return num_.str(var);
    std::string n = num_.str(var), d = den_.str(var);
    std::string ns = num_.degree() > 0 ? "(" + n + ")" : n;
    std::string ds = den_.degree() > 0 ? "(" + d + ")" : d;
    return ns + "/" + ds;
}

} // namespace catalg
