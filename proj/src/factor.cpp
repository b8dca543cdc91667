#include "catalg/factor.hpp"

#include <algorithm>

#include "catalg/errors.hpp"

namespace catalg {

namespace {

// Positive divisors by trial division, ascending.
std::vector<mpz_class> divisorsOf(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, big;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) big.push_back(n / i);
        }
    }
    for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
    return small;
}

// Scale to a primitive integer polynomial (content and denominators removed).
Poly integerize(const Poly& p) {
    mpz_class denLcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.den();
        denLcm = denLcm / gcd(denLcm, d) * d;
    }
    std::vector<Rat> cs;
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class n = c.num() * (denLcm / c.den());
        content = gcd(content, n);
        cs.push_back(Rat(mpq_class(n)));
    }
    if (content == 0) return Poly();
    for (auto& c : cs) c = Rat(mpq_class(c.num() / content));
    return Poly(cs);
}

std::vector<Rat> rationalRoots(const Poly& q) {
    // q integer primitive with nonzero constant term
    std::vector<Rat> roots;
    mpz_class a0 = q.coeff(0).num(), an = q.lc().num();
    auto ps = divisorsOf(a0);
    auto qs = divisorsOf(an);
    for (const auto& den : qs) {
        for (const auto& num : ps) {
            for (int sign : {1, -1}) {
                Rat r(mpq_class(sign * num, den));
                if (q.eval(r).isZero()) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Interpolating polynomial through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    Poly r;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly li = Poly::one();
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * (Poly::variable() - Poly(xs[j]));
            denom *= xs[i] - xs[j];
        }
        r = r + li * (ys[i] / denom);
    }
    return r;
}

// Deterministic Kronecker search: smallest-degree factor first, divisor
// tuples in ascending absolute value, positive sign before negative.
std::optional<Poly> kroneckerFactor(const Poly& h) {
    int n = h.degree();
    Poly hz = integerize(h);
    for (int d = 2; d <= n / 2; ++d) {
        std::vector<Rat> xs;
        std::vector<mpz_class> vals;
        for (int j = 0; j <= d; ++j) {
            long x = (j % 2 == 0) ? j / 2 : -(j / 2 + 1); // 0, -1, 1, -2, 2, ...
            Rat v = hz.eval(Rat(x));
            if (v.isZero()) continue; // rational root missed upstream; skip point
            xs.push_back(Rat(x));
            vals.push_back(v.num());
        }
        if (static_cast<int>(xs.size()) < d + 1) continue;
        xs.resize(static_cast<size_t>(d) + 1);
        vals.resize(static_cast<size_t>(d) + 1);
        std::vector<std::vector<Rat>> cand(xs.size());
        for (size_t j = 0; j < xs.size(); ++j) {
            for (const auto& dv : divisorsOf(vals[j])) {
                cand[j].push_back(Rat(mpq_class(dv)));
                cand[j].push_back(Rat(mpq_class(-dv)));
            }
        }
        std::vector<size_t> idx(xs.size(), 0);
        while (true) {
            std::vector<Rat> ys(xs.size());
            for (size_t j = 0; j < xs.size(); ++j) ys[j] = cand[j][idx[j]];
            Poly c = interpolate(xs, ys);
            if (c.degree() == d) {
                auto q = h.divideExact(c.monic());
                if (q) return c.monic();
            }
            size_t k = 0;
            while (k < idx.size() && ++idx[k] == cand[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    return std::nullopt;
}

// h monic squarefree with no rational roots; splits recursively.
void factorRootless(const Poly& h, std::vector<Poly>& out) {
    if (h.degree() <= 0) return;
    if (h.degree() <= 3) { out.push_back(h); return; } // no roots => irreducible
    auto f = kroneckerFactor(h);
    if (!f) { out.push_back(h); return; }
    factorRootless(*f, out);
    factorRootless(*h.divideExact(*f), out);
}

std::vector<Poly> factorSquarefree(const Poly& g) {
    std::vector<Poly> out;
    Poly h = g.monic();
    // strip x^k
    while (h.coeff(0).isZero() && h.degree() > 0) {
        out.push_back(Poly::variable());
        h = *h.divideExact(Poly::variable());
    }
    if (h.degree() >= 1) {
        Poly hz = integerize(h);
        for (const auto& r : rationalRoots(hz)) {
            Poly lin = Poly::variable() - Poly(r);
            while (auto q = h.divideExact(lin)) {
                out.push_back(lin);
                h = *q;
            }
        }
    }
    factorRootless(h, out);
    return out;
}

} // namespace

std::vector<PolyFactor> squarefreeDecomposition(const Poly& p) {
    std::vector<PolyFactor> out;
    Poly f = p.monic();
    if (f.degree() <= 0) return out;
    Poly fp = f.derivative();
    Poly a = polyGcd(f, fp);
    Poly b = *f.divideExact(a);
    Poly c = *fp.divideExact(a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly ai = polyGcd(b, d);
        if (ai.degree() > 0) out.push_back({ai, i});
        b = *b.divideExact(ai);
        c = *d.divideExact(ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<PolyFactor> polyFactor(const Poly& p, int degreeBound) {
    if (p.isZero()) throw Error("polyFactor: zero polynomial");
    if (p.degree() > degreeBound)
        throw DegreeBoundExceeded("polyFactor: degree " + std::to_string(p.degree()) +
                                  " exceeds bound " + std::to_string(degreeBound));
    std::vector<PolyFactor> out;
    for (const auto& [g, mult] : squarefreeDecomposition(p)) {
        for (const auto& irr : factorSquarefree(g)) out.push_back({irr, mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (int i = a.factor.degree(); i >= 0; --i) {
            if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
        }
        return false;
    });
    return out;
}

bool isIrreducible(const Poly& p, int degreeBound) {
    if (p.degree() <= 0) return false;
    auto fs = polyFactor(p, degreeBound);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

bool isSquarefree(const Poly& p) {
    if (p.isZero()) return false;
    if (p.degree() == 0) return true;
    return polyGcd(p, p.derivative()).degree() == 0;
}

Poly coprimePart(const Poly& p, const Poly& s) {
    Poly r = p.monic();
    if (r.isZero()) return r;
    while (true) {
        Poly g = polyGcd(r, s);
        if (g.degree() == 0) return r;
        r = *r.divideExact(g);
    }
}

bool dividesPowerOf(const Poly& p, const Poly& s) {
    if (p.isZero()) return false;
    return coprimePart(p, s).degree() == 0;
}

} // namespace catalg
