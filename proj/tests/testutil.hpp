#pragma once

#include <cstdint>

#include "catalg/poly.hpp"
#include "catalg/qlinalg.hpp"

namespace catalg {

// Deterministic generator for test data. mt19937_64 output is pinned by the
// standard, and we avoid std::uniform_int_distribution (implementation
// defined) so fixtures reproduce everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}

    uint64_t next() {
        // splitmix64
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
    // small integer in [-b, b]
    long smallInt(long b) { return below(2 * b + 1) - b; }

    Rat rat(long b = 5) {
        long d = below(3) + 1;
        return Rat(smallInt(b), d);
    }

    Poly poly(int maxDeg, long b = 4) {
        int d = static_cast<int>(below(maxDeg + 1));
        std::vector<Rat> cs;
        for (int i = 0; i <= d; ++i) cs.push_back(Rat(smallInt(b)));
        return Poly(cs);
    }

    Poly polyNonzero(int maxDeg, long b = 4) {
        while (true) {
            Poly p = poly(maxDeg, b);
            if (!p.isZero()) return p;
        }
    }

    QMatrix qmatrix(int r, int c, long b = 9) {
        QMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Rat(smallInt(b));
        return m;
    }

private:
    uint64_t s_;
};

} // namespace catalg
