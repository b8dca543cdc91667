#pragma once

#include <vector>

#include "catalg/poly.hpp"

namespace catalg {

struct PolyFactor {
    Poly factor; // monic, irreducible over Q
    int multiplicity;
};

// Yun's squarefree decomposition: p = lc * prod g_i^i with g_i monic squarefree
// and pairwise coprime; only nontrivial g_i are listed.
std::vector<PolyFactor> squarefreeDecomposition(const Poly& p);

// Full factorization over Q into monic irreducibles with multiplicities.
// Throws DegreeBoundExceeded when deg p exceeds the bound.
std::vector<PolyFactor> polyFactor(const Poly& p, int degreeBound = 12);

bool isIrreducible(const Poly& p, int degreeBound = 12);
// f squarefree <=> gcd(f, f') constant
bool isSquarefree(const Poly& p);
// Largest divisor of p coprime to s (strips all factors shared with s).
Poly coprimePart(const Poly& p, const Poly& s);
// True iff p divides some power of s (up to a scalar).
bool dividesPowerOf(const Poly& p, const Poly& s);

} // namespace catalg
