#include <doctest.h>

#include "catalg/qlinalg.hpp"
#include "testutil.hpp"

using namespace catalg;

TEST_CASE("serial and parallel kernels agree exactly") {
    Rng rng(7);
    for (int iter = 0; iter < 10; ++iter) {
        int r = 20 + static_cast<int>(rng.below(60));
        int c = 20 + static_cast<int>(rng.below(60));
        QMatrix m = rng.qmatrix(r, c);
        RrefResult a = rrefSerial(m);
        RrefResult b = rref(m);
        CHECK(a.m == b.m);
        CHECK(a.pivotCols == b.pivotCols);

        QMatrix n = rng.qmatrix(c, 30);
        CHECK(qMatMulSerial(m, n) == qMatMulParallel(m, n));
    }
}

TEST_CASE("rref projector properties") {
    Rng rng(8);
    for (int iter = 0; iter < 30; ++iter) {
        QMatrix m = rng.qmatrix(4 + static_cast<int>(rng.below(4)),
                                4 + static_cast<int>(rng.below(4)));
        RrefResult e = rref(m);
        // pivot columns are unit vectors
        for (size_t pi = 0; pi < e.pivotCols.size(); ++pi) {
            for (int i = 0; i < e.m.rows(); ++i) {
                Rat expect(i == static_cast<int>(pi) ? 1 : 0);
                CHECK(e.m.at(i, e.pivotCols[pi]) == expect);
            }
        }
    }
}

TEST_CASE("nullspace and solve satisfy their defining identities") {
    Rng rng(9);
    for (int iter = 0; iter < 40; ++iter) {
        int r = 2 + static_cast<int>(rng.below(5));
        int c = 2 + static_cast<int>(rng.below(5));
        QMatrix a = rng.qmatrix(r, c, 4);
        QMatrix ns = qNullspace(a);
        CHECK((a * ns).isZero());
        CHECK(qRank(a) + ns.cols() == c);

        // consistent system: b = a * x0
        QMatrix x0 = rng.qmatrix(c, 2, 3);
        QMatrix b = a * x0;
        auto x = qSolve(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("inverse") {
    Rng rng(10);
    int found = 0;
    for (int iter = 0; iter < 20 && found < 10; ++iter) {
        QMatrix a = rng.qmatrix(4, 4, 5);
        auto inv = qInverse(a);
        if (!inv) continue;
        ++found;
        CHECK(a * *inv == QMatrix::identity(4));
        CHECK(*inv * a == QMatrix::identity(4));
    }
    CHECK(found > 0);
}
