#pragma once

#include <optional>
#include <vector>

#include "catalg/rational.hpp"

namespace catalg {

// Dense matrix over Q, row-major. The elimination kernels come in two
// flavors: a serial reference and an OpenMP row-parallel version. Both
// use identical pivoting (first nonzero entry scanning down the column),
// so results are bit-for-bit equal; tests compare them directly.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    QMatrix transpose() const;
    QMatrix hstack(const QMatrix& o) const;
    QMatrix vstack(const QMatrix& o) const;
    QMatrix subCols(int c0, int c1) const; // columns [c0, c1)
    bool isZero() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    QMatrix m;
    std::vector<int> pivotCols;
    int rank() const { return static_cast<int>(pivotCols.size()); }
};

// Reduced row echelon form. `rrefSerial` is the reference implementation;
// `rref` parallelizes the row updates with OpenMP above a size threshold.
RrefResult rrefSerial(QMatrix m);
RrefResult rref(QMatrix m);

int qRank(const QMatrix& m);
// Basis of the right nullspace, one column per basis vector.
QMatrix qNullspace(const QMatrix& m);
// One solution X of A X = B, or nullopt when inconsistent.
std::optional<QMatrix> qSolve(const QMatrix& a, const QMatrix& b);
std::optional<QMatrix> qInverse(const QMatrix& a);

QMatrix qMatMulSerial(const QMatrix& a, const QMatrix& b);
QMatrix qMatMulParallel(const QMatrix& a, const QMatrix& b);

} // namespace catalg
