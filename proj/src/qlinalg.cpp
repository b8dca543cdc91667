#include "catalg/qlinalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "catalg/errors.hpp"

namespace catalg {

namespace {
// Below this many row*col cells the OpenMP fork costs more than it saves.
constexpr long kParallelCellThreshold = 4096;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const { return qMatMulParallel(*this, o); }

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::hstack(const QMatrix& o) const {
    QMatrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

QMatrix QMatrix::vstack(const QMatrix& o) const {
    QMatrix r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

QMatrix QMatrix::subCols(int c0, int c1) const {
    QMatrix r(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
        for (int j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
    return r;
}

bool QMatrix::isZero() const {
    for (const auto& x : a_) if (!x.isZero()) return false;
    return true;
}

QMatrix qMatMulSerial(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.isZero()) r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

QMatrix qMatMulParallel(const QMatrix& a, const QMatrix& b) {
    long cells = static_cast<long>(a.rows()) * b.cols();
    if (cells < kParallelCellThreshold) return qMatMulSerial(a, b);
    QMatrix r(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.isZero()) r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

namespace {

RrefResult rrefImpl(QMatrix m, bool parallel) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m.at(i, c).isZero()) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        long cells = static_cast<long>(m.rows()) * (m.cols() - c);
        if (parallel && cells >= kParallelCellThreshold) {
#pragma omp parallel for schedule(dynamic)
            for (int i = 0; i < m.rows(); ++i) {
                if (i == r || m.at(i, c).isZero()) continue;
                Rat f = m.at(i, c);
                for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
            }
        } else {
            for (int i = 0; i < m.rows(); ++i) {
                if (i == r || m.at(i, c).isZero()) continue;
                Rat f = m.at(i, c);
                for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

RrefResult rrefSerial(QMatrix m) { return rrefImpl(std::move(m), false); }
RrefResult rref(QMatrix m) { return rrefImpl(std::move(m), true); }

int qRank(const QMatrix& m) { return rref(m).rank(); }

QMatrix qNullspace(const QMatrix& m) {
    RrefResult e = rref(m);
    std::vector<bool> isPivot(static_cast<size_t>(m.cols()), false);
    for (int c : e.pivotCols) isPivot[static_cast<size_t>(c)] = true;
    std::vector<int> freeCols;
    for (int c = 0; c < m.cols(); ++c)
        if (!isPivot[static_cast<size_t>(c)]) freeCols.push_back(c);
    QMatrix basis(m.cols(), static_cast<int>(freeCols.size()));
    for (size_t k = 0; k < freeCols.size(); ++k) {
        int fc = freeCols[k];
        basis.at(fc, static_cast<int>(k)) = Rat(1);
        for (size_t pi = 0; pi < e.pivotCols.size(); ++pi)
            basis.at(e.pivotCols[pi], static_cast<int>(k)) = -e.m.at(static_cast<int>(pi), fc);
    }
    return basis;
}

std::optional<QMatrix> qSolve(const QMatrix& a, const QMatrix& b) {
    QMatrix aug = a.hstack(b);
    RrefResult e = rref(aug);
    // inconsistent iff a pivot lands in the b block
    for (int c : e.pivotCols)
        if (c >= a.cols()) return std::nullopt;
    QMatrix x(a.cols(), b.cols());
    for (size_t pi = 0; pi < e.pivotCols.size(); ++pi) {
        int pc = e.pivotCols[pi];
        for (int j = 0; j < b.cols(); ++j)
            x.at(pc, j) = e.m.at(static_cast<int>(pi), a.cols() + j);
    }
    return x;
}

std::optional<QMatrix> qInverse(const QMatrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = qSolve(a, QMatrix::identity(a.rows()));
    if (!x) return std::nullopt;
    if (!(a * *x == QMatrix::identity(a.rows()))) return std::nullopt;
    return x;
}

} // namespace catalg
