#include "qtri/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtri {

QMatrix::QMatrix(PresentationPtr pres, int rows, int cols)
    : pres_(std::move(pres)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative size");
    entries_.assign(static_cast<size_t>(rows) * cols, TorusElement(pres_));
}

QMatrix QMatrix::identity(PresentationPtr pres, int size) {
    QMatrix m(pres, size, size);
    for (int i = 0; i < size; ++i) m.at(i, i) = TorusElement::scalar(pres, LaurentScalar(1));
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: size mismatch in product");
    QMatrix r(pres_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            TorusElement acc(pres_);
            for (int t = 0; t < cols_; ++t) acc = acc + at(i, t) * o.at(t, j);
            r.at(i, j) = acc;
        }
    return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t t = 0; t < entries_.size(); ++t)
        if (!(entries_[t] == o.entries_[t])) return false;
    return true;
}

QMatrix QMatrix::submatrix(const std::vector<int>& rowSet, const std::vector<int>& colSet) const {
    QMatrix r(pres_, static_cast<int>(rowSet.size()), static_cast<int>(colSet.size()));
    for (size_t i = 0; i < rowSet.size(); ++i)
        for (size_t j = 0; j < colSet.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(rowSet[i], colSet[j]);
    return r;
}

QQuantumReport isQQuantum(const QMatrix& m, int n) {
    QQuantumReport rep;
    LaurentScalar q = qPower(n, 1), qinv = qPower(n, -1);
    auto add = [&](int r1, int r2, int c1, int c2, const char* rel) {
        rep.failures.push_back({r1, r2, c1, c2, rel});
    };
    for (int r1 = 0; r1 < m.rows(); ++r1)
        for (int r2 = r1 + 1; r2 < m.rows(); ++r2)
            for (int c1 = 0; c1 < m.cols(); ++c1)
                for (int c2 = c1 + 1; c2 < m.cols(); ++c2) {
                    const TorusElement &a = m.at(r1, c1), &b = m.at(r1, c2), &c = m.at(r2, c1),
                                       &d = m.at(r2, c2);
                    if (a * b != b * a * q) add(r1, r2, c1, c2, "ab = q ba");
                    if (a * c != c * a * q) add(r1, r2, c1, c2, "ac = q ca");
                    if (b * d != d * b * q) add(r1, r2, c1, c2, "bd = q db");
                    if (c * d != d * c * q) add(r1, r2, c1, c2, "cd = q dc");
                    if (b * c != c * b) add(r1, r2, c1, c2, "bc = cb");
                    if (a * d - d * a != (b * c) * (q - qinv)) add(r1, r2, c1, c2, "ad - da = (q - q^-1) bc");
                }
    return rep;
}

std::string QQuantumReport::str() const {
    if (pass()) return "q-quantum: all relations hold";
    std::ostringstream os;
    os << "q-quantum: " << failures.size() << " failures";
    for (const auto& f : failures)
        os << "\n  rows (" << f.r1 << "," << f.r2 << ") cols (" << f.c1 << "," << f.c2
           << "): " << f.relation;
    return os.str();
}

namespace {

int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

}  // namespace

TorusElement qdet(const QMatrix& m, int n) {
    if (m.rows() != m.cols()) throw std::invalid_argument("qdet: matrix not square");
    const int r = m.rows();
    TorusElement acc(m.presentation());
    if (r == 0) return TorusElement::scalar(m.presentation(), LaurentScalar(1));
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TorusElement term = m.at(0, perm[0]);
        for (int i = 1; i < r; ++i) term = term * m.at(i, perm[i]);
        int l = inversions(perm);
        LaurentScalar sign = qPower(n, l);
        if (l % 2 == 1) sign = -sign;
        acc = acc + term * sign;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

TorusElement qdetColumn(const QMatrix& m, int n) {
    if (m.rows() != m.cols()) throw std::invalid_argument("qdet: matrix not square");
    const int r = m.rows();
    TorusElement acc(m.presentation());
    if (r == 0) return TorusElement::scalar(m.presentation(), LaurentScalar(1));
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TorusElement term = m.at(perm[0], 0);
        for (int i = 1; i < r; ++i) term = term * m.at(perm[i], i);
        int l = inversions(perm);
        LaurentScalar sign = qPower(n, l);
        if (l % 2 == 1) sign = -sign;
        acc = acc + term * sign;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

TorusElement qminor(const QMatrix& m, int n, const std::vector<int>& rowSet,
                    const std::vector<int>& colSet) {
    if (rowSet.size() != colSet.size()) throw std::invalid_argument("qminor: |I| != |J|");
    return qdet(m.submatrix(rowSet, colSet), n);
}

namespace {

QMatrix adjugate(const QMatrix& m, int n) {
    const int r = m.rows();
    QMatrix adj(m.presentation(), r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::vector<int> rows, cols;
            for (int t = 0; t < r; ++t) {
                if (t != j) rows.push_back(t);   // remove j-th row
                if (t != i) cols.push_back(t);   // remove i-th column
            }
            TorusElement d = qminor(m, n, rows, cols);
            LaurentScalar s = qPower(n, i - j);
            if (((i - j) % 2 + 2) % 2 == 1) s = -s;
            adj.at(i, j) = d * s;
        }
    return adj;
}

}  // namespace

AdjugateReport adjugateCheck(const QMatrix& m, int n) {
    AdjugateReport rep;
    const int r = m.rows();
    TorusElement d = qdet(m, n);
    QMatrix want(m.presentation(), r, r);
    for (int i = 0; i < r; ++i) want.at(i, i) = d;
    QMatrix adj = adjugate(m, n);
    rep.leftPass = (adj * m == want);
    rep.rightPass = (m * adj == want);
    return rep;
}

std::vector<TorusElement> cramerSolve(const QMatrix& mprime, int n) {
    const int r = mprime.rows();
    if (mprime.cols() != r + 1) throw std::invalid_argument("cramerSolve: expected r x (r+1) input");
    auto pres = mprime.presentation();

    std::vector<int> all(r);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> lastCols(r);
    std::iota(lastCols.begin(), lastCols.end(), 1);
    QMatrix m = mprime.submatrix(all, lastCols);

    TorusElement det = qdet(m, n);
    ExponentVector dk;
    LaurentScalar dc;
    std::int64_t hqExp = 0;
    bool neg = false;
    if (!det.isMonomial(&dk, &dc) || !dc.isUnitMonomial(&hqExp, &neg))
        throw std::invalid_argument("cramerSolve: det_q is not an invertible monomial");
    // inverse of c x^k is c^{-1} x^{-k} up to the Weyl commutation factor:
    // x^k x^{-k} = 1 exactly, so det^{-1} = (+-1) hq^{-e} x^{-k}
    LaurentScalar invc = LaurentScalar::hqPow(-hqExp);
    if (neg) invc = -invc;
    TorusElement detInv = TorusElement::monomial(pres, -dk, invc);

    std::vector<TorusElement> x;
    for (int i = 0; i < r; ++i) {
        std::vector<int> cols;
        for (int t = 0; t <= r; ++t)
            if (t != i + 1) cols.push_back(t);
        TorusElement di = qdet(mprime.submatrix(all, cols), n);
        LaurentScalar s = qPower(n, i);
        if (i % 2 == 1) s = -s;
        x.push_back(detInv * di * s);
    }

    // verify M x = c exactly
    for (int i = 0; i < r; ++i) {
        TorusElement acc(pres);
        for (int t = 0; t < r; ++t) acc = acc + m.at(i, t) * x[t];
        if (acc != mprime.at(i, 0))
            throw std::logic_error("cramerSolve: residual M x - c is nonzero in row " +
                                   std::to_string(i));
    }
    return x;
}

}  // namespace qtri
