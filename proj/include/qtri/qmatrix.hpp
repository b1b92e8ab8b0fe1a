#pragma once

#include "qtri/qtorus.hpp"

#include <string>
#include <vector>

namespace qtri {

/// Square (or rectangular) matrix with TorusElement entries over a shared
/// presentation.
class QMatrix {
public:
    QMatrix(PresentationPtr pres, int rows, int cols);
    static QMatrix identity(PresentationPtr pres, int size);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PresentationPtr& presentation() const { return pres_; }

    const TorusElement& at(int i, int j) const { return entries_[i * cols_ + j]; }
    TorusElement& at(int i, int j) { return entries_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const;

    QMatrix submatrix(const std::vector<int>& rowSet, const std::vector<int>& colSet) const;

private:
    PresentationPtr pres_;
    int rows_, cols_;
    std::vector<TorusElement> entries_;
};

struct QQuantumReport {
    struct Failure {
        int r1, r2, c1, c2;       // 2x2 submatrix (0-based)
        std::string relation;     // which of the six relations failed
    };
    std::vector<Failure> failures;
    bool pass() const { return failures.empty(); }
    std::string str() const;
};

/// check all six relations of a q-quantum matrix on every 2x2 submatrix,
/// with q = hq^{2n^2}
QQuantumReport isQQuantum(const QMatrix& m, int n);

/// row-ordered quantum determinant: sum over permutations of
/// (-q)^{l(sigma)} u_{1,sigma(1)} ... u_{r,sigma(r)}
TorusElement qdet(const QMatrix& m, int n);
/// the column-ordered form of the same determinant
TorusElement qdetColumn(const QMatrix& m, int n);

/// quantum minor: qdet of the I x J submatrix (index sets 0-based, same size)
TorusElement qminor(const QMatrix& m, int n, const std::vector<int>& rowSet,
                    const std::vector<int>& colSet);

struct AdjugateReport {
    bool leftPass = false, rightPass = false;
    bool pass() const { return leftPass && rightPass; }
};

/// adjugate u^! with (u^!)_{ij} = (-q)^{i-j} det_q(u^{ji}); checks
/// u^! u = u u^! = det_q(u) Id
AdjugateReport adjugateCheck(const QMatrix& m, int n);

/// Cramer solve for M x = c where Mprime = [c | M] is r x (r+1) and
/// det_q(M) is a unit monomial. Verifies the residual exactly.
std::vector<TorusElement> cramerSolve(const QMatrix& mprime, int n);

}  // namespace qtri
