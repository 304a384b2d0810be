#ifndef WHITEALG_LINALG_HPP
#define WHITEALG_LINALG_HPP

#include <map>
#include <vector>

#include "whitealg/rational.hpp"

namespace whitealg {

// Dense exact-rational matrix, row-major. Sized for the layer and primitive
// computations of this project (hundreds of rows/cols at most).
class QMatrix {
public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[r][c]; }
    const Rational& at(int r, int c) const { return a_[r][c]; }

    bool operator==(const QMatrix&) const = default;

private:
    int rows_, cols_;
    std::vector<std::vector<Rational>> a_;
};

// Gaussian elimination; the input is consumed.
int rank_destructive(QMatrix& m);
inline int rank_of(QMatrix m) { return rank_destructive(m); }
Rational determinant(QMatrix m);  // square input

// Rank of a sparse matrix given as rows of (column -> value).
// Min-fill-flavoured pivoting keeps the elimination sparse on the
// incidence-like matrices that arise from coproducts.
int sparse_rank(std::vector<std::map<int, Rational>> rows);

}  // namespace whitealg

#endif
