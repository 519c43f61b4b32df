/**
 * Dense integer matrices with exact normal forms: Smith normal form with
 * unimodular transforms (and their inverses), Bareiss determinant and
 * rank, and the unimodular basis extension used for lattice saturations.
 */

#ifndef LVMB_INTMATRIX_HPP
#define LVMB_INTMATRIX_HPP

#include <vector>

#include "lvmb/rational.hpp"

namespace lvmb {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);

    IntMatrix transposed() const;
    IntVec row(int i) const;
    IntVec col(int j) const;

    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_zero() const;
};

IntMatrix mul(const IntMatrix& A, const IntMatrix& B);
IntVec mul(const IntMatrix& A, const IntVec& x);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det(const IntMatrix& A);

/// Rank over the rationals (fraction-free elimination).
int rank(const IntMatrix& A);

struct SNFResult {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix V;  // cols x cols, unimodular
    IntMatrix D;  // diagonal, nonnegative, d_i | d_{i+1}
    int rank = 0;
};

/// Extended result that also carries the inverse transforms, tracked
/// during the reduction (cheaper and exacter than inverting after).
struct SNFExtResult {
    IntMatrix U, V, D, Uinv, Vinv;
    int rank = 0;
};

/// Smith normal form: U*A*V = D with the divisibility chain. Total.
SNFResult snf(const IntMatrix& A);
SNFExtResult snf_ext(const IntMatrix& A);

/// Nonzero diagonal entries of D, in chain order.
IntVec invariant_factors(const IntMatrix& A);

/// For A with full column rank r, returns a unimodular n x n matrix whose
/// first r columns span the saturation of A's column lattice (and A's
/// column span over the rationals). Throws RankDeficient otherwise.
IntMatrix hnf_basis_extension(const IntMatrix& A);

/// Primitive integer vector spanning the one-dimensional kernel of a
/// (k-1) x k matrix of rank k-1. Throws RankDeficient if the kernel is
/// not one-dimensional.
IntVec kernel_vector(const IntMatrix& A);

}  // namespace lvmb

#endif  // LVMB_INTMATRIX_HPP
