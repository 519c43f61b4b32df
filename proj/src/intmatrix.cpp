#include "lvmb/intmatrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace lvmb {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols)
            throw DimensionMismatch("from_rows: ragged rows");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntVec IntMatrix::row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMatrix::col(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& e) { return e == 0; });
}

IntMatrix mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw DimensionMismatch("mul: inner dimensions");
    IntMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

IntVec mul(const IntMatrix& A, const IntVec& x) {
    if (A.cols != static_cast<int>(x.size())) throw DimensionMismatch("mul: vector size");
    IntVec y(A.rows);
    for (int i = 0; i < A.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < A.cols; ++j) s += A.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

namespace {

// Bareiss elimination on a working copy. Returns rank; if detOut is
// non-null the matrix must be square and *detOut receives det(A).
int bareiss(IntMatrix w, Int* detOut) {
    const int m = w.rows, n = w.cols;
    Int prev = 1;
    int sign = 1, r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (w.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(r, j));
            sign = -sign;
        }
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j)
                w.at(i, j) = (w.at(r, c) * w.at(i, j) - w.at(i, c) * w.at(r, j)) / prev;
            w.at(i, c) = 0;
        }
        prev = w.at(r, c);
        ++r;
    }
    if (detOut) {
        if (m != n) throw DimensionMismatch("det: matrix not square");
        *detOut = (r < n) ? Int(0) : Int(sign * prev);
    }
    return r;
}

// Elementary operations applied consistently to D, the transform being
// built, and its inverse. D = U*A*V is the loop invariant.
struct Reduction {
    IntMatrix D, U, V, Uinv, Vinv;

    explicit Reduction(const IntMatrix& A)
        : D(A),
          U(IntMatrix::identity(A.rows)),
          V(IntMatrix::identity(A.cols)),
          Uinv(IntMatrix::identity(A.rows)),
          Vinv(IntMatrix::identity(A.cols)) {}

    void row_swap(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < D.cols; ++j) std::swap(D.at(a, j), D.at(b, j));
        for (int j = 0; j < U.cols; ++j) std::swap(U.at(a, j), U.at(b, j));
        for (int i = 0; i < Uinv.rows; ++i) std::swap(Uinv.at(i, a), Uinv.at(i, b));
    }
    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, a), D.at(i, b));
        for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, a), V.at(i, b));
        for (int j = 0; j < Vinv.cols; ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
    }
    // row a += q * row b
    void row_addmul(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < D.cols; ++j) D.at(a, j) += q * D.at(b, j);
        for (int j = 0; j < U.cols; ++j) U.at(a, j) += q * U.at(b, j);
        for (int i = 0; i < Uinv.rows; ++i) Uinv.at(i, b) -= q * Uinv.at(i, a);
    }
    // col a += q * col b
    void col_addmul(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < D.rows; ++i) D.at(i, a) += q * D.at(i, b);
        for (int i = 0; i < V.rows; ++i) V.at(i, a) += q * V.at(i, b);
        for (int j = 0; j < Vinv.cols; ++j) Vinv.at(b, j) -= q * Vinv.at(a, j);
    }
    void row_negate(int a) {
        for (int j = 0; j < D.cols; ++j) D.at(a, j) = -D.at(a, j);
        for (int j = 0; j < U.cols; ++j) U.at(a, j) = -U.at(a, j);
        for (int i = 0; i < Uinv.rows; ++i) Uinv.at(i, a) = -Uinv.at(i, a);
    }
};

}  // namespace

Int det(const IntMatrix& A) {
    Int d;
    bareiss(A, &d);
    return d;
}

int rank(const IntMatrix& A) { return bareiss(A, nullptr); }

SNFExtResult snf_ext(const IntMatrix& A) {
    Reduction w(A);
    const int m = A.rows, n = A.cols;
    const int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // pivot: minimal nonzero absolute value in the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& e = w.D.at(i, j);
                    if (e == 0) continue;
                    if (pi < 0 || boost::multiprecision::abs(e) <
                                      boost::multiprecision::abs(w.D.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // trailing block is zero
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool clean = true;
            for (int i = t + 1; i < m; ++i)
                if (w.D.at(i, t) != 0) {
                    Int q = w.D.at(i, t) / w.D.at(t, t);  // truncating: |rem| < |pivot|
                    w.row_addmul(i, t, -q);
                    if (w.D.at(i, t) != 0) clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (w.D.at(t, j) != 0) {
                    Int q = w.D.at(t, j) / w.D.at(t, t);
                    w.col_addmul(j, t, -q);
                    if (w.D.at(t, j) != 0) clean = false;
                }
            if (!clean) continue;  // smaller remainders became new pivot candidates

            // divisibility: pivot must divide the whole trailing block
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n && divides; ++j)
                    if (w.D.at(i, j) % w.D.at(t, t) != 0) {
                        w.row_addmul(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.D.at(t, t) < 0) w.row_negate(t);
    }
done:
    SNFExtResult r;
    r.U = std::move(w.U);
    r.V = std::move(w.V);
    r.D = std::move(w.D);
    r.Uinv = std::move(w.Uinv);
    r.Vinv = std::move(w.Vinv);
    r.rank = 0;
    for (int t = 0; t < steps; ++t)
        if (r.D.at(t, t) != 0) ++r.rank;
    return r;
}

SNFResult snf(const IntMatrix& A) {
    SNFExtResult e = snf_ext(A);
    return SNFResult{std::move(e.U), std::move(e.V), std::move(e.D), e.rank};
}

IntVec invariant_factors(const IntMatrix& A) {
    SNFResult r = snf(A);
    IntVec f;
    for (int t = 0; t < std::min(A.rows, A.cols); ++t)
        if (r.D.at(t, t) != 0) f.push_back(r.D.at(t, t));
    return f;
}

IntMatrix hnf_basis_extension(const IntMatrix& A) {
    SNFExtResult r = snf_ext(A);
    if (r.rank != A.cols) throw RankDeficient("hnf_basis_extension: columns dependent");
    return r.Uinv;
}

IntVec kernel_vector(const IntMatrix& A) {
    if (A.rows + 1 != A.cols) throw DimensionMismatch("kernel_vector: need (k-1) x k");
    SNFExtResult r = snf_ext(A);
    if (r.rank != A.rows) throw RankDeficient("kernel_vector: kernel not one-dimensional");
    // D = U*A*V has its last column zero, so A * (last column of V) = 0.
    // Columns of a unimodular matrix are primitive.
    return r.V.col(A.cols - 1);
}

}  // namespace lvmb
