#include "lvmb/lp.hpp"

#include <algorithm>

#include "lvmb/errors.hpp"

namespace lvmb {

void LPProblem::add_row(RatVec coeffs, Rel r, Rational b) {
    rows.push_back(std::move(coeffs));
    rel.push_back(r);
    rhs.push_back(std::move(b));
}

bool satisfies(const LPProblem& p, const RatVec& x) {
    if (static_cast<int>(x.size()) != p.num_vars()) return false;
    for (int j = 0; j < p.num_vars(); ++j)
        if (p.lower[j] && x[j] < *p.lower[j]) return false;
    for (int i = 0; i < p.num_rows(); ++i) {
        Rational lhs = dot(p.rows[i], x);
        switch (p.rel[i]) {
            case Rel::LE: if (!(lhs <= p.rhs[i])) return false; break;
            case Rel::EQ: if (!(lhs == p.rhs[i])) return false; break;
            case Rel::GE: if (!(lhs >= p.rhs[i])) return false; break;
        }
    }
    return true;
}

bool verify_farkas(const LPProblem& p, const RatVec& y) {
    if (static_cast<int>(y.size()) != p.num_rows()) return false;
    for (int i = 0; i < p.num_rows(); ++i) {
        if (p.rel[i] == Rel::LE && y[i] < 0) return false;
        if (p.rel[i] == Rel::GE && y[i] > 0) return false;
    }
    // aggregated row w.x <= y.rhs must be impossible over the variable box
    Rational bound = 0;
    for (int j = 0; j < p.num_vars(); ++j) {
        Rational wj = 0;
        for (int i = 0; i < p.num_rows(); ++i) wj += y[i] * p.rows[i][j];
        if (!p.lower[j]) {
            if (wj != 0) return false;
        } else {
            if (wj < 0) return false;
            bound += wj * (*p.lower[j]);
        }
    }
    Rational yb = dot(y, p.rhs);
    return bound > yb;
}

namespace {

// Converted standard form: A u = b, u >= 0, maximize c . u. Bookkeeping
// maps converted columns back to the original variables and rows.
struct Standard {
    std::vector<RatVec> A;   // by row
    RatVec b;
    RatVec c;
    int ncols = 0;
    std::vector<int> row_sign;           // +1 / -1 per original row
    std::vector<int> pos_col, neg_col;   // per original var; neg_col = -1 if bounded
    RatVec shift;                        // lb per original var (0 for free)
    Rational const_term = 0;             // objective constant from shifting
};

Standard convert(const LPProblem& p) {
    const int n = p.num_vars(), m = p.num_rows();
    Standard s;
    s.pos_col.resize(n);
    s.neg_col.assign(n, -1);
    s.shift.resize(n);
    int col = 0;
    for (int j = 0; j < n; ++j) {
        s.pos_col[j] = col++;
        if (p.lower[j]) {
            s.shift[j] = *p.lower[j];
        } else {
            s.shift[j] = 0;
            s.neg_col[j] = col++;
        }
    }
    const int nslack = static_cast<int>(
        std::count_if(p.rel.begin(), p.rel.end(), [](Rel r) { return r != Rel::EQ; }));
    s.ncols = col + nslack;
    s.A.assign(m, RatVec(s.ncols));
    s.b.resize(m);
    s.row_sign.assign(m, 1);
    s.c.assign(s.ncols, Rational(0));

    int slack = col;
    for (int i = 0; i < m; ++i) {
        Rational rhs = p.rhs[i];
        for (int j = 0; j < n; ++j) {
            const Rational& a = p.rows[i][j];
            if (a == 0) continue;
            s.A[i][s.pos_col[j]] = a;
            if (s.neg_col[j] >= 0) s.A[i][s.neg_col[j]] = -a;
            rhs -= a * s.shift[j];
        }
        if (p.rel[i] == Rel::LE) s.A[i][slack++] = 1;
        if (p.rel[i] == Rel::GE) s.A[i][slack++] = -1;
        s.b[i] = rhs;
        if (s.b[i] < 0) {
            s.row_sign[i] = -1;
            for (Rational& e : s.A[i]) e = -e;
            s.b[i] = -s.b[i];
        }
    }
    for (int j = 0; j < n; ++j) {
        const Rational& cj = p.objective[j];
        if (cj == 0) continue;
        s.c[s.pos_col[j]] = cj;
        if (s.neg_col[j] >= 0) s.c[s.neg_col[j]] = -cj;
        s.const_term += cj * s.shift[j];
    }
    return s;
}

// Dense simplex tableau. Artificial columns stay in the tableau through
// phase 2 (barred from entering) so the row duals can be read off their
// reduced costs at the end.
struct Tableau {
    int m, n;                 // rows, structural columns
    std::vector<RatVec> T;    // m rows of n + m + 1 entries (rhs last)
    std::vector<int> basis;   // column index basic in each row

    Tableau(const Standard& s) : m(static_cast<int>(s.A.size())), n(s.ncols) {
        T.assign(m, RatVec(n + m + 1));
        basis.resize(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) T[i][j] = s.A[i][j];
            T[i][n + i] = 1;
            T[i][n + m] = s.b[i];
            basis[i] = n + i;
        }
    }

    void pivot(int r, int col) {
        const Rational pv = T[r][col];
        for (Rational& e : T[r]) e /= pv;
        for (int i = 0; i < m; ++i) {
            if (i == r || T[i][col] == 0) continue;
            const Rational f = T[i][col];
            for (int j = 0; j <= n + m; ++j) T[i][j] -= f * T[r][j];
        }
        basis[r] = col;
    }

    // Bland's rule; columns in [0, limit) may enter. Returns false on
    // unbounded direction.
    bool optimize(const RatVec& cost, int limit) {
        for (;;) {
            RatVec y(m);  // duals of the current basis
            for (int i = 0; i < m; ++i) y[i] = cost[basis[i]];
            int entering = -1;
            for (int j = 0; j < limit; ++j) {
                Rational red = cost[j];
                for (int i = 0; i < m; ++i)
                    if (T[i][j] != 0) red -= y[i] * T[i][j];
                if (red > 0) { entering = j; break; }
            }
            if (entering < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (T[i][entering] <= 0) continue;
                Rational ratio = T[i][n + m] / T[i][entering];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, entering);
        }
    }

    // The basic-variable cost vector determines duals y via the reduced
    // costs of the artificial (identity) columns: red_j = c_{n+i} - y_i.
    RatVec duals(const RatVec& cost) const {
        RatVec y(m);
        for (int i = 0; i < m; ++i) {
            Rational red = 0;
            for (int k = 0; k < m; ++k)
                if (T[k][n + i] != 0) red += cost[basis[k]] * T[k][n + i];
            y[i] = red;  // = c_B B^{-1} e_i
        }
        return y;
    }
};

}  // namespace

LPOutcome lp_solve(const LPProblem& p) {
    const int n = p.num_vars(), m = p.num_rows();
    if (static_cast<int>(p.lower.size()) != n || static_cast<int>(p.rhs.size()) != m ||
        static_cast<int>(p.rel.size()) != m)
        throw DimensionMismatch("lp_solve: field sizes disagree");
    for (const RatVec& r : p.rows)
        if (static_cast<int>(r.size()) != n) throw DimensionMismatch("lp_solve: row width");

    Standard s = convert(p);
    Tableau tab(s);
    const int N = s.ncols;

    // Phase 1: drive the artificial variables to zero.
    RatVec cost1(N + m, Rational(0));
    for (int i = 0; i < m; ++i) cost1[N + i] = -1;
    tab.optimize(cost1, N);  // artificials never need to re-enter
    Rational art_sum = 0;
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] >= N) art_sum += tab.T[i][N + m];

    LPOutcome out;
    if (art_sum != 0) {
        out.status = LPStatus::Infeasible;
        RatVec y = tab.duals(cost1);
        out.farkas.resize(m);
        for (int i = 0; i < m; ++i) out.farkas[i] = Rational(s.row_sign[i]) * y[i];
        if (!verify_farkas(p, out.farkas))
            throw InternalInconsistency("lp_solve: Farkas certificate failed verification");
        return out;
    }

    // Pivot residual artificials out of the basis (degenerate rows).
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < N) continue;
        int piv = -1;
        for (int j = 0; j < N; ++j)
            if (tab.T[i][j] != 0) { piv = j; break; }
        if (piv >= 0) tab.pivot(i, piv);
        // otherwise the row is 0 = 0 and stays parked on its artificial
    }

    // Phase 2 with the real objective.
    RatVec cost2(N + m, Rational(0));
    for (int j = 0; j < N; ++j) cost2[j] = s.c[j];
    if (!tab.optimize(cost2, N)) {
        out.status = LPStatus::Unbounded;
        return out;
    }

    RatVec u(N);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < N) u[tab.basis[i]] = tab.T[i][N + m];
    out.point.resize(n);
    for (int j = 0; j < n; ++j) {
        out.point[j] = s.shift[j] + u[s.pos_col[j]];
        if (s.neg_col[j] >= 0) out.point[j] -= u[s.neg_col[j]];
    }
    out.value = dot(p.objective, out.point);
    out.status = LPStatus::Optimal;
    RatVec y = tab.duals(cost2);
    out.row_duals.resize(m);
    for (int i = 0; i < m; ++i) out.row_duals[i] = Rational(s.row_sign[i]) * y[i];
    if (!satisfies(p, out.point))
        throw InternalInconsistency("lp_solve: optimal point violates a row");
    return out;
}

}  // namespace lvmb
