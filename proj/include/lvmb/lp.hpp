/**
 * Exact rational linear programming. Maximizes a rational objective over
 * rows of the form a.x {<=,=,>=} b with per-variable lower bounds (or
 * free variables). Two-phase simplex with Bland's rule, so every run
 * terminates; all pivoting is over Rational, no tolerances anywhere.
 *
 * Outcomes carry certificates: optimal points satisfy every row exactly
 * (checked before returning), infeasible outcomes carry a Farkas vector
 * that verify_farkas validates against the original rows, and optimal
 * outcomes expose the row duals for separator extraction.
 */

#ifndef LVMB_LP_HPP
#define LVMB_LP_HPP

#include <optional>
#include <vector>

#include "lvmb/rational.hpp"

namespace lvmb {

enum class Rel { LE, EQ, GE };

struct LPProblem {
    RatVec objective;                           // maximize objective . x
    std::vector<RatVec> rows;                   // constraint coefficients
    RatVec rhs;                                 // right-hand sides
    std::vector<Rel> rel;                       // row relations
    std::vector<std::optional<Rational>> lower; // lower bound per variable; nullopt = free

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }

    void add_row(RatVec coeffs, Rel r, Rational b);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational value;        // optimal objective value
    RatVec point;          // optimal point, exact
    RatVec row_duals;      // duals per original row at optimality
    RatVec farkas;         // infeasibility certificate per original row
};

/// Throws DimensionMismatch on inconsistent sizes.
LPOutcome lp_solve(const LPProblem& p);

/// Exact feasibility of a candidate point against the original rows and
/// lower bounds.
bool satisfies(const LPProblem& p, const RatVec& x);

/// Validates a Farkas infeasibility certificate y: y_i >= 0 on <= rows,
/// y_i <= 0 on >= rows, free on = rows; the aggregated functional
/// w = sum_i y_i row_i vanishes on free variables, is nonnegative on
/// bounded ones, and w . lb exceeds y . rhs. Any such y proves the
/// program empty.
bool verify_farkas(const LPProblem& p, const RatVec& y);

}  // namespace lvmb

#endif  // LVMB_LP_HPP
