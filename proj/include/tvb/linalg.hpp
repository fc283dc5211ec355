#pragma once

#include "tvb/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tvb {

// Dense rational matrices as row vectors. Everything here is exact.
using QRow = std::vector<Rat>;
using QMat = std::vector<QRow>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_inplace(QMat& m);

int rank_of(QMat m);

// Basis of {x : m x = 0}, one solution per row.
QMat nullspace(const QMat& m);

// Any solution of m x = rhs, or nullopt if inconsistent.
std::optional<QRow> solve_linear(const QMat& m, const QRow& rhs);

// Scale a rational vector to an integer vector with gcd 1. Zero stays zero.
std::vector<Int> primitive_integral(const QRow& v);
std::vector<Int> primitive_integral(const std::vector<Int>& v);

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status;
    QRow x;        // valid when Optimal
    Rat objective; // valid when Optimal
};

// Two-phase simplex with Bland's rule: minimize cost.x subject to
// eq_lhs x = eq_rhs, x >= 0. Deterministic for a fixed input ordering.
LPResult solve_lp(const QMat& eq_lhs, const QRow& eq_rhs, const QRow& cost);

}  // namespace tvb
