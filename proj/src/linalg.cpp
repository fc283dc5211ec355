#include "tvb/linalg.hpp"

#include <cassert>
#include <cstdlib>

namespace tvb {

std::vector<int> rref_inplace(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_of(QMat m) { return static_cast<int>(rref_inplace(m).size()); }

QMat nullspace(const QMat& m) {
    if (m.empty()) return {};
    const int cols = static_cast<int>(m[0].size());
    QMat a = m;
    std::vector<int> pivots = rref_inplace(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    QMat basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QRow v(cols, Rat(0));
        v[fc] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QRow> solve_linear(const QMat& m, const QRow& rhs) {
    assert(m.size() == rhs.size());
    if (m.empty()) return QRow{};
    const int cols = static_cast<int>(m[0].size());
    QMat aug = m;
    for (size_t i = 0; i < m.size(); ++i) aug[i].push_back(rhs[i]);
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QRow x(cols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

std::vector<Int> primitive_integral(const QRow& v) {
    Int den = 1;
    for (const Rat& q : v) den = lcm_int(den, rat_den(q));
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = rat_num(v[i]) * (den / rat_den(v[i]));
    return primitive_integral(w);
}

std::vector<Int> primitive_integral(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    if (g == 0) return v;
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

namespace {

// Tableau simplex, Bland's rule. 'tab' holds m rows of n+1 entries
// (coefficients | rhs), rhs kept nonnegative; 'basis' maps row -> variable.
// Returns false when the problem is unbounded for the given cost row.
bool run_simplex(QMat& tab, std::vector<int>& basis, QRow& cost_row, Rat& obj) {
    const int m = static_cast<int>(tab.size());
    const int n = static_cast<int>(cost_row.size());
    for (;;) {
        int enter = -1;
        for (int j = 0; j < n; ++j)
            if (cost_row[j] < 0) { enter = j; break; }
        if (enter < 0) return true;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = tab[i][n] / tab[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return false;
        Rat piv = tab[leave][enter];
        for (int j = 0; j <= n; ++j) tab[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (int j = 0; j <= n; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (cost_row[enter] != 0) {
            Rat f = cost_row[enter];
            for (int j = 0; j < n; ++j) cost_row[j] -= f * tab[leave][j];
            obj -= f * tab[leave][n];
        }
        basis[leave] = enter;
    }
}

}  // namespace

LPResult solve_lp(const QMat& eq_lhs, const QRow& eq_rhs, const QRow& cost) {
    const int m = static_cast<int>(eq_lhs.size());
    const int n = static_cast<int>(cost.size());
    // Phase 1: artificials n..n+m-1 form the starting basis.
    QMat tab(m, QRow(n + m + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        bool neg = eq_rhs[i] < 0;
        for (int j = 0; j < n; ++j) tab[i][j] = neg ? -eq_lhs[i][j] : eq_lhs[i][j];
        tab[i][n + i] = 1;
        tab[i][n + m] = neg ? -eq_rhs[i] : eq_rhs[i];
    }
    std::vector<int> basis(m);
    QRow phase1(n + m, Rat(0));
    Rat obj1 = 0;
    for (int i = 0; i < m; ++i) {
        basis[i] = n + i;
        for (int j = 0; j < n; ++j) phase1[j] -= tab[i][j];
        obj1 -= tab[i][n + m];
    }
    bool ok = run_simplex(tab, basis, phase1, obj1);
    assert(ok);  // phase 1 objective is bounded below by 0
    (void)ok;
    if (obj1 != 0) return {LPStatus::Infeasible, {}, Rat(0)};

    // Pivot leftover artificials out; a row with no real coefficient is
    // redundant and dropped.
    for (int i = static_cast<int>(tab.size()) - 1; i >= 0; --i) {
        if (basis[i] < n) continue;
        int enter = -1;
        for (int j = 0; j < n; ++j)
            if (tab[i][j] != 0) { enter = j; break; }
        if (enter < 0) {
            tab.erase(tab.begin() + i);
            basis.erase(basis.begin() + i);
            continue;
        }
        Rat piv = tab[i][enter];
        for (int j = 0; j <= n + m; ++j) tab[i][j] /= piv;
        for (size_t r = 0; r < tab.size(); ++r) {
            if (static_cast<int>(r) == i || tab[r][enter] == 0) continue;
            Rat f = tab[r][enter];
            for (int j = 0; j <= n + m; ++j) tab[r][j] -= f * tab[i][j];
        }
        basis[i] = enter;
    }

    // Phase 2 on the original columns.
    QMat tab2(tab.size(), QRow(n + 1));
    for (size_t i = 0; i < tab.size(); ++i) {
        for (int j = 0; j < n; ++j) tab2[i][j] = tab[i][j];
        tab2[i][n] = tab[i][n + m];
    }
    QRow cost_row = cost;
    Rat obj = 0;
    for (size_t i = 0; i < tab2.size(); ++i) {
        if (cost_row[basis[i]] == 0) continue;
        Rat f = cost_row[basis[i]];
        for (int j = 0; j < n; ++j) cost_row[j] -= f * tab2[i][j];
        obj -= f * tab2[i][n];
    }
    if (!run_simplex(tab2, basis, cost_row, obj))
        return {LPStatus::Unbounded, {}, Rat(0)};
    QRow x(n, Rat(0));
    for (size_t i = 0; i < tab2.size(); ++i) x[basis[i]] = tab2[i][n];
    return {LPStatus::Optimal, std::move(x), -obj};
}

}  // namespace tvb
