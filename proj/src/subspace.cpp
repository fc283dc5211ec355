#include "tvb/subspace.hpp"

#include <cassert>
#include <stdexcept>

namespace tvb {

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(int ambient) {
    QMat rows;
    for (int i = 0; i < ambient; ++i) {
        QRow r(ambient, Rat(0));
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return from_rows(ambient, std::move(rows));
}

Subspace Subspace::from_rows(int ambient, QMat rows) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ambient)
            throw std::invalid_argument("subspace row size mismatch");
    rref_inplace(rows);
    while (!rows.empty()) {
        bool zero = true;
        for (const Rat& x : rows.back())
            if (x != 0) { zero = false; break; }
        if (!zero) break;
        rows.pop_back();
    }
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::span_of(const QRow& v) {
    return from_rows(static_cast<int>(v.size()), {v});
}

bool Subspace::contains(const QRow& v) const {
    QRow w = v;
    for (const auto& row : basis_) {
        int p = 0;
        while (row[p] == 0) ++p;  // rref pivot
        if (w[p] == 0) continue;
        Rat f = w[p];
        for (int j = 0; j < ambient_; ++j) w[j] -= f * row[j];
    }
    for (const Rat& x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    assert(a.ambient() == b.ambient());
    QMat rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::from_rows(a.ambient(), std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    assert(a.ambient() == b.ambient());
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
    // lambda^T A = mu^T B  <=>  (lambda, mu) in ker [A^T | -B^T].
    const int ka = a.dim(), kb = b.dim(), n = a.ambient();
    QMat sys(n, QRow(ka + kb, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < ka; ++j) sys[i][j] = a.basis()[j][i];
        for (int j = 0; j < kb; ++j) sys[i][ka + j] = -b.basis()[j][i];
    }
    QMat ker = nullspace(sys);
    QMat rows;
    for (const auto& lm : ker) {
        QRow v(n, Rat(0));
        for (int j = 0; j < ka; ++j)
            for (int i = 0; i < n; ++i) v[i] += lm[j] * a.basis()[j][i];
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(n, std::move(rows));
}

}  // namespace tvb
