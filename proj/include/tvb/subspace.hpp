#pragma once

#include "tvb/linalg.hpp"

#include <vector>

namespace tvb {

// Linear subspace of Q^r in reduced row echelon form (canonical basis).
class Subspace {
public:
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace from_rows(int ambient, QMat rows);
    static Subspace span_of(const QRow& v);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const QMat& basis() const { return basis_; }

    bool contains(const QRow& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;

private:
    int ambient_ = 0;
    QMat basis_;  // rref, no zero rows
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace tvb
