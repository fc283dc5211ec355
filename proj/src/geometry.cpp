#include "tvb/geometry.hpp"

#include <cassert>

namespace tvb {

bool LatticeVector::is_zero() const {
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

RationalVector::RationalVector(const LatticeVector& v) {
    c.reserve(v.c.size());
    for (const Int& x : v.c) c.emplace_back(x);
}

bool RationalVector::is_zero() const {
    for (const Rat& x : c)
        if (x != 0) return false;
    return true;
}

bool RationalVector::is_integral() const {
    for (const Rat& x : c)
        if (!is_integer(x)) return false;
    return true;
}

LatticeVector RationalVector::to_lattice() const {
    assert(is_integral());
    std::vector<Int> out;
    out.reserve(c.size());
    for (const Rat& x : c) out.push_back(rat_num(x));
    return LatticeVector(std::move(out));
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
    assert(a.rank() == b.rank());
    Int s = 0;
    for (int i = 0; i < a.rank(); ++i) s += a.c[i] * b.c[i];
    return s;
}

Rat dot(const RationalVector& a, const LatticeVector& b) {
    assert(a.rank() == b.rank());
    Rat s = 0;
    for (int i = 0; i < a.rank(); ++i) s += a.c[i] * b.c[i];
    return s;
}

Rat dot(const RationalVector& a, const RationalVector& b) {
    assert(a.rank() == b.rank());
    Rat s = 0;
    for (int i = 0; i < a.rank(); ++i) s += a.c[i] * b.c[i];
    return s;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    assert(a.rank() == b.rank());
    std::vector<Int> out(a.c);
    for (int i = 0; i < b.rank(); ++i) out[i] += b.c[i];
    return LatticeVector(std::move(out));
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
    assert(a.rank() == b.rank());
    std::vector<Int> out(a.c);
    for (int i = 0; i < b.rank(); ++i) out[i] -= b.c[i];
    return LatticeVector(std::move(out));
}

LatticeVector negate(const LatticeVector& a) {
    std::vector<Int> out(a.c);
    for (Int& x : out) x = -x;
    return LatticeVector(std::move(out));
}

LatticeVector scale(const Int& k, const LatticeVector& a) {
    std::vector<Int> out(a.c);
    for (Int& x : out) x *= k;
    return LatticeVector(std::move(out));
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
    assert(a.rank() == b.rank());
    std::vector<Rat> out(a.c);
    for (int i = 0; i < b.rank(); ++i) out[i] += b.c[i];
    return RationalVector(std::move(out));
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
    assert(a.rank() == b.rank());
    std::vector<Rat> out(a.c);
    for (int i = 0; i < b.rank(); ++i) out[i] -= b.c[i];
    return RationalVector(std::move(out));
}

RationalVector negate(const RationalVector& a) {
    std::vector<Rat> out(a.c);
    for (Rat& x : out) x = -x;
    return RationalVector(std::move(out));
}

RationalVector scale(const Rat& k, const RationalVector& a) {
    std::vector<Rat> out(a.c);
    for (Rat& x : out) x *= k;
    return RationalVector(std::move(out));
}

LatticeVector make_primitive(const LatticeVector& v) {
    return LatticeVector(primitive_integral(v.c));
}

LatticeVector lattice_from_direction(const RationalVector& v) {
    return LatticeVector(primitive_integral(to_qrow(v)));
}

LatticeVector zero_lattice(int rank) {
    return LatticeVector(std::vector<Int>(rank, Int(0)));
}

LatticeVector unit_lattice(int rank, int i) {
    std::vector<Int> c(rank, Int(0));
    c[i] = 1;
    return LatticeVector(std::move(c));
}

RationalVector zero_rational(int rank) {
    return RationalVector(std::vector<Rat>(rank, Rat(0)));
}

QRow to_qrow(const LatticeVector& v) {
    QRow r;
    r.reserve(v.c.size());
    for (const Int& x : v.c) r.emplace_back(x);
    return r;
}

QRow to_qrow(const RationalVector& v) { return v.c; }

LatticeVector lattice_from_qrow_primitive(const QRow& r) {
    return LatticeVector(primitive_integral(r));
}

}  // namespace tvb
