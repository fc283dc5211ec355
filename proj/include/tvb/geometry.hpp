#pragma once

#include "tvb/linalg.hpp"
#include "tvb/numeric.hpp"

#include <vector>

namespace tvb {

// Point of the character lattice M or the cocharacter lattice N.
struct LatticeVector {
    std::vector<Int> c;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> coords) : c(std::move(coords)) {}

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const;
    bool operator==(const LatticeVector&) const = default;
    auto operator<=>(const LatticeVector&) const = default;
};

// Point of M_R / N_R with exact rational coordinates.
struct RationalVector {
    std::vector<Rat> c;

    RationalVector() = default;
    explicit RationalVector(std::vector<Rat> coords) : c(std::move(coords)) {}
    explicit RationalVector(const LatticeVector& v);

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const;
    bool is_integral() const;
    LatticeVector to_lattice() const;  // requires is_integral()
    bool operator==(const RationalVector&) const = default;
    auto operator<=>(const RationalVector&) const = default;
};

Int dot(const LatticeVector& a, const LatticeVector& b);
Rat dot(const RationalVector& a, const LatticeVector& b);
Rat dot(const RationalVector& a, const RationalVector& b);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);
LatticeVector scale(const Int& k, const LatticeVector& a);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector negate(const RationalVector& a);
RationalVector scale(const Rat& k, const RationalVector& a);

// Divides out the gcd of the coordinates; zero stays zero.
LatticeVector make_primitive(const LatticeVector& v);
LatticeVector lattice_from_direction(const RationalVector& v);

LatticeVector zero_lattice(int rank);
LatticeVector unit_lattice(int rank, int i);
RationalVector zero_rational(int rank);

QRow to_qrow(const LatticeVector& v);
QRow to_qrow(const RationalVector& v);
LatticeVector lattice_from_qrow_primitive(const QRow& r);

}  // namespace tvb
