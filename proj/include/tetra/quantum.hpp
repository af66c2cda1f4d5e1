#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "tetra/rmap.hpp"

namespace tetra {

using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& t, long long e);

// Multiplicative 3-cocycle realized as t^w with w an integer cochain.
// Construction checks w in ker delta3 of the given R (unless force is set,
// a hook for demonstrating that the cocycle condition matters).
struct Cocycle {
    std::array<long long, 8> w{};
    Rational t = 2;
};
Cocycle make_cocycle(const RMap& R, std::array<long long, 8> w, Rational t, bool force = false);

// 8x8 matrix over exact rationals; index = 4x+2y+z.
struct QOperator {
    std::array<Rational, 64> m{};
    Rational& at(int r, int c) { return m[r * 8 + c]; }
    const Rational& at(int r, int c) const { return m[r * 8 + c]; }
};

QOperator build_qoperator(const RMap& R, const std::optional<Cocycle>& c = std::nullopt);

// 64x64 matrix over exact rationals; basis index = State6 packing.
struct Matrix64 {
    std::vector<Rational> m = std::vector<Rational>(64 * 64);
    Rational& at(int r, int c) { return m[r * 64 + c]; }
    const Rational& at(int r, int c) const { return m[r * 64 + c]; }
    friend bool operator==(const Matrix64&, const Matrix64&) = default;
};

Matrix64 embed_on_legs(const QOperator& Q, Legs legs);
Matrix64 mul(const Matrix64& A, const Matrix64& B);

// Quantum tetrahedron equation as an exact 64x64 identity,
// legs (1,2,3),(1,4,5),(2,4,6),(3,5,6), rightmost factor applied first.
bool check_qte(const RMap& R, const std::optional<Cocycle>& c = std::nullopt);

}  // namespace tetra
