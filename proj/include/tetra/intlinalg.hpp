#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tetra {

// Checked 64-bit arithmetic; cohomology must never wrap silently.
inline long long chk_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer addition overflow");
    return r;
}
inline long long chk_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer subtraction overflow");
    return r;
}
inline long long chk_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer multiplication overflow");
    return r;
}
inline long long chk_neg(long long a) { return chk_sub(0, a); }

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    long long& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    long long at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static IntMatrix identity(int n);
    bool is_zero() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& A, const IntMatrix& B);
IntMatrix transpose(const IntMatrix& M);

// Canonical row-style Hermite normal form: positive pivots, entries above a
// pivot reduced into [0, pivot), zero rows dropped. Unique per row lattice.
IntMatrix hnf_rows(IntMatrix M);

// S = U * M * V, S diagonal with d1 | d2 | ..., U and V unimodular.
struct SnfResult {
    IntMatrix S, U, V;
};
SnfResult snf(const IntMatrix& M);

// Sublattice of Z^ambient_dim; basis rows in canonical HNF.
struct Lattice {
    int ambient_dim = 0;
    IntMatrix basis;  // rank x ambient_dim

    int rank() const { return basis.rows; }
    friend bool operator==(const Lattice&, const Lattice&) = default;
};

Lattice lattice_from_rows(int ambient_dim, IntMatrix gens);
Lattice kernel_lattice(const IntMatrix& M);  // {v : M v = 0}
Lattice image_lattice(const IntMatrix& M);   // Z-span of the columns of M

bool lattice_contains(const Lattice& L, std::span<const long long> v);
bool lattice_equal(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);

// free_rank + Z/d1 + Z/d2 + ..., d1 | d2 | ..., each di >= 2.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> torsion;
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// big / small; throws std::invalid_argument unless small is a sublattice of big.
AbelianGroup quotient(const Lattice& big, const Lattice& small);

}  // namespace tetra
