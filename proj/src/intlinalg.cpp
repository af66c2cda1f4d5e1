#include "tetra/intlinalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>

namespace tetra {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

IntMatrix mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            long long v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = chk_add(C.at(i, j), chk_mul(v, B.at(k, j)));
        }
    return C;
}

IntMatrix transpose(const IntMatrix& M) {
    IntMatrix T(M.cols, M.rows);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) T.at(j, i) = M.at(i, j);
    return T;
}

// Elimination runs internally on arbitrary-precision integers: quotient chains
// in a naive Hermite/Smith reduction can blow intermediate entries up
// exponentially past the (small) inputs. Results are narrowed back to 64 bits
// with a range check at the end.
namespace {

using BInt = boost::multiprecision::cpp_int;

BInt floor_div(const BInt& a, const BInt& b) {
    BInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

struct MatB {
    int rows, cols;
    std::vector<BInt> a;
    explicit MatB(const IntMatrix& m) : rows(m.rows), cols(m.cols), a(m.a.begin(), m.a.end()) {}
    MatB(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    BInt& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const BInt& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
    static MatB identity(int n) {
        MatB m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

MatB transposed(const MatB& M) {
    MatB T(M.cols, M.rows);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) T.at(j, i) = M.at(i, j);
    return T;
}

void row_sub(MatB& M, int dst, int src, const BInt& q) {
    if (q == 0) return;
    for (int j = 0; j < M.cols; ++j) M.at(dst, j) -= q * M.at(src, j);
}

void row_neg(MatB& M, int r) {
    for (int j = 0; j < M.cols; ++j) M.at(r, j) = -M.at(r, j);
}

void swap_rows(MatB& M, int a, int b) {
    if (a == b) return;
    std::swap_ranges(M.a.begin() + std::size_t(a) * M.cols, M.a.begin() + std::size_t(a + 1) * M.cols,
                     M.a.begin() + std::size_t(b) * M.cols);
}

// In-place canonical row HNF: positive pivots in rows 0..rank-1, entries above
// a pivot reduced into [0, pivot), zero rows at the bottom. Mirrors every row
// operation onto *U when given. Returns the rank.
int hnf_inplace(MatB& M, MatB* U) {
    int r = 0;
    for (int col = 0; col < M.cols && r < M.rows; ++col) {
        // gcd the entries of this column in rows >= r down to a single pivot at r
        while (true) {
            int piv = -1;
            for (int i = r; i < M.rows; ++i)
                if (M.at(i, col) != 0 && (piv < 0 || abs(M.at(i, col)) < abs(M.at(piv, col))))
                    piv = i;
            if (piv < 0) break;
            swap_rows(M, piv, r);
            if (U) swap_rows(*U, piv, r);
            bool clean = true;
            for (int i = r + 1; i < M.rows; ++i) {
                BInt q = floor_div(M.at(i, col), M.at(r, col));
                row_sub(M, i, r, q);
                if (U) row_sub(*U, i, r, q);
                if (M.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (M.at(r, col) == 0) continue;
        if (M.at(r, col) < 0) {
            row_neg(M, r);
            if (U) row_neg(*U, r);
        }
        for (int i = 0; i < r; ++i) {
            BInt q = floor_div(M.at(i, col), M.at(r, col));
            row_sub(M, i, r, q);
            if (U) row_sub(*U, i, r, q);
        }
        ++r;
    }
    return r;
}

bool is_diagonal(const MatB& M) {
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            if (i != j && M.at(i, j) != 0) return false;
    return true;
}

IntMatrix narrow(const MatB& M, int rows = -1) {
    if (rows < 0) rows = M.rows;
    IntMatrix out(rows, M.cols);
    for (std::size_t i = 0; i < out.a.size(); ++i) {
        const BInt& v = M.a[i];
        if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
            throw std::overflow_error("result exceeds 64-bit range");
        out.a[i] = (long long)v;
    }
    return out;
}

}  // namespace

IntMatrix hnf_rows(IntMatrix M0) {
    MatB M(M0);
    int r = hnf_inplace(M, nullptr);
    return narrow(M, r);
}

// Smith form by alternating row and column Hermite passes: a matrix stable
// under both is diagonal with the pivots on the main diagonal. Divisibility
// violations d_t not dividing d_u are repaired by a column addition, which the
// next alternation turns into gcd(d_t, d_u); the pivot product shrinks, so
// this terminates. Keeps the transform entries far smaller than one-pivot
// elimination does.
SnfResult snf(const IntMatrix& M0) {
    MatB S(M0);
    MatB U = MatB::identity(M0.rows);
    MatB Vt = MatB::identity(M0.cols);  // V transposed: column ops on S are row ops here
    while (true) {
        while (!is_diagonal(S)) {
            hnf_inplace(S, &U);
            if (is_diagonal(S)) break;
            MatB St = transposed(S);
            hnf_inplace(St, &Vt);
            S = transposed(St);
        }
        int n = std::min(S.rows, S.cols);
        int bad_t = -1, bad_u = -1;
        for (int t = 0; t < n && bad_t < 0; ++t)
            for (int u = t + 1; u < n && bad_t < 0; ++u)
                if (S.at(u, u) != 0 &&
                    (S.at(t, t) == 0 || S.at(u, u) % S.at(t, t) != 0)) {
                    bad_t = t;
                    bad_u = u;
                }
        if (bad_t < 0) break;
        // column bad_t += column bad_u, then re-diagonalize
        S.at(bad_u, bad_t) = S.at(bad_u, bad_u);
        for (int i = 0; i < Vt.cols; ++i) Vt.at(bad_t, i) += Vt.at(bad_u, i);
    }
    // already-diagonal inputs can bypass the passes that fix pivot signs
    for (int t = 0; t < std::min(S.rows, S.cols); ++t)
        if (S.at(t, t) < 0) {
            row_neg(S, t);
            row_neg(U, t);
        }
    // The transforms are only determined up to the kernels of M: rows of U
    // past the rank span the left kernel (they hit zero rows of S), so the
    // leading rows can be size-reduced against them without changing U*M*V or
    // unimodularity. Same for V via its trailing rows in transposed storage.
    int rank = 0;
    for (int t = 0; t < std::min(S.rows, S.cols); ++t)
        if (S.at(t, t) != 0) ++rank;
    auto size_reduce = [](MatB& W, int rank) {
        if (rank >= W.rows) return;
        MatB ker(W.rows - rank, W.cols);
        for (int i = rank; i < W.rows; ++i)
            for (int j = 0; j < W.cols; ++j) ker.at(i - rank, j) = W.at(i, j);
        hnf_inplace(ker, nullptr);
        for (int i = rank; i < W.rows; ++i)
            for (int j = 0; j < W.cols; ++j) W.at(i, j) = ker.at(i - rank, j);
        for (int k = 0; k < ker.rows; ++k) {
            int p = 0;
            while (p < ker.cols && ker.at(k, p) == 0) ++p;
            for (int i = 0; i < rank; ++i)
                row_sub(W, i, rank + k, floor_div(W.at(i, p), ker.at(k, p)));
        }
    };
    size_reduce(U, rank);
    size_reduce(Vt, rank);
    return {narrow(S), narrow(U), narrow(transposed(Vt))};
}

Lattice lattice_from_rows(int ambient_dim, IntMatrix gens) {
    if (gens.rows > 0 && gens.cols != ambient_dim)
        throw std::invalid_argument("generator width != ambient dimension");
    if (gens.rows == 0) gens = IntMatrix(0, ambient_dim);
    return {ambient_dim, hnf_rows(std::move(gens))};
}

Lattice kernel_lattice(const IntMatrix& M) {
    // HNF of [M^T | I]; rows with vanishing left part carry the kernel vectors.
    IntMatrix B(M.cols, M.rows + M.cols);
    for (int i = 0; i < M.cols; ++i) {
        for (int j = 0; j < M.rows; ++j) B.at(i, j) = M.at(j, i);
        B.at(i, M.rows + i) = 1;
    }
    IntMatrix H = hnf_rows(std::move(B));
    IntMatrix ker(0, M.cols);
    for (int i = 0; i < H.rows; ++i) {
        bool left_zero = true;
        for (int j = 0; j < M.rows && left_zero; ++j) left_zero = H.at(i, j) == 0;
        if (!left_zero) continue;
        ker.rows++;
        for (int j = 0; j < M.cols; ++j) ker.a.push_back(H.at(i, M.rows + j));
    }
    return lattice_from_rows(M.cols, std::move(ker));
}

Lattice image_lattice(const IntMatrix& M) { return lattice_from_rows(M.rows, transpose(M)); }

// coordinates of v in the HNF basis, or nullopt-like failure via bool
static bool solve_in_basis(const IntMatrix& B, std::span<const long long> v,
                           std::vector<long long>* coords) {
    if (int(v.size()) != B.cols) throw std::invalid_argument("vector dimension mismatch");
    std::vector<long long> rem(v.begin(), v.end());
    if (coords) coords->assign(B.rows, 0);
    for (int i = 0; i < B.rows; ++i) {
        int p = 0;
        while (p < B.cols && B.at(i, p) == 0) ++p;
        long long piv = B.at(i, p);
        if (rem[p] % piv != 0) return false;
        long long q = rem[p] / piv;
        if (coords) (*coords)[i] = q;
        for (int j = 0; j < B.cols; ++j) rem[j] = chk_sub(rem[j], chk_mul(q, B.at(i, j)));
    }
    return std::all_of(rem.begin(), rem.end(), [](long long x) { return x == 0; });
}

bool lattice_contains(const Lattice& L, std::span<const long long> v) {
    return solve_in_basis(L.basis, v, nullptr);
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
    return a.ambient_dim == b.ambient_dim && a.basis == b.basis;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    IntMatrix stack(a.basis.rows + b.basis.rows, a.ambient_dim);
    std::copy(a.basis.a.begin(), a.basis.a.end(), stack.a.begin());
    std::copy(b.basis.a.begin(), b.basis.a.end(),
              stack.a.begin() + std::size_t(a.basis.rows) * a.ambient_dim);
    return lattice_from_rows(a.ambient_dim, std::move(stack));
}

AbelianGroup quotient(const Lattice& big, const Lattice& small) {
    if (big.ambient_dim != small.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    IntMatrix coords(small.basis.rows, big.basis.rows);
    for (int i = 0; i < small.basis.rows; ++i) {
        std::vector<long long> c;
        std::span<const long long> row(small.basis.a.data() + std::size_t(i) * small.ambient_dim,
                                       std::size_t(small.ambient_dim));
        if (!solve_in_basis(big.basis, row, &c))
            throw std::invalid_argument("quotient: small is not a sublattice of big");
        for (int j = 0; j < big.basis.rows; ++j) coords.at(i, j) = c[j];
    }
    SnfResult s = snf(coords);
    AbelianGroup g;
    int nonzero = 0;
    for (int t = 0; t < std::min(s.S.rows, s.S.cols); ++t) {
        long long d = s.S.at(t, t);
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = big.basis.rows - nonzero;
    return g;
}

}  // namespace tetra
