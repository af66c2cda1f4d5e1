#include "tetra/quantum.hpp"

#include <stdexcept>

#include "tetra/cubecomplex.hpp"

namespace tetra {

Rational rational_pow(const Rational& t, long long e) {
    if (t == 0) throw std::invalid_argument("0 cannot be raised to arbitrary powers here");
    Rational base = e < 0 ? Rational(denominator(t), numerator(t)) : t;
    unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
    Rational r = 1;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Cocycle make_cocycle(const RMap& R, std::array<long long, 8> w, Rational t, bool force) {
    if (t == 0) throw std::invalid_argument("cocycle parameter t must be nonzero");
    if (!force) {
        IntMatrix m4 = boundary4_matrix(R);
        for (int i = 0; i < m4.rows; ++i) {
            long long acc = 0;
            for (int j = 0; j < 8; ++j) acc = chk_add(acc, chk_mul(m4.at(i, j), w[j]));
            if (acc != 0) throw std::invalid_argument("w is not a 3-cocycle for this R");
        }
    }
    return {w, std::move(t)};
}

QOperator build_qoperator(const RMap& R, const std::optional<Cocycle>& c) {
    auto tab = transition_table(R);
    QOperator Q;
    for (int t = 0; t < 8; ++t)
        Q.at(tab[t], t) = c ? rational_pow(c->t, c->w[t]) : Rational(1);
    return Q;
}

Matrix64 embed_on_legs(const QOperator& Q, Legs legs) {
    validate_legs(legs);
    Matrix64 M;
    int bi = 6 - legs.i, bj = 6 - legs.j, bk = 6 - legs.k;
    for (int s = 0; s < 64; ++s) {
        int col3 = 4 * ((s >> bi) & 1) + 2 * ((s >> bj) & 1) + ((s >> bk) & 1);
        int rest = s & ~((1 << bi) | (1 << bj) | (1 << bk));
        for (int row3 = 0; row3 < 8; ++row3) {
            const Rational& v = Q.at(row3, col3);
            if (v == 0) continue;
            int row = rest | (((row3 >> 2) & 1) << bi) | (((row3 >> 1) & 1) << bj) |
                      ((row3 & 1) << bk);
            M.at(row, s) = v;
        }
    }
    return M;
}

Matrix64 mul(const Matrix64& A, const Matrix64& B) {
    Matrix64 C;
    for (int k = 0; k < 64; ++k)
        for (int j = 0; j < 64; ++j) {
            const Rational& b = B.at(k, j);
            if (b == 0) continue;
            for (int i = 0; i < 64; ++i) {
                const Rational& a = A.at(i, k);
                if (a == 0) continue;
                C.at(i, j) += a * b;
            }
        }
    return C;
}

bool check_qte(const RMap& R, const std::optional<Cocycle>& c) {
    QOperator Q = build_qoperator(R, c);
    Matrix64 m123 = embed_on_legs(Q, {1, 2, 3});
    Matrix64 m145 = embed_on_legs(Q, {1, 4, 5});
    Matrix64 m246 = embed_on_legs(Q, {2, 4, 6});
    Matrix64 m356 = embed_on_legs(Q, {3, 5, 6});
    Matrix64 lhs = mul(m123, mul(m145, mul(m246, m356)));
    Matrix64 rhs = mul(m356, mul(m246, mul(m145, m123)));
    return lhs == rhs;
}

}  // namespace tetra
