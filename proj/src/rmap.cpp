#include "tetra/rmap.hpp"

#include <stdexcept>

namespace tetra {

void validate_legs(Legs legs) {
    if (!(1 <= legs.i && legs.i < legs.j && legs.j < legs.k && legs.k <= 6))
        throw std::invalid_argument("legs must satisfy 1 <= i < j < k <= 6");
}

std::array<std::uint8_t, 8> transition_table(const RMap& R) {
    std::array<std::uint8_t, 8> tab;
    for (int t = 0; t < 8; ++t) {
        unsigned b1 = (R.r1.bits >> t) & 1, b2 = (R.r2.bits >> t) & 1, b3 = (R.r3.bits >> t) & 1;
        tab[t] = std::uint8_t((b1 << 2) | (b2 << 1) | b3);
    }
    return tab;
}

std::array<int, 3> apply(const RMap& R, std::array<int, 3> t) {
    int idx = 4 * t[0] + 2 * t[1] + t[2];
    return {(R.r1.bits >> idx) & 1, (R.r2.bits >> idx) & 1, (R.r3.bits >> idx) & 1};
}

static inline unsigned apply_tab(const std::uint8_t* tab, unsigned s, int i, int j, int k) {
    unsigned bi = (s >> (6 - i)) & 1, bj = (s >> (6 - j)) & 1, bk = (s >> (6 - k)) & 1;
    unsigned r = tab[(bi << 2) | (bj << 1) | bk];
    s &= ~((1u << (6 - i)) | (1u << (6 - j)) | (1u << (6 - k)));
    return s | (((r >> 2) & 1) << (6 - i)) | (((r >> 1) & 1) << (6 - j)) | ((r & 1) << (6 - k));
}

State6 apply_at(const RMap& R, State6 s, Legs legs) {
    validate_legs(legs);
    auto tab = transition_table(R);
    return {std::uint8_t(apply_tab(tab.data(), s.v, legs.i, legs.j, legs.k))};
}

static bool stte_tab(const std::uint8_t* tab) {
    for (unsigned s = 0; s < 64; ++s) {
        // lhs = R123 R145 R246 R356 (rightmost first)
        unsigned l = apply_tab(tab, s, 3, 5, 6);
        l = apply_tab(tab, l, 2, 4, 6);
        l = apply_tab(tab, l, 1, 4, 5);
        l = apply_tab(tab, l, 1, 2, 3);
        unsigned r = apply_tab(tab, s, 1, 2, 3);
        r = apply_tab(tab, r, 1, 4, 5);
        r = apply_tab(tab, r, 2, 4, 6);
        r = apply_tab(tab, r, 3, 5, 6);
        if (l != r) return false;
    }
    return true;
}

bool satisfies_stte(const RMap& R) {
    auto tab = transition_table(R);
    return stte_tab(tab.data());
}

bool stte_code(std::uint32_t code) {
    std::uint8_t tab[8];
    unsigned r1 = code >> 16, r2 = (code >> 8) & 0xFF, r3 = code & 0xFF;
    for (int t = 0; t < 8; ++t)
        tab[t] = std::uint8_t((((r1 >> t) & 1) << 2) | (((r2 >> t) & 1) << 1) | ((r3 >> t) & 1));
    return stte_tab(tab);
}

int image_cardinality(const RMap& R) {
    auto tab = transition_table(R);
    unsigned seen = 0;
    for (int t = 0; t < 8; ++t) seen |= 1u << tab[t];
    int n = 0;
    for (int t = 0; t < 8; ++t) n += (seen >> t) & 1;
    return n;
}

bool is_bijective(const RMap& R) { return image_cardinality(R) == 8; }

// tt'(x,y,z) = tt(z,y,x)
static TruthTable3 swap_xz(TruthTable3 tt) {
    std::uint8_t out = 0;
    for (int i = 0; i < 8; ++i) {
        int j = ((i & 1) << 2) | (i & 2) | ((i >> 2) & 1);
        if ((tt.bits >> j) & 1) out |= std::uint8_t(1u << i);
    }
    return {out};
}

// tt'(x,y,z) = 1 + tt(1+x,1+y,1+z)
static TruthTable3 complement(TruthTable3 tt) {
    std::uint8_t out = 0;
    for (int i = 0; i < 8; ++i)
        if (!((tt.bits >> (7 - i)) & 1)) out |= std::uint8_t(1u << i);
    return {out};
}

RMap sigma1_conjugate(const RMap& R) {
    return {swap_xz(R.r3), swap_xz(R.r2), swap_xz(R.r1)};
}

RMap sigma2_conjugate(const RMap& R) {
    return {complement(R.r1), complement(R.r2), complement(R.r3)};
}

}  // namespace tetra
