#pragma once

#include <array>
#include <cstdint>

#include "tetra/boolfun.hpp"

namespace tetra {

// R(x,y,z) = (r1(x,y,z), r2(x,y,z), r3(x,y,z)).
struct RMap {
    TruthTable3 r1, r2, r3;

    std::uint32_t code() const {
        return (std::uint32_t(r1.bits) << 16) | (std::uint32_t(r2.bits) << 8) | r3.bits;
    }
    static RMap from_code(std::uint32_t c) {
        return {{std::uint8_t(c >> 16)}, {std::uint8_t(c >> 8)}, {std::uint8_t(c)}};
    }
    friend bool operator==(const RMap&, const RMap&) = default;
};

// 6-bit state (x1,...,x6), x1 in the most significant bit.
struct State6 {
    std::uint8_t v = 0;
    int bit(int i) const { return (v >> (6 - i)) & 1; }  // i in 1..6
    friend bool operator==(State6, State6) = default;
};

struct Legs {
    int i, j, k;
};
void validate_legs(Legs legs);  // throws std::invalid_argument unless 1<=i<j<k<=6

// t -> index of R(t), both packed as 4x+2y+z.
std::array<std::uint8_t, 8> transition_table(const RMap& R);

std::array<int, 3> apply(const RMap& R, std::array<int, 3> t);
State6 apply_at(const RMap& R, State6 s, Legs legs);

// R_123 R_145 R_246 R_356 = R_356 R_246 R_145 R_123 on all 64 states,
// rightmost factor applied first.
bool satisfies_stte(const RMap& R);
bool stte_code(std::uint32_t code);  // same check on a raw 24-bit code

int image_cardinality(const RMap& R);
bool is_bijective(const RMap& R);

// sigma1: argument reversal (x,y,z)->(z,y,x); r'_m(x,y,z) = r_{4-m}(z,y,x).
RMap sigma1_conjugate(const RMap& R);
// sigma2: global complement; r'_m(x,y,z) = 1 + r_m(1+x,1+y,1+z) mod 2.
RMap sigma2_conjugate(const RMap& R);

}  // namespace tetra
