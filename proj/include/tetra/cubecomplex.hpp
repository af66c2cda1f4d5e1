#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tetra/intlinalg.hpp"
#include "tetra/rmap.hpp"

namespace tetra {

// A 2-face of the 4-cube: free axis pair (the "plane direction") plus the
// values of the two fixed coordinates. Pair classes are ordered
// (1,2)->1, (1,3)->2, (2,3)->3, (1,4)->4, (2,4)->5, (3,4)->6, so that the
// 3-faces with free axes {1,2,3},{1,2,4},{1,3,4},{2,3,4} carry the class
// triples {1,2,3},{1,4,5},{2,4,6},{3,5,6}.
struct Face2 {
    int pair_class;      // 1..6
    int fixed_lo = 0;    // coordinate value on the smaller fixed axis
    int fixed_hi = 0;    // coordinate value on the larger fixed axis
};

// Bit index in a Coloring4 mask: 4*(pair_class-1) + 2*fixed_lo + fixed_hi.
int face_index(const Face2& f);

// 24-bit mask, one color bit per Face2 in the index order above.
struct Coloring4 {
    std::uint32_t mask = 0;
    friend bool operator==(Coloring4, Coloring4) = default;
    friend auto operator<=>(Coloring4, Coloring4) = default;
};

// Standalone 3-cube coloring induced by an input triple: in[m-1] is R-argument
// m (on the incoming face with normal axis 4-m), out[m-1] is R-output m.
struct Cube3Coloring {
    std::array<int, 3> in, out;
};
Cube3Coloring permitted3(const RMap& R, std::array<int, 3> t);

// 8x2 matrix of the boundary d3 (= coboundary delta2): entry (t, c) counts
// occurrences of color c among the inputs of t minus occurrences among R(t).
IntMatrix boundary3_matrix(const RMap& R);

// Every 3-subcube restriction must satisfy outgoing = R(incoming).
bool is_permitted4(const RMap& R, Coloring4 col);

// All permitted colorings, ascending mask order. The brute-force filter over
// all 2^24 masks is the ground-truth oracle; the propagation enumerator fixes
// the 6 source faces and requires satisfies_stte(R).
std::vector<Coloring4> enumerate_permitted4_bruteforce(const RMap& R);
std::vector<Coloring4> enumerate_permitted4_propagate(const RMap& R);

// |P4| x 8 matrix of d4 (= delta3): one row per permitted coloring, ascending;
// row = sum over the four incoming 3-faces of e[input triple] minus the same
// over outgoing 3-faces. Requires satisfies_stte(R).
IntMatrix boundary4_matrix(const RMap& R);

}  // namespace tetra
