#pragma once

#include <array>
#include <cstdint>

#include "tetra/cubecomplex.hpp"
#include "tetra/intlinalg.hpp"
#include "tetra/rmap.hpp"

namespace tetra {

inline const std::array<long long, 8> v1_cochain = {1, 1, 1, 1, 1, 1, 1, 1};

struct CohomologyReport {
    std::uint32_t code = 0;
    int ker_rank = 0;
    // lattice generator of im delta2 (primitive vector times its multiplicity,
    // first nonzero entry positive); all zeros when the image vanishes
    std::array<long long, 8> im_generator{};
    AbelianGroup h3;          // ker delta3 / im delta2
    AbelianGroup h3_reduced;  // ker delta3 / (im delta2 + Z*v1)
    bool nontrivial = false;  // ker delta3 != im delta2 + Z*v1
    Lattice ker, im;
};

// Requires satisfies_stte(R).
CohomologyReport cohomology3(const RMap& R);

// rank(im delta2) <= 1, i.e. strictly below the number of colors.
bool verify_statement(const RMap& R);

}  // namespace tetra
