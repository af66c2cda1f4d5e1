#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "tetra/rmap.hpp"

namespace tetra {

// All STTE solutions, sorted by (image_cardinality, 24-bit code).
struct SolutionSet {
    std::vector<RMap> maps;
};

SolutionSet enumerate_solutions(int jobs = 1);

std::map<int, int> histogram_by_image_cardinality(const SolutionSet& s);

enum class SigmaLabel { sigma1, sigma2 };

struct Orbit {
    std::vector<std::uint32_t> members;  // canonical order
    std::vector<std::tuple<std::uint32_t, std::uint32_t, SigmaLabel>> edges;
    bool self_sigma1 = false;  // sigma1 fixes every member
    bool self_sigma2 = false;
};

// Partition into orbits of the group generated by the two conjugations;
// throws std::runtime_error if the set is not closed under them.
std::vector<Orbit> orbit_decomposition(const SolutionSet& s);

}  // namespace tetra
