#include <doctest.h>

#include "tetra/cohomology.hpp"

using namespace tetra;

namespace {

RMap from_polys(const char* a, const char* b, const char* c) {
    return {tt_from_anf(parse_poly(a)), tt_from_anf(parse_poly(b)), tt_from_anf(parse_poly(c))};
}

}  // namespace

TEST_CASE("identity solution: H3 = Z^8") {
    CohomologyReport rep = cohomology3(from_polys("x", "y", "z"));
    CHECK(rep.ker_rank == 8);
    for (int j = 0; j < 8; ++j) CHECK(rep.im_generator[j] == 0);
    CHECK(rep.h3 == AbelianGroup{8, {}});
    CHECK(rep.nontrivial);
}

TEST_CASE("(0, x+y+z, 0): H3 = Z + Z/2, reduced Z/2") {
    CohomologyReport rep = cohomology3(from_polys("0", "x+y+z", "0"));
    CHECK(rep.ker_rank == 2);
    std::array<long long, 8> gen = {0, 0, 0, 2, 0, 2, 2, 2};
    CHECK(rep.im_generator == gen);
    CHECK(rep.h3 == AbelianGroup{1, {2}});
    CHECK(rep.h3_reduced == AbelianGroup{0, {2}});
    CHECK(rep.nontrivial);
}

TEST_CASE("(0,0,0) has only trivial cohomology") {
    CohomologyReport rep = cohomology3(from_polys("0", "0", "0"));
    CHECK_FALSE(rep.nontrivial);
}

TEST_CASE("v1 and the image always sit inside the kernel") {
    const std::array<const char*, 3> cases[] = {
        {"x", "y", "z"}, {"0", "x+z", "0"}, {"0", "x+y+z", "0"}, {"x", "z", "y"},
        {"x+1", "y+1", "z+1"}, {"y", "y", "y"}};
    for (const auto& polys : cases) {
        CohomologyReport rep = cohomology3(from_polys(polys[0], polys[1], polys[2]));
        CHECK(lattice_contains(rep.ker, v1_cochain));
        for (int i = 0; i < rep.im.basis.rows; ++i) {
            std::vector<long long> row(rep.im.basis.a.begin() + i * 8,
                                       rep.im.basis.a.begin() + (i + 1) * 8);
            CHECK(lattice_contains(rep.ker, row));
        }
        CHECK(rep.im.rank() <= 1);
    }
}

TEST_CASE("verify_statement") {
    CHECK(verify_statement(from_polys("0", "x+z", "0")));
    CHECK(verify_statement(from_polys("x", "y", "z")));
    CHECK(image_lattice(boundary3_matrix(from_polys("0", "x+z", "0"))).rank() == 1);
    CHECK(image_lattice(boundary3_matrix(from_polys("x", "y", "z"))).rank() == 0);
}
