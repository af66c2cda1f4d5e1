#include "tetra/cohomology.hpp"

namespace tetra {

static Lattice v1_span() {
    IntMatrix m(1, 8);
    for (int j = 0; j < 8; ++j) m.at(0, j) = 1;
    return lattice_from_rows(8, std::move(m));
}

CohomologyReport cohomology3(const RMap& R) {
    CohomologyReport rep;
    rep.code = R.code();
    IntMatrix m3 = boundary3_matrix(R);
    IntMatrix m4 = boundary4_matrix(R);
    rep.im = image_lattice(m3);
    rep.ker = kernel_lattice(m4);
    rep.ker_rank = rep.ker.rank();
    if (rep.im.rank() > 0)
        for (int j = 0; j < 8; ++j) rep.im_generator[j] = rep.im.basis.at(0, j);
    rep.h3 = quotient(rep.ker, rep.im);
    Lattice trivial_part = lattice_sum(rep.im, v1_span());
    rep.h3_reduced = quotient(rep.ker, trivial_part);
    rep.nontrivial = !lattice_equal(rep.ker, trivial_part);
    return rep;
}

bool verify_statement(const RMap& R) {
    return image_lattice(boundary3_matrix(R)).rank() <= 1;
}

}  // namespace tetra
