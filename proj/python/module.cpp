#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "tetra/catalogue.hpp"
#include "tetra/cohomology.hpp"
#include "tetra/quantum.hpp"
#include "tetra/search.hpp"

namespace py = pybind11;
using namespace tetra;

namespace {

RMap map_of(std::uint32_t code) { return RMap::from_code(code); }

std::vector<std::vector<long long>> rows_of(const IntMatrix& m) {
    std::vector<std::vector<long long>> out(m.rows, std::vector<long long>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i][j] = m.at(i, j);
    return out;
}

py::dict group_dict(const AbelianGroup& g) {
    py::dict d;
    d["free_rank"] = g.free_rank;
    d["torsion"] = g.torsion;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tetra, m) {
    m.doc() = "set-theoretic tetrahedron equation toolkit";

    m.def("code_from_polys", [](const std::string& r1, const std::string& r2,
                                const std::string& r3) {
        return RMap{tt_from_anf(parse_poly(r1)), tt_from_anf(parse_poly(r2)),
                    tt_from_anf(parse_poly(r3))}
            .code();
    });
    m.def("polys_from_code", [](std::uint32_t code) {
        RMap r = map_of(code);
        return std::array<std::string, 3>{print_poly(anf_from_tt(r.r1)),
                                          print_poly(anf_from_tt(r.r2)),
                                          print_poly(anf_from_tt(r.r3))};
    });

    m.def("is_solution", [](std::uint32_t code) { return satisfies_stte(map_of(code)); });
    m.def("image_cardinality", [](std::uint32_t code) { return image_cardinality(map_of(code)); });
    m.def("is_bijective", [](std::uint32_t code) { return is_bijective(map_of(code)); });
    m.def("sigma1", [](std::uint32_t code) { return sigma1_conjugate(map_of(code)).code(); });
    m.def("sigma2", [](std::uint32_t code) { return sigma2_conjugate(map_of(code)).code(); });

    m.def(
        "enumerate_solutions",
        [](int jobs) {
            if (jobs < 1) jobs = std::max(1u, std::thread::hardware_concurrency());
            std::vector<std::uint32_t> codes;
            for (const RMap& r : enumerate_solutions(jobs).maps) codes.push_back(r.code());
            return codes;
        },
        py::arg("jobs") = 0);

    m.def("orbits", [](const std::vector<std::uint32_t>& codes) {
        SolutionSet s;
        for (std::uint32_t c : codes) s.maps.push_back(map_of(c));
        py::list out;
        for (const Orbit& o : orbit_decomposition(s)) {
            py::dict d;
            d["members"] = o.members;
            d["self_sigma1"] = o.self_sigma1;
            d["self_sigma2"] = o.self_sigma2;
            out.append(d);
        }
        return out;
    });

    m.def("permitted_colorings", [](std::uint32_t code) {
        std::vector<std::uint32_t> masks;
        for (const Coloring4& c : enumerate_permitted4_propagate(map_of(code)))
            masks.push_back(c.mask);
        return masks;
    });
    m.def("boundary3", [](std::uint32_t code) { return rows_of(boundary3_matrix(map_of(code))); });
    m.def("boundary4", [](std::uint32_t code) { return rows_of(boundary4_matrix(map_of(code))); });

    m.def("cohomology", [](std::uint32_t code) {
        CohomologyReport rep = cohomology3(map_of(code));
        py::dict d;
        d["code"] = rep.code;
        d["ker_rank"] = rep.ker_rank;
        d["im_generator"] = rep.im_generator;
        d["h3"] = group_dict(rep.h3);
        d["h3_reduced"] = group_dict(rep.h3_reduced);
        d["nontrivial"] = rep.nontrivial;
        d["ker_basis"] = rows_of(rep.ker.basis);
        d["im_basis"] = rows_of(rep.im.basis);
        return d;
    });

    m.def(
        "check_qte",
        [](std::uint32_t code, std::optional<std::array<long long, 8>> w, long long t_num,
           long long t_den) {
            RMap r = map_of(code);
            if (!w) return check_qte(r);
            return check_qte(r, make_cocycle(r, *w, Rational(t_num, t_den)));
        },
        py::arg("code"), py::arg("w") = py::none(), py::arg("t_num") = 2,
        py::arg("t_den") = 1);

    m.def("load_reference", [](const std::string& path) {
        py::list out;
        for (const CatalogueEntry& e : load_reference(path)) {
            py::dict d;
            d["id"] = e.id;
            d["item"] = e.item;
            d["r"] = e.polys;
            d["code"] = e.rmap().code();
            d["sigma1"] = e.sigma1_id;
            d["sigma2"] = e.sigma2_id;
            d["im_delta2"] = e.printed_im ? py::cast(*e.printed_im) : py::none().cast<py::object>();
            d["ker_delta3"] = e.printed_ker ? py::cast(*e.printed_ker) : py::none().cast<py::object>();
            out.append(d);
        }
        return out;
    });
}
