#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetra/cohomology.hpp"
#include "tetra/rmap.hpp"
#include "tetra/search.hpp"

namespace tetra {

struct CatalogueEntry {
    int id = 0;    // the reference subscript, 1..406
    int item = 0;  // grouping item number
    std::array<std::string, 3> polys;
    int sigma1_id = 0, sigma2_id = 0;  // partner ids, self when fixed
    // rows are Z^8 generators; nullopt when the reference prints no matrices
    std::optional<std::vector<std::array<long long, 8>>> printed_im, printed_ker;

    RMap rmap() const;
};

// Loads and validates: 406 entries, polynomials parse, every entry satisfies
// STTE, sigma ids are involutive and semantically consistent.
// Throws std::runtime_error on parse or invariant failure.
std::vector<CatalogueEntry> load_reference(const std::string& path);

struct DiffReport {
    std::vector<std::uint32_t> missing;  // in reference but not computed
    std::vector<std::uint32_t> extra;    // computed but not in reference
    std::vector<int> mismatched_cohomology;  // reference ids
    bool empty() const { return missing.empty() && extra.empty() && mismatched_cohomology.empty(); }
};

DiffReport compare(const SolutionSet& computed, const std::vector<CohomologyReport>& reports,
                   const std::vector<CatalogueEntry>& ref);

// Reference-file schema writer; load_reference(render_reference_json(e)) is
// the identity on the data model.
std::string render_reference_json(const std::vector<CatalogueEntry>& entries);

std::string render_json(const SolutionSet& s, const std::vector<CohomologyReport>& reports,
                        const std::vector<CatalogueEntry>* ref = nullptr);
std::string render_text(const SolutionSet& s, const std::vector<CohomologyReport>& reports,
                        const std::vector<CatalogueEntry>* ref = nullptr);

}  // namespace tetra
