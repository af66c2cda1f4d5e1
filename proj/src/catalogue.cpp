#include "tetra/catalogue.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tetra/boolfun.hpp"

namespace tetra {

using nlohmann::json;

RMap CatalogueEntry::rmap() const {
    return {tt_from_anf(parse_poly(polys[0])), tt_from_anf(parse_poly(polys[1])),
            tt_from_anf(parse_poly(polys[2]))};
}

static std::optional<std::vector<std::array<long long, 8>>> read_matrix(const json& j,
                                                                        const char* key, int id) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    std::vector<std::array<long long, 8>> rows;
    for (const auto& jr : j[key]) {
        if (jr.size() != 8)
            throw std::runtime_error("entry " + std::to_string(id) + ": " + key +
                                     " row is not 8 wide");
        std::array<long long, 8> row;
        for (int c = 0; c < 8; ++c) row[c] = jr[c].get<long long>();
        rows.push_back(row);
    }
    return rows;
}

std::vector<CatalogueEntry> load_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file: " + path);
    json root;
    try {
        in >> root;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("reference parse error: " + std::string(e.what()));
    }
    std::vector<CatalogueEntry> out;
    std::map<int, std::uint32_t> code_by_id;
    for (const auto& j : root.at("solutions")) {
        CatalogueEntry e;
        e.id = j.at("id").get<int>();
        e.item = j.at("item").get<int>();
        for (int c = 0; c < 3; ++c) e.polys[c] = j.at("r")[c].get<std::string>();
        e.sigma1_id = j.at("sigma1").get<int>();
        e.sigma2_id = j.at("sigma2").get<int>();
        e.printed_im = read_matrix(j, "im_delta2", e.id);
        e.printed_ker = read_matrix(j, "ker_delta3", e.id);
        if (e.printed_im.has_value() != e.printed_ker.has_value())
            throw std::runtime_error("entry " + std::to_string(e.id) +
                                     ": im/ker matrices must come together");
        RMap r = e.rmap();  // throws parse_error on bad polynomials
        if (!satisfies_stte(r))
            throw std::runtime_error("entry " + std::to_string(e.id) + " does not satisfy STTE");
        code_by_id[e.id] = r.code();
        out.push_back(std::move(e));
    }
    if (out.size() != 406)
        throw std::runtime_error("expected 406 reference entries, got " +
                                 std::to_string(out.size()));
    std::map<int, const CatalogueEntry*> by_id;
    for (const auto& e : out) {
        if (!by_id.emplace(e.id, &e).second)
            throw std::runtime_error("duplicate id " + std::to_string(e.id));
    }
    for (const auto& e : out) {
        auto p1 = by_id.find(e.sigma1_id);
        auto p2 = by_id.find(e.sigma2_id);
        if (p1 == by_id.end() || p2 == by_id.end() || p1->second->sigma1_id != e.id ||
            p2->second->sigma2_id != e.id)
            throw std::runtime_error("entry " + std::to_string(e.id) + ": sigma ids inconsistent");
        if (sigma1_conjugate(e.rmap()).code() != code_by_id[e.sigma1_id] ||
            sigma2_conjugate(e.rmap()).code() != code_by_id[e.sigma2_id])
            throw std::runtime_error("entry " + std::to_string(e.id) +
                                     ": sigma ids disagree with conjugation");
    }
    return out;
}

std::string render_reference_json(const std::vector<CatalogueEntry>& entries) {
    json root;
    root["solutions"] = json::array();
    for (const auto& e : entries) {
        json j;
        j["id"] = e.id;
        j["item"] = e.item;
        j["r"] = {e.polys[0], e.polys[1], e.polys[2]};
        j["sigma1"] = e.sigma1_id;
        j["sigma2"] = e.sigma2_id;
        j["im_delta2"] = nullptr;
        j["ker_delta3"] = nullptr;
        if (e.printed_im) j["im_delta2"] = *e.printed_im;
        if (e.printed_ker) j["ker_delta3"] = *e.printed_ker;
        root["solutions"].push_back(std::move(j));
    }
    return root.dump(1) + "\n";
}

static Lattice lattice_of_rows(const std::vector<std::array<long long, 8>>& rows) {
    IntMatrix m(int(rows.size()), 8);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < 8; ++j) m.at(i, j) = rows[i][j];
    return lattice_from_rows(8, std::move(m));
}

DiffReport compare(const SolutionSet& computed, const std::vector<CohomologyReport>& reports,
                   const std::vector<CatalogueEntry>& ref) {
    DiffReport d;
    std::set<std::uint32_t> comp;
    for (const RMap& r : computed.maps) comp.insert(r.code());
    std::map<std::uint32_t, const CohomologyReport*> rep_by_code;
    for (const auto& r : reports) rep_by_code[r.code] = &r;
    std::set<std::uint32_t> refcodes;
    for (const auto& e : ref) refcodes.insert(e.rmap().code());
    for (std::uint32_t c : refcodes)
        if (!comp.count(c)) d.missing.push_back(c);
    for (std::uint32_t c : comp)
        if (!refcodes.count(c)) d.extra.push_back(c);
    for (const auto& e : ref) {
        std::uint32_t code = e.rmap().code();
        auto it = rep_by_code.find(code);
        if (it == rep_by_code.end()) continue;
        const CohomologyReport& rep = *it->second;
        bool ok = rep.nontrivial == e.printed_im.has_value();
        if (e.printed_im) {
            Lattice im = e.printed_im->empty() ? Lattice{8, IntMatrix(0, 8)}
                                               : lattice_of_rows(*e.printed_im);
            ok = ok && lattice_equal(rep.im, im) && lattice_equal(rep.ker, lattice_of_rows(*e.printed_ker));
        }
        if (!ok) d.mismatched_cohomology.push_back(e.id);
    }
    return d;
}

static json solution_json(const RMap& r, const CohomologyReport* rep, const CatalogueEntry* e) {
    json j;
    j["code"] = r.code();
    j["r"] = {print_poly(anf_from_tt(r.r1)), print_poly(anf_from_tt(r.r2)),
              print_poly(anf_from_tt(r.r3))};
    j["image_cardinality"] = image_cardinality(r);
    j["bijective"] = is_bijective(r);
    if (e) {
        j["id"] = e->id;
        j["item"] = e->item;
        j["sigma1"] = e->sigma1_id;
        j["sigma2"] = e->sigma2_id;
    }
    if (rep) {
        j["ker_rank"] = rep->ker_rank;
        j["h3"] = {{"free", rep->h3.free_rank}, {"torsion", rep->h3.torsion}};
        j["h3_reduced"] = {{"free", rep->h3_reduced.free_rank}, {"torsion", rep->h3_reduced.torsion}};
        j["nontrivial"] = rep->nontrivial;
    }
    return j;
}

static const CatalogueEntry* find_entry(const std::vector<CatalogueEntry>* ref, std::uint32_t code) {
    if (!ref) return nullptr;
    for (const auto& e : *ref)
        if (e.rmap().code() == code) return &e;
    return nullptr;
}

std::string render_json(const SolutionSet& s, const std::vector<CohomologyReport>& reports,
                        const std::vector<CatalogueEntry>* ref) {
    std::map<std::uint32_t, const CohomologyReport*> rep_by_code;
    for (const auto& r : reports) rep_by_code[r.code] = &r;
    json root;
    root["solutions"] = json::array();
    for (const RMap& r : s.maps) {
        auto it = rep_by_code.find(r.code());
        root["solutions"].push_back(
            solution_json(r, it == rep_by_code.end() ? nullptr : it->second,
                          find_entry(ref, r.code())));
    }
    return root.dump(1) + "\n";
}

std::string render_text(const SolutionSet& s, const std::vector<CohomologyReport>& reports,
                        const std::vector<CatalogueEntry>* ref) {
    std::map<std::uint32_t, const CohomologyReport*> rep_by_code;
    for (const auto& r : reports) rep_by_code[r.code] = &r;
    std::ostringstream out;
    out << "# code  card  bij  r1 | r2 | r3";
    if (!reports.empty()) out << "  h3";
    out << "\n";
    for (const RMap& r : s.maps) {
        const CatalogueEntry* e = find_entry(ref, r.code());
        out << r.code() << "  " << image_cardinality(r) << "  " << (is_bijective(r) ? 1 : 0)
            << "  " << print_poly(anf_from_tt(r.r1)) << " | " << print_poly(anf_from_tt(r.r2))
            << " | " << print_poly(anf_from_tt(r.r3));
        if (e) out << "  [R_" << e->id << "]";
        auto it = rep_by_code.find(r.code());
        if (it != rep_by_code.end()) {
            const auto& g = it->second->h3;
            out << "  h3=Z^" << g.free_rank;
            for (long long t : g.torsion) out << "+Z/" << t;
            if (it->second->nontrivial) out << " (nontrivial)";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace tetra
