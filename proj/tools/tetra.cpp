// Command-line front end: enumeration, verification, cohomology, orbits,
// quantum checks and reference comparison for two-color tetrahedron-equation
// R-operators.
#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tetra/catalogue.hpp"
#include "tetra/cohomology.hpp"
#include "tetra/quantum.hpp"
#include "tetra/search.hpp"

using namespace tetra;

namespace {

constexpr int exit_ok = 0, exit_mismatch = 1, exit_usage = 2;

RMap rmap_from_polys(const std::string& p1, const std::string& p2, const std::string& p3) {
    return {tt_from_anf(parse_poly(p1)), tt_from_anf(parse_poly(p2)), tt_from_anf(parse_poly(p3))};
}

std::uint32_t parse_code(const std::string& s) {
    std::size_t pos = 0;
    unsigned long v;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0)
        v = std::stoul(s.substr(2), &pos, 16), pos += 2;
    else
        v = std::stoul(s, &pos, 10);
    if (pos != s.size() || v >= (1ul << 24)) throw CLI::ValidationError("bad 24-bit code: " + s);
    return std::uint32_t(v);
}

// One operator named either by three polynomials or by a single 24-bit code.
RMap rmap_from_args(const std::vector<std::string>& args) {
    if (args.size() == 3) return rmap_from_polys(args[0], args[1], args[2]);
    if (args.size() == 1) return RMap::from_code(parse_code(args[0]));
    throw CLI::ValidationError("give three polynomials or one 24-bit code");
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
        return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                        boost::multiprecision::cpp_int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad rational: " + s);
    }
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

std::string describe(const RMap& r) {
    std::string s = "(" + print_poly(anf_from_tt(r.r1)) + ", " + print_poly(anf_from_tt(r.r2)) +
                    ", " + print_poly(anf_from_tt(r.r3)) + ")  code " + std::to_string(r.code());
    return s;
}

std::string group_str(const AbelianGroup& g) {
    std::string s;
    if (g.free_rank > 0) s = "Z^" + std::to_string(g.free_rank);
    for (long long t : g.torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
    return s.empty() ? "0" : s;
}

std::vector<CohomologyReport> all_reports(const SolutionSet& s) {
    std::vector<CohomologyReport> reports;
    reports.reserve(s.maps.size());
    for (const RMap& r : s.maps) reports.push_back(cohomology3(r));
    return reports;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-color tetrahedron equation toolkit"};
    app.require_subcommand(1);

    int jobs = 1;
    std::string out_path, format = "text";

    auto* cmd_enum = app.add_subcommand("enumerate", "full solution set with classifications");
    cmd_enum->add_option("--out", out_path, "output file (default stdout)");
    cmd_enum->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cmd_enum->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    std::vector<std::string> r_args;
    auto* cmd_verify = app.add_subcommand("verify", "STTE verdict and classification for one R");
    cmd_verify->add_option("R", r_args, "three polynomials or one 24-bit code")->expected(1, 3);

    std::vector<std::string> coh_args;
    std::string coh_code;
    bool coh_all = false;
    auto* cmd_coh = app.add_subcommand("cohomology", "3-cohomology report(s)");
    cmd_coh->add_option("R", coh_args, "three polynomials")->expected(0, 3);
    cmd_coh->add_option("--code", coh_code, "24-bit code");
    cmd_coh->add_flag("--all", coh_all, "all 406 solutions");
    cmd_coh->add_option("--out", out_path, "output file");
    cmd_coh->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    auto* cmd_orbits = app.add_subcommand("orbits", "orbit decomposition listing");
    cmd_orbits->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    std::vector<std::string> q_args;
    std::string cocycle_spec = "trivial", t_spec = "2";
    bool q_all = false;
    auto* cmd_q = app.add_subcommand("quantum-check", "quantum tetrahedron equation verdicts");
    cmd_q->add_option("R", q_args, "three polynomials or one 24-bit code")->expected(0, 3);
    cmd_q->add_flag("--all", q_all, "all 406 solutions");
    cmd_q->add_option("--cocycle", cocycle_spec, "trivial | kernel-basis | w1,...,w8");
    cmd_q->add_option("--t", t_spec, "rational twist parameter (default 2)");
    cmd_q->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    std::string ref_path = "data/reference_catalogue.json";
    std::vector<int> oracle_ids;
    auto* cmd_cmp = app.add_subcommand("compare-reference", "full pipeline vs bundled reference");
    cmd_cmp->add_option("--ref", ref_path, "reference catalogue path");
    cmd_cmp->add_option("--oracle-4cube", oracle_ids,
                        "run the brute-force 4-cube oracle for these reference ids");
    cmd_cmp->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cmd_enum->parsed()) {
            SolutionSet s = enumerate_solutions(jobs);
            std::string content =
                format == "json" ? render_json(s, {}) : render_text(s, {});
            write_out(out_path, content);
            return exit_ok;
        }

        if (cmd_verify->parsed()) {
            RMap r = rmap_from_args(r_args);
            bool sol = satisfies_stte(r);
            std::cout << "R = " << describe(r) << "\n"
                      << "solution: " << (sol ? "yes" : "no") << "\n"
                      << "image cardinality: " << image_cardinality(r) << "\n"
                      << "bijective: " << (is_bijective(r) ? "yes" : "no") << "\n"
                      << "sigma1 partner: " << describe(sigma1_conjugate(r)) << "\n"
                      << "sigma2 partner: " << describe(sigma2_conjugate(r)) << "\n";
            return exit_ok;
        }

        if (cmd_coh->parsed()) {
            std::vector<RMap> targets;
            if (coh_all) {
                SolutionSet s = enumerate_solutions(jobs);
                targets = s.maps;
            } else if (!coh_code.empty()) {
                targets.push_back(RMap::from_code(parse_code(coh_code)));
            } else if (coh_args.size() == 3) {
                targets.push_back(rmap_from_polys(coh_args[0], coh_args[1], coh_args[2]));
            } else {
                std::cerr << "cohomology: give three polynomials, --code or --all\n";
                return exit_usage;
            }
            std::ostringstream out;
            for (const RMap& r : targets) {
                if (!satisfies_stte(r)) {
                    std::cerr << "not an STTE solution: " << describe(r) << "\n";
                    return exit_mismatch;
                }
                CohomologyReport rep = cohomology3(r);
                out << describe(r) << "\n  ker rank " << rep.ker_rank << ", im generator (";
                for (int j = 0; j < 8; ++j) out << (j ? "," : "") << rep.im_generator[j];
                out << ")\n  H3 = " << group_str(rep.h3)
                    << ", H3_reduced = " << group_str(rep.h3_reduced)
                    << (rep.nontrivial ? "  [nontrivial]" : "") << "\n";
            }
            write_out(out_path, out.str());
            return exit_ok;
        }

        if (cmd_orbits->parsed()) {
            SolutionSet s = enumerate_solutions(jobs);
            auto orbits = orbit_decomposition(s);
            std::cout << orbits.size() << " orbits\n";
            for (std::size_t i = 0; i < orbits.size(); ++i) {
                const Orbit& o = orbits[i];
                std::cout << "orbit " << i + 1 << " size " << o.members.size() << ":";
                for (auto c : o.members) std::cout << " " << c;
                if (o.self_sigma1) std::cout << "  (sigma1-fixed)";
                if (o.self_sigma2) std::cout << "  (sigma2-fixed)";
                std::cout << "\n";
                for (const auto& [a, b, l] : o.edges)
                    std::cout << "  " << a << " <-" << (l == SigmaLabel::sigma1 ? "s1" : "s2")
                              << "-> " << b << "\n";
            }
            return exit_ok;
        }

        if (cmd_q->parsed()) {
            Rational t = parse_rational(t_spec);
            std::vector<RMap> targets;
            if (q_all) {
                SolutionSet s = enumerate_solutions(jobs);
                targets = s.maps;
            } else if (!q_args.empty()) {
                targets.push_back(rmap_from_args(q_args));
            } else {
                std::cerr << "quantum-check: give an R or --all\n";
                return exit_usage;
            }
            bool all_ok = true;
            for (const RMap& r : targets) {
                std::vector<std::optional<Cocycle>> cocycles;
                if (cocycle_spec == "trivial") {
                    cocycles.push_back(std::nullopt);
                } else if (cocycle_spec == "kernel-basis") {
                    Lattice ker = kernel_lattice(boundary4_matrix(r));
                    for (int i = 0; i < ker.basis.rows; ++i) {
                        std::array<long long, 8> w;
                        for (int j = 0; j < 8; ++j) w[j] = ker.basis.at(i, j);
                        cocycles.push_back(make_cocycle(r, w, t));
                    }
                } else {
                    std::array<long long, 8> w{};
                    std::stringstream ss(cocycle_spec);
                    std::string tok;
                    int n = 0;
                    while (std::getline(ss, tok, ',') && n < 8) w[n++] = std::stoll(tok);
                    if (n != 8) {
                        std::cerr << "cocycle must have 8 components\n";
                        return exit_usage;
                    }
                    cocycles.push_back(make_cocycle(r, w, t));
                }
                for (const auto& c : cocycles) {
                    bool ok = check_qte(r, c);
                    all_ok = all_ok && ok;
                    std::cout << describe(r);
                    if (c) {
                        std::cout << "  w=(";
                        for (int j = 0; j < 8; ++j) std::cout << (j ? "," : "") << c->w[j];
                        std::cout << ") t=" << c->t;
                    } else {
                        std::cout << "  trivial cocycle";
                    }
                    std::cout << "  qte: " << (ok ? "pass" : "FAIL") << "\n";
                }
            }
            return all_ok ? exit_ok : exit_mismatch;
        }

        if (cmd_cmp->parsed()) {
            auto ref = load_reference(ref_path);
            SolutionSet s = enumerate_solutions(jobs);
            auto reports = all_reports(s);
            DiffReport d = compare(s, reports, ref);
            bool ok = d.empty();
            for (int id : oracle_ids) {
                auto it = std::find_if(ref.begin(), ref.end(),
                                       [&](const CatalogueEntry& e) { return e.id == id; });
                if (it == ref.end()) {
                    std::cerr << "no reference entry with id " << id << "\n";
                    return exit_usage;
                }
                RMap r = it->rmap();
                auto brute = enumerate_permitted4_bruteforce(r);
                auto prop = enumerate_permitted4_propagate(r);
                bool same = brute == prop;
                ok = ok && same;
                std::cout << "4-cube oracle R_" << id << ": " << brute.size() << " colorings, "
                          << (same ? "match" : "MISMATCH") << "\n";
            }
            std::cout << "computed " << s.maps.size() << " solutions; reference " << ref.size()
                      << "\nmissing " << d.missing.size() << ", extra " << d.extra.size()
                      << ", cohomology mismatches " << d.mismatched_cohomology.size() << "\n";
            for (auto c : d.missing) std::cout << "  missing code " << c << "\n";
            for (auto c : d.extra) std::cout << "  extra code " << c << "\n";
            for (int id : d.mismatched_cohomology) std::cout << "  cohomology mismatch R_" << id << "\n";
            std::cout << (ok ? "MATCH" : "DIFF") << "\n";
            return ok ? exit_ok : exit_mismatch;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const parse_error& e) {
        std::cerr << "polynomial " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_mismatch;
    }
    return exit_usage;
}
