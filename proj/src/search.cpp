#include "tetra/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace tetra {

SolutionSet enumerate_solutions(int jobs) {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    constexpr std::uint64_t total = 1ull << 24;
    std::vector<std::vector<std::uint32_t>> found(jobs);
    auto worker = [&](int w) {
        std::uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
        for (std::uint64_t c = lo; c < hi; ++c)
            if (stte_code(std::uint32_t(c))) found[w].push_back(std::uint32_t(c));
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    SolutionSet s;
    for (auto& part : found)
        for (std::uint32_t c : part) s.maps.push_back(RMap::from_code(c));
    std::sort(s.maps.begin(), s.maps.end(), [](const RMap& a, const RMap& b) {
        int ca = image_cardinality(a), cb = image_cardinality(b);
        if (ca != cb) return ca < cb;
        return a.code() < b.code();
    });
    return s;
}

std::map<int, int> histogram_by_image_cardinality(const SolutionSet& s) {
    std::map<int, int> h;
    for (const RMap& r : s.maps) ++h[image_cardinality(r)];
    return h;
}

std::vector<Orbit> orbit_decomposition(const SolutionSet& s) {
    std::set<std::uint32_t> codes;
    for (const RMap& r : s.maps) codes.insert(r.code());
    for (const RMap& r : s.maps) {
        if (!codes.count(sigma1_conjugate(r).code()) || !codes.count(sigma2_conjugate(r).code()))
            throw std::runtime_error("solution set not closed under sigma conjugation");
    }
    std::vector<Orbit> orbits;
    std::set<std::uint32_t> seen;
    for (const RMap& r : s.maps) {  // s.maps is in canonical order
        if (seen.count(r.code())) continue;
        Orbit o;
        std::vector<std::uint32_t> stack{r.code()};
        std::set<std::uint32_t> members;
        while (!stack.empty()) {
            std::uint32_t c = stack.back();
            stack.pop_back();
            if (!members.insert(c).second) continue;
            stack.push_back(sigma1_conjugate(RMap::from_code(c)).code());
            stack.push_back(sigma2_conjugate(RMap::from_code(c)).code());
        }
        o.self_sigma1 = o.self_sigma2 = true;
        for (std::uint32_t c : members) {
            std::uint32_t c1 = sigma1_conjugate(RMap::from_code(c)).code();
            std::uint32_t c2 = sigma2_conjugate(RMap::from_code(c)).code();
            if (c1 != c) {
                o.self_sigma1 = false;
                if (c < c1) o.edges.emplace_back(c, c1, SigmaLabel::sigma1);
            }
            if (c2 != c) {
                o.self_sigma2 = false;
                if (c < c2) o.edges.emplace_back(c, c2, SigmaLabel::sigma2);
            }
        }
        o.members.assign(members.begin(), members.end());
        seen.insert(members.begin(), members.end());
        orbits.push_back(std::move(o));
    }
    return orbits;
}

}  // namespace tetra
