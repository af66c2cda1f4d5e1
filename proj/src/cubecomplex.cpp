#include "tetra/cubecomplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

static int pair_class(int p, int q) {  // p < q, axes 1..4
    static constexpr int tab[5][5] = {{},
                                      {0, 0, 1, 2, 4},
                                      {0, 0, 0, 3, 5},
                                      {0, 0, 0, 0, 6},
                                      {0, 0, 0, 0, 0}};
    return tab[p][q];
}

int face_index(const Face2& f) {
    if (f.pair_class < 1 || f.pair_class > 6) throw std::invalid_argument("bad pair class");
    return 4 * (f.pair_class - 1) + 2 * f.fixed_lo + f.fixed_hi;
}

Cube3Coloring permitted3(const RMap& R, std::array<int, 3> t) {
    auto out = apply(R, t);
    return {t, out};
}

IntMatrix boundary3_matrix(const RMap& R) {
    IntMatrix M(8, 2);
    for (int t = 0; t < 8; ++t) {
        std::array<int, 3> in = {(t >> 2) & 1, (t >> 1) & 1, t & 1};
        auto out = apply(R, in);
        for (int m = 0; m < 3; ++m) {
            M.at(t, in[m]) += 1;
            M.at(t, out[m]) -= 1;
        }
    }
    return M;
}

// One 3-subcube of the 4-cube: fixed axis d at value v, free axes a < b < c.
// Within it, R-argument m sits on the incoming face with normal axis the
// (4-m)-th free axis, outputs on the opposite faces.
struct Subcube {
    int in_face[3];   // face_index of arguments 1,2,3
    int out_face[3];  // face_index of outputs 1,2,3
};

static const std::array<Subcube, 8>& subcubes() {
    static const std::array<Subcube, 8> table = [] {
        std::array<Subcube, 8> t{};
        int n = 0;
        for (int d = 1; d <= 4; ++d)
            for (int v = 0; v <= 1; ++v) {
                int free3[3], m = 0;
                for (int ax = 1; ax <= 4; ++ax)
                    if (ax != d) free3[m++] = ax;
                int a = free3[0], b = free3[1], c = free3[2];
                auto idx = [&](int p, int q, int fix_axis, int fix_val) {
                    // face with free pair (p,q); fixed axes are fix_axis and d
                    int lo_ax = std::min(fix_axis, d), hi_ax = std::max(fix_axis, d);
                    int lo = (lo_ax == d) ? v : fix_val;
                    int hi = (hi_ax == d) ? v : fix_val;
                    return face_index({pair_class(p, q), lo, hi});
                };
                Subcube s;
                s.in_face[0] = idx(a, b, c, 0);
                s.in_face[1] = idx(a, c, b, 1);
                s.in_face[2] = idx(b, c, a, 0);
                s.out_face[0] = idx(a, b, c, 1);
                s.out_face[1] = idx(a, c, b, 0);
                s.out_face[2] = idx(b, c, a, 1);
                t[n++] = s;
            }
        return t;
    }();
    return table;
}

static inline int triple_of(std::uint32_t mask, const int* faces) {
    return 4 * ((mask >> faces[0]) & 1) + 2 * ((mask >> faces[1]) & 1) + ((mask >> faces[2]) & 1);
}

bool is_permitted4(const RMap& R, Coloring4 col) {
    auto tab = transition_table(R);
    for (const Subcube& s : subcubes()) {
        int in = triple_of(col.mask, s.in_face);
        int out = triple_of(col.mask, s.out_face);
        if (out != tab[in]) return false;
    }
    return true;
}

std::vector<Coloring4> enumerate_permitted4_bruteforce(const RMap& R) {
    auto tab = transition_table(R);
    const auto& subs = subcubes();
    std::vector<Coloring4> out;
    for (std::uint32_t m = 0; m < (1u << 24); ++m) {
        bool ok = true;
        for (const Subcube& s : subs) {
            if (triple_of(m, s.out_face) != tab[triple_of(m, s.in_face)]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back({m});
    }
    return out;
}

std::vector<Coloring4> enumerate_permitted4_propagate(const RMap& R) {
    if (!satisfies_stte(R))
        throw std::invalid_argument("propagation enumeration requires an STTE solution");
    const auto& subs = subcubes();
    auto tab = transition_table(R);

    // source faces: incoming in both containing 3-subcubes
    std::uint32_t incoming = 0, outgoing = 0;
    for (const Subcube& s : subs) {
        for (int m = 0; m < 3; ++m) {
            incoming |= 1u << s.in_face[m];
            outgoing |= 1u << s.out_face[m];
        }
    }
    std::vector<int> sources;
    for (int f = 0; f < 24; ++f)
        if ((incoming >> f & 1) && !(outgoing >> f & 1)) sources.push_back(f);
    if (sources.size() != 6) throw std::runtime_error("expected exactly 6 source faces");

    std::vector<Coloring4> out;
    out.reserve(64);
    for (unsigned src = 0; src < 64; ++src) {
        std::uint32_t known = 0, mask = 0;
        for (int m = 0; m < 6; ++m) {
            known |= 1u << sources[m];
            if (src >> m & 1) mask |= 1u << sources[m];
        }
        bool applied[8] = {};
        bool progress = true;
        while (progress) {
            progress = false;
            for (int si = 0; si < 8; ++si) {
                if (applied[si]) continue;
                const Subcube& s = subs[si];
                if (!((known >> s.in_face[0] & 1) && (known >> s.in_face[1] & 1) &&
                      (known >> s.in_face[2] & 1)))
                    continue;
                int r = tab[triple_of(mask, s.in_face)];
                for (int m = 0; m < 3; ++m) {
                    int f = s.out_face[m];
                    int v = (r >> (2 - m)) & 1;
                    if (known >> f & 1) {
                        if (int(mask >> f & 1) != v)
                            throw std::runtime_error("propagation conflict: face convention or STTE violated");
                    } else {
                        known |= 1u << f;
                        if (v) mask |= 1u << f;
                    }
                }
                applied[si] = true;
                progress = true;
            }
        }
        if (known != (1u << 24) - 1)
            throw std::runtime_error("propagation stalled: determination relation not acyclic");
        out.push_back({mask});
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::runtime_error("propagation produced duplicate colorings");
    return out;
}

IntMatrix boundary4_matrix(const RMap& R) {
    auto cols = enumerate_permitted4_propagate(R);
    auto tab = transition_table(R);
    const auto& subs = subcubes();
    IntMatrix M(int(cols.size()), 8);
    for (int row = 0; row < M.rows; ++row) {
        std::uint32_t mask = cols[row].mask;
        for (int k = 1; k <= 4; ++k) {
            int v_in = (k % 2 == 0) ? 1 : 0;  // incoming 3-faces: x1=0, x2=1, x3=0, x4=1
            const Subcube& cin = subs[2 * (k - 1) + v_in];
            const Subcube& cout = subs[2 * (k - 1) + (1 - v_in)];
            int tin = triple_of(mask, cin.in_face);
            int tout = triple_of(mask, cout.in_face);
            if (triple_of(mask, cin.out_face) != tab[tin] ||
                triple_of(mask, cout.out_face) != tab[tout])
                throw std::runtime_error("restriction of a permitted coloring is not permitted");
            M.at(row, tin) += 1;
            M.at(row, tout) -= 1;
        }
    }
    return M;
}

}  // namespace tetra
