#include "tetra/boolfun.hpp"

namespace tetra {

// 3-variable Moebius transform over GF(2); an involution, so it is both
// directions of the TT <-> ANF correspondence.
static std::uint8_t mobius(std::uint8_t b) {
    b ^= (b & 0x55) << 1;  // z
    b ^= (b & 0x33) << 2;  // y
    b ^= static_cast<std::uint8_t>((b & 0x0F) << 4);  // x
    return b;
}

AnfPoly anf_from_tt(TruthTable3 tt) { return {mobius(tt.bits)}; }
TruthTable3 tt_from_anf(AnfPoly p) { return {mobius(p.coeffs)}; }

parse_error::parse_error(const std::string& msg, std::size_t pos_)
    : std::runtime_error(msg + " at position " + std::to_string(pos_)), pos(pos_) {}

AnfPoly parse_poly(std::string_view s) {
    std::uint8_t coeffs = 0;
    std::size_t i = 0;
    bool any_term = false;
    while (true) {
        // one term
        std::size_t term_start = i;
        int vars = 0;       // bitmask 4=x 2=y 1=z
        int constant = -1;  // 0 or 1 if the term is a constant
        bool term_empty = true;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c == ' ' || c == '\t') continue;
            if (c == '+') break;
            int v;
            switch (c) {
                case 'x': v = 4; break;
                case 'y': v = 2; break;
                case 'z': v = 1; break;
                case '0':
                case '1':
                    if (!term_empty) throw parse_error("constant inside monomial", i);
                    constant = c - '0';
                    term_empty = false;
                    continue;
                default: throw parse_error(std::string("unknown character '") + c + "'", i);
            }
            if (constant >= 0) throw parse_error("letter after constant", i);
            if (vars & v) throw parse_error("repeated variable in monomial", i);
            vars |= v;
            term_empty = false;
        }
        if (term_empty) throw parse_error("empty term", term_start);
        any_term = true;
        if (constant == 1)
            coeffs ^= 1;
        else if (constant < 0)
            coeffs ^= static_cast<std::uint8_t>(1u << vars);
        if (i >= s.size()) break;
        ++i;  // skip '+'
    }
    if (!any_term) throw parse_error("empty input", 0);
    return {coeffs};
}

std::string print_poly(AnfPoly p) {
    static constexpr int order[8] = {7, 6, 5, 3, 4, 2, 1, 0};
    static constexpr const char* names[8] = {"1", "z", "y", "yz", "x", "xz", "xy", "xyz"};
    std::string out;
    for (int idx : order) {
        if (!(p.coeffs >> idx & 1)) continue;
        if (!out.empty()) out += '+';
        out += names[idx];
    }
    return out.empty() ? "0" : out;
}

}  // namespace tetra
