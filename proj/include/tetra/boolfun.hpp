#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tetra {

// Boolean function of three bits; bit at index 4x+2y+z holds f(x,y,z).
struct TruthTable3 {
    std::uint8_t bits = 0;
    friend bool operator==(TruthTable3, TruthTable3) = default;
};

inline int eval(TruthTable3 tt, int x, int y, int z) {
    return (tt.bits >> (4 * x + 2 * y + z)) & 1;
}

// GF(2) polynomial, degree at most one in each of x,y,z.
// Coefficient bit index = 4*[x present] + 2*[y present] + [z present].
struct AnfPoly {
    std::uint8_t coeffs = 0;
    friend bool operator==(AnfPoly, AnfPoly) = default;
};

AnfPoly anf_from_tt(TruthTable3 tt);
TruthTable3 tt_from_anf(AnfPoly p);

struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t pos_);
};

// Grammar: "+"-separated terms; a term is "0", "1", or a subset of {x,y,z}
// as juxtaposed letters in any order. Whitespace ignored, monomials cancel mod 2.
AnfPoly parse_poly(std::string_view s);

// Canonical form, monomial order xyz, xy, xz, yz, x, y, z, 1; "0" when empty.
std::string print_poly(AnfPoly p);

}  // namespace tetra
