// Monsky's colouring on rational drawings: normalize, colour by the 2-adic
// norm, and find a triangle coloured A, B, C. Its area always has an even
// denominator.

#include <iostream>

#include "monsky/monsky.hpp"

using namespace monsky;

int main() {
    ConstrainedTriangulation ct = diagonal_case(3);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Drawing d = sample_generic_drawing(ct, seed);
        RainbowResult rr = find_rainbow_triangle(ct, d.points);
        std::cout << "seed " << seed << ": colours";
        for (const auto &v : ct.vertices) std::cout << " " << v << "=" << to_char(rr.colors.at(v));
        std::cout << "; rainbow " << rr.triangle << " of " << rr.count << ", area " << to_string(rr.area)
                  << ", 2-adic valuation " << *two_adic_valuation(rr.area) << "\n";
        if (rr.count % 2 == 0 || *two_adic_valuation(rr.area) >= 0) return 1;
    }
    return 0;
}
