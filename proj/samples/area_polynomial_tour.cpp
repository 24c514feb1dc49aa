// Walks the ACE example end to end: drawing order, parameterization, area
// polynomial, canonical Monsky pair, and the mod 2 and equidissection checks.

#include <iostream>

#include "monsky/monsky.hpp"

using namespace monsky;

int main() {
    ConstrainedTriangulation ct = corpus::ace();
    require_valid(ct);

    DrawingOrder order = find_drawing_order(ct);
    std::cout << "drawing order:";
    for (std::size_t i = 0; i < order.sequence.size(); ++i)
        std::cout << " " << order.sequence[i] << "(alpha " << order.alpha[i] << ")";
    std::cout << "\ndimension: " << order.dimension() << "\n";

    Parameterization par = build_parameterization(ct, order, true);
    for (const auto &v : ct.interior_vertices())
        std::cout << v << " = (" << par.coords.at(v).x.to_string() << ", " << par.coords.at(v).y.to_string() << ")\n";

    AreaSystem sys = area_system(ct, par);
    for (std::size_t j = 0; j < sys.living.size(); ++j)
        std::cout << "area " << sys.living[j] << " = " << sys.W[j].to_string() << "\n";

    AreaPolynomial ap = area_polynomial(ct);
    std::cout << "p = " << ap.p.to_string() << " (degree " << ap.d << ")\n";

    MonskyPair mp = canonical_monsky(ap);
    std::cout << "f = " << mp.f.to_string() << "\nf~ = " << mp.f_tilde.to_string() << "\n";
    std::cout << "p = sigma^d mod 2: " << (congruent_sigma_mod2(ap.p, ap.d) ? "yes" : "no") << "\n";
    std::cout << "2f(W) = 1: " << (verify_monsky_identity(mp.f, sys) ? "yes" : "no") << "\n";

    auto eq = equidissection_obstruction(ap.p);
    std::cout << "p(1,...,1) = " << to_string(eq.p_at_ones) << ", equal areas reachable: "
              << (eq.deformable_to_equal_areas ? "not excluded" : "no") << "\n";

    // one concrete drawing, and p vanishing on its areas
    Drawing d = sample_generic_drawing(ct, par, 42);
    auto areas = living_areas(ct, d.points);
    std::cout << "sample areas:";
    for (const auto &a : areas) std::cout << " " << to_string(a);
    std::cout << "\np at the sample: " << to_string(ap.p.evaluate(areas)) << "\n";
    return ap.p.evaluate(areas) == 0 ? 0 : 1;
}
