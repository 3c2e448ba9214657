// Certify that the quarter turn glues two tori with c-distance at least one
// for the identity class, and find the least Anosov power for a d(K) = 2 class.
#include <iostream>

#include "slopecert/anosov.hpp"
#include "slopecert/certify.hpp"
#include "slopecert/farey.hpp"

int main() {
    using namespace slopecert;

    Slope a = Slope::parse("2/5"), b = Slope::parse("-3/7");
    std::cout << "d(" << a << ", " << b << ") = " << distance(a, b) << "\n";
    for (const auto& s : geodesic(a, b)) std::cout << "  " << s << "\n";

    UnimodularZ quarter(0, 1, -1, 0);
    auto cert = c_distance(quarter, {ClassMap::external(UnimodularQ::identity())}, 50);
    const auto& r = cert.per_class.front().result;
    std::cout << "c-distance lower bound " << cert.c_distance_lower_bound << " (" << to_string(r.criterion)
              << "), smallest displacement seen " << r.empirical_min_displacement << " at " << r.empirical_witness << "\n";

    UnimodularZ sigma(2, 1, 1, 1);
    ClassMap k = ClassMap::external(UnimodularQ(Rational(1, 2), 0, 0, 2));
    auto rep = power_bound(sigma, UnimodularZ::identity(), {k});
    std::cout << "least power N = " << rep.overall_n << "\n";
}
