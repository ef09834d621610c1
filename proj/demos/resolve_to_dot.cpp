// Builds the resolution dual graph of the (2;7) cusp and prints it as DOT.
#include <iostream>

#include "cuspcalc/graph_io.hpp"
#include "cuspcalc/resolution.hpp"

int main() {
    using namespace cuspcalc;
    const auto res = resolution_graph(CharacteristicSequence::parse("(2;7)"));
    for (const auto& c : res.clusters)
        std::cout << "// A = " << c.a.str() << ", B = " << c.b.str() << ", o = " << c.o << "\n";
    std::cout << to_dot(res.assembled, "cusp_2_7");
    return 0;
}
