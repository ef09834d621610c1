// Walks through the basic chain identities on a small example.
#include <iostream>

#include "cuspcalc/linear_chain.hpp"

int main() {
    using namespace cuspcalc;
    const LinearChain a{3, 2, 2};
    std::cout << "A      = " << a.str() << "\n";
    std::cout << "d(A)   = " << discriminant(a) << "\n";
    std::cout << "e(A)   = " << to_string(inductance(a)) << "\n";
    std::cout << "A*     = " << adjoint(a).str() << "\n";
    std::cout << "A**    = " << adjoint(adjoint(a)).str() << "\n";
    std::cout << "A x [2] = " << star(a, LinearChain{2}).str() << "\n";
    std::cout << "e -> A  = " << chain_from_inductance(inductance(a)).str() << "\n";
    return 0;
}
