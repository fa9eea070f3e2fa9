// Computes S(pat_132) with both engines and checks the antipode axiom.
#include <iostream>

#include "phc/phc.hpp"

int main() {
    using phc::Permutation;
    const Permutation pi{1, 3, 2};

    std::cout << "factors of " << pi.to_string() << ":";
    for (const auto& f : pi.decompose()) std::cout << " " << f.to_string();
    std::cout << "\n";

    std::cout << "takeuchi:    " << phc::antipode_takeuchi(pi).to_string() << "\n";
    std::cout << "interlacing: " << phc::antipode_interlacing(pi).to_string() << "\n";
    std::cout << "axiom holds: " << std::boolalpha
              << phc::verify_antipode_axiom(pi, phc::AntipodeMethod::interlacing) << "\n";
}
