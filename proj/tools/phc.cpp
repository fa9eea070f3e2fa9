#include <cstdlib>
#include <iostream>
#include <string>

#include "phc_cli.hpp"

int main(int argc, char** argv) {
    unsigned threads = 0;
    if (const char* env = std::getenv("PHC_THREADS")) {
        try {
            threads = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "error: PHC_THREADS must be a non-negative integer\n";
            return phc::cli::exit_usage;
        }
    }
    return phc::cli::run(argc, argv, std::cout, std::cerr, threads);
}
