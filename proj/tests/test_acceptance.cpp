// Acceptance suite: runs every criterion at zero tolerance and prints one
// pass/fail line per criterion. Exit status is nonzero when any fails.
#include <iostream>

#include "motives/selftest.hpp"

int main() {
    try {
        const auto results = motives::run_acceptance(std::thread::hardware_concurrency());
        return motives::print_acceptance(std::cout, results);
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 2;
    }
}
