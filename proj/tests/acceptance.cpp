// Acceptance suite: one PASS/FAIL line per criterion for the F4 engine.
#include <chrono>
#include <iostream>

#include "weylchar/characters.hpp"
#include "weylchar/verify.hpp"

int main() {
    using namespace weylchar;
    const auto start = std::chrono::steady_clock::now();
    const Algebra f4(builtin_algebra("F4"));
    const auto results = verify::run_f4(f4);
    int failed = 0;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        if (!r.passed) ++failed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  AC" << k + 1 << " " << r.name << ": " << r.detail << "\n";
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed in "
              << elapsed.count() << " s\n";
    return failed == 0 ? 0 : 1;
}
