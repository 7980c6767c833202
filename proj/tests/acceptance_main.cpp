#include "hfmap/acceptance.hpp"

#include <iostream>

int main() {
    const auto results = hfmap::run_acceptance();
    std::cout << hfmap::format_results(results);
    const bool ok = hfmap::all_passed(results);
    std::cout << (ok ? "all acceptance criteria passed\n" : "acceptance FAILED\n");
    return ok ? 0 : 1;
}
