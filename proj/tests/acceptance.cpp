#include <cstdlib>
#include <iostream>
#include <string>

#include "skewdet/acceptance.hpp"

int main(int argc, char** argv) {
    skewdet::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) opts.only.push_back(std::atoi(argv[i]));
    bool ok = true;
    skewdet::run_acceptance(opts, [&](const skewdet::CriterionResult& r) {
        ok = ok && r.pass;
        std::cout << skewdet::format_result(r) << std::endl;
    });
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
