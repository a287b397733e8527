// Resolution timing probe: resolves one catalog group to a given degree and
// prints per-degree betti numbers with cumulative wall time.
#include "coh2/resolve.hpp"

#include <chrono>
#include <cstdio>
#include <string>

int main(int argc, char** argv) {
    std::string id = argc > 1 ? argv[1] : "C2xC2xC2xC2";
    int n = argc > 2 ? std::atoi(argv[2]) : 16;

    const coh2::Group& g = coh2::catalog_group(id);
    coh2::ResolutionSolver solver(g);
    auto start = std::chrono::steady_clock::now();
    for (int t = 1; t <= n; ++t) {
        solver.extend_to(t);
        auto now = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(now - start).count();
        std::printf("%-14s t=%-3d betti=%-6d %8.2fs\n", id.c_str(), t, solver.betti(t), secs);
        std::fflush(stdout);
    }
    return 0;
}
