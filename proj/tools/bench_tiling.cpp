// Compares the serial and OpenMP variants of the pairwise tile-interior
// disjointness kernel on deep tilings of the bundled hyperbolic action.

#include "conelab/tiling.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace conelab;

namespace {

double run_ms(const std::vector<Tile>& tiles, bool parallel, size_t& out_violations) {
    auto start = std::chrono::steady_clock::now();
    auto v = disjoint_interior_violations(tiles, parallel);
    auto end = std::chrono::steady_clock::now();
    out_violations = v.size();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int depth = argc > 1 ? std::atoi(argv[1]) : 400;

    LatMat f(-1, -6, 6, 35);
    LatMat tau(-1, 0, 6, 1);
    long d = 2;
    Cone2 mov(Ray::parse("(-1,3+2*sqrt(2))", d), Ray::parse("(3+2*sqrt(2),-1)", d));
    GroupProfile profile = classify({tau, LatMat(1, 6, 0, -1)}, mov, d);
    auto dr = build_domain(profile, mov, Vec2(QF(1), QF(1)));
    auto tiles = enumerate_tiles(dr, profile, depth);
    std::printf("depth %d: %zu tiles, %zu pairs\n", depth, tiles.size(),
                tiles.size() * (tiles.size() - 1) / 2);

    size_t vs, vp;
    double serial = run_ms(tiles, false, vs);
    double parallel = run_ms(tiles, true, vp);
    std::printf("serial:   %10.2f ms (%zu violations)\n", serial, vs);
    std::printf("parallel: %10.2f ms (%zu violations)\n", parallel, vp);
    std::printf("speedup:  %10.2fx\n", serial / parallel);
    if (vs != vp) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    return 0;
}
