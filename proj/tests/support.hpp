#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here stays off the library's implementation paths it is used to check.

#include "conelab/group.hpp"
#include "conelab/tiling.hpp"

#include <random>
#include <vector>

namespace testsupport {

using namespace conelab;

// --- bundled hyperbolic action fixtures -----------------------------------

inline LatMat tau1() { return LatMat(-1, 0, 6, 1); }
inline LatMat tau2() { return LatMat(1, 6, 0, -1); }
inline LatMat f_gen() { return tau1() * tau2(); }  // [-1,-6,6,35]

inline long field_d() { return 2; }

inline QF alpha_unit() { return QF(Rat(17), Rat(12), 2); }  // 17 + 12*sqrt(2)

inline Cone2 mov_cone() {
    return Cone2(Ray::parse("(-1,3+2*sqrt(2))", 2), Ray::parse("(3+2*sqrt(2),-1)", 2));
}

inline Cone2 nef_cone() {
    return Cone2(Ray(QF(1), QF(0)), Ray(QF(0), QF(1)));
}

// --- random generators -----------------------------------------------------

inline Rat random_rat(std::mt19937& rng, int span = 20) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline QF random_qf(std::mt19937& rng, long d, int span = 20) {
    return QF(random_rat(rng, span), random_rat(rng, span), d);
}

// Random unimodular matrix as a short product of elementary shears/swaps.
inline LatMat random_unimodular(std::mt19937& rng, int words = 6, int shear = 4) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> amount(-shear, shear);
    LatMat m = LatMat::identity();
    for (int i = 0; i < words; ++i) {
        switch (pick(rng)) {
            case 0: m = m * LatMat(1, amount(rng), 0, 1); break;
            case 1: m = m * LatMat(1, 0, amount(rng), 1); break;
            default: m = m * LatMat(0, 1, 1, 0); break;
        }
    }
    return m;
}

// Random det -1 involution: a conjugated reflection.
inline LatMat random_involution(std::mt19937& rng) {
    LatMat p = random_unimodular(rng);
    std::uniform_int_distribution<int> pick(0, 1);
    LatMat s = pick(rng) == 0 ? LatMat(0, 1, 1, 0) : LatMat(1, 0, 0, -1);
    return p * s * p.inverse();
}

// --- independent oracles ----------------------------------------------------

// Brute-force interior intersection test for two salient cones sharing a
// salient hull: the interiors meet iff some open sector between consecutive
// boundary rays lies in both, witnessed by the midpoint ray of the sector.
inline bool interiors_intersect_bruteforce(const Cone2& a, const Cone2& b) {
    std::vector<Ray> rays = {a.r1(), a.r2(), b.r1(), b.r2()};
    // sort angularly
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (cross(rays[i], rays[j]).sign() < 0) std::swap(rays[i], rays[j]);
    for (size_t i = 0; i + 1 < rays.size(); ++i) {
        if (rays[i] == rays[i + 1]) continue;
        Vec2 mid = rays[i].vec() + rays[i + 1].vec();
        Ray m(mid);
        if (a.contains(m, true) && b.contains(m, true)) return true;
    }
    return false;
}

// Exact nullspace of an (n x n) QF matrix by Gaussian elimination.
// Returns a basis of column vectors.
inline std::vector<std::vector<QF>> nullspace(std::vector<std::vector<QF>> m) {
    const size_t n = m.size();
    std::vector<long> pivot_col_of_row(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        QF inv = m[row][col].inv();
        for (size_t c = 0; c < n; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            QF factor = m[r][col];
            for (size_t c = 0; c < n; ++c) m[r][c] -= factor * m[row][c];
        }
        pivot_col_of_row[row] = static_cast<long>(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < row; ++r) is_pivot[pivot_col_of_row[r]] = true;

    std::vector<std::vector<QF>> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<QF> v(n, QF(0));
        v[free_col] = QF(1);
        for (size_t r = 0; r < row; ++r) {
            v[pivot_col_of_row[r]] = -m[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace testsupport
