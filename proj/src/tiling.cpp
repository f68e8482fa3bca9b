#include "conelab/tiling.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conelab {

namespace {

// Total order on rays inside a salient cone: a before b iff cross(a,b) > 0.
bool ray_less(const Ray& a, const Ray& b) {
    return cross(a, b).sign() > 0;
}

void check_kinds(const DomainResult& dr, const GroupProfile& profile) {
    auto ok = [&] {
        switch (profile.kind) {
            case GroupKind::TRIVIAL: return dr.kind == DomainCase::FINITE_TRIVIAL;
            case GroupKind::ORDER_TWO: return dr.kind == DomainCase::FINITE_INVOLUTION;
            case GroupKind::INFINITE_CYCLIC: return dr.kind == DomainCase::CYCLIC;
            case GroupKind::INFINITE_DIHEDRAL: return dr.kind == DomainCase::DIHEDRAL;
        }
        return false;
    }();
    if (!ok) throw usage_error("domain result does not match the group profile");
}

}  // namespace

std::vector<Tile> enumerate_tiles(const DomainResult& dr, const GroupProfile& profile,
                                  int depth) {
    check_kinds(dr, profile);
    if (depth < 0) throw usage_error("depth must be >= 0");

    std::vector<Tile> tiles;
    switch (profile.kind) {
        case GroupKind::TRIVIAL:
            tiles.push_back({0, false, dr.pi});
            break;
        case GroupKind::ORDER_TWO:
            tiles.push_back({0, false, dr.pi});
            tiles.push_back({0, true, apply_cone(*profile.minus_rep, dr.pi)});
            break;
        case GroupKind::INFINITE_CYCLIC:
        case GroupKind::INFINITE_DIHEDRAL: {
            const LatMat& f = *profile.plus_generator;
            LatMat finv = f.inverse();
            std::vector<Cone2> bases = {dr.pi};
            if (profile.kind == GroupKind::INFINITE_DIHEDRAL)
                bases.push_back(apply_cone(*profile.minus_rep, dr.pi));
            for (size_t b = 0; b < bases.size(); ++b) {
                Cone2 up = bases[b], down = bases[b];
                tiles.push_back({0, b == 1, bases[b]});
                for (int k = 1; k <= depth; ++k) {
                    up = apply_cone(f, up);
                    down = apply_cone(finv, down);
                    tiles.push_back({k, b == 1, up});
                    tiles.push_back({-k, b == 1, down});
                }
            }
            break;
        }
    }
    std::sort(tiles.begin(), tiles.end(),
              [](const Tile& a, const Tile& b) { return ray_less(a.cone.r1(), b.cone.r1()); });
    return tiles;
}

std::vector<TilingViolation> disjoint_interior_violations(const std::vector<Tile>& tiles,
                                                          bool parallel) {
    const long n = static_cast<long>(tiles.size());
    std::vector<TilingViolation> all;
#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<TilingViolation> local;
#pragma omp for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) {
            for (long j = i + 1; j < n; ++j) {
                const Cone2& a = tiles[i].cone;
                const Cone2& b = tiles[j].cone;
                // interiors of angular intervals [lo,hi] meet iff
                // max(lo_a, lo_b) < min(hi_a, hi_b)
                const Ray& lo = ray_less(a.r1(), b.r1()) ? b.r1() : a.r1();
                const Ray& hi = ray_less(a.r2(), b.r2()) ? a.r2() : b.r2();
                if (ray_less(lo, hi)) {
                    local.push_back({"disjoint_interiors",
                                     "tiles (" + tiles[i].word() + ") and (" + tiles[j].word() +
                                         "): overlapping interiors"});
                }
            }
        }
#pragma omp critical
        all.insert(all.end(), local.begin(), local.end());
    }
#else
    (void)parallel;
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            const Cone2& a = tiles[i].cone;
            const Cone2& b = tiles[j].cone;
            const Ray& lo = ray_less(a.r1(), b.r1()) ? b.r1() : a.r1();
            const Ray& hi = ray_less(a.r2(), b.r2()) ? a.r2() : b.r2();
            if (ray_less(lo, hi)) {
                all.push_back({"disjoint_interiors",
                               "tiles (" + tiles[i].word() + ") and (" + tiles[j].word() +
                                   "): overlapping interiors"});
            }
        }
    }
#endif
    std::sort(all.begin(), all.end());
    return all;
}

TilingReport verify_tiling(const DomainResult& dr, const GroupProfile& profile, const Cone2& c,
                           int depth, bool parallel) {
    if (depth < 1) throw usage_error("depth must be >= 1");
    TilingReport report;
    report.depth = depth;
    report.tiles = enumerate_tiles(dr, profile, depth);

    report.violations = disjoint_interior_violations(report.tiles, parallel);

    // adjacency: consecutive translates share exactly one boundary ray
    for (size_t i = 0; i + 1 < report.tiles.size(); ++i) {
        const Tile& a = report.tiles[i];
        const Tile& b = report.tiles[i + 1];
        if (a.cone.r2() != b.cone.r1()) {
            report.violations.push_back({"adjacency", "tiles (" + a.word() + ") and (" +
                                                          b.word() +
                                                          ") do not share a boundary ray"});
        }
    }

    if (profile.is_infinite()) {
        // extreme rays of the union must approach the boundary of C strictly
        // monotonically with the depth
        for (int j = 0; j <= depth; ++j) {
            Ray lo = c.r2(), hi = c.r1();
            bool any = false;
            for (const Tile& t : report.tiles) {
                if (std::abs(t.k) > j) continue;
                any = true;
                if (ray_less(t.cone.r1(), lo)) lo = t.cone.r1();
                if (ray_less(hi, t.cone.r2())) hi = t.cone.r2();
            }
            if (!any) continue;
            if (j > 0) {
                Ray prev_lo = c.r2(), prev_hi = c.r1();
                for (const Tile& t : report.tiles) {
                    if (std::abs(t.k) > j - 1) continue;
                    if (ray_less(t.cone.r1(), prev_lo)) prev_lo = t.cone.r1();
                    if (ray_less(prev_hi, t.cone.r2())) prev_hi = t.cone.r2();
                }
                if (!ray_less(lo, prev_lo))
                    report.violations.push_back(
                        {"convergence", "lower extreme ray not strictly decreasing at depth " +
                                            std::to_string(j)});
                if (!ray_less(prev_hi, hi))
                    report.violations.push_back(
                        {"convergence", "upper extreme ray not strictly increasing at depth " +
                                            std::to_string(j)});
            }
            if (!ray_less(c.r1(), lo) || !ray_less(hi, c.r2()))
                report.violations.push_back(
                    {"convergence",
                     "extreme rays leave the acted-on cone at depth " + std::to_string(j)});
        }
    } else {
        // weak variant: tile overlaps must be confined to a rational ray
        for (size_t i = 0; i + 1 < report.tiles.size(); ++i) {
            const Tile& a = report.tiles[i];
            const Tile& b = report.tiles[i + 1];
            if (a.cone.r2() == b.cone.r1() && !a.cone.r2().is_rational()) {
                report.violations.push_back(
                    {"weak_overlaps", "tiles (" + a.word() + ") and (" + b.word() +
                                          ") overlap in the irrational ray " + a.cone.r2().str()});
            }
        }
    }

    std::sort(report.violations.begin(), report.violations.end());
    report.pass = report.violations.empty();
    return report;
}

std::string tiling_report_text(const TilingReport& report) {
    std::string out;
    out += "depth = " + std::to_string(report.depth) + "\n";
    for (const Tile& t : report.tiles) {
        out += "tile " + t.word() + " rays " + t.cone.r1().str() + " " + t.cone.r2().str() + "\n";
    }
    for (const auto& v : report.violations) out += "violation " + v.check + ": " + v.detail + "\n";
    out += std::string(report.pass ? "PASS" : "FAIL") + ", " + std::to_string(report.tiles.size()) +
           " tiles\n";
    return out;
}

Word locate(const DomainResult& dr, const GroupProfile& profile, const Ray& p) {
    check_kinds(dr, profile);
    constexpr long kMaxSteps = 1000000;

    switch (profile.kind) {
        case GroupKind::TRIVIAL: {
            if (p == dr.pi.r1() || p == dr.pi.r2())
                throw data_error("point on cone boundary: " + p.str());
            if (!dr.pi.contains(p, true))
                throw data_error("point outside the acted-on cone: " + p.str());
            return {0, false};
        }
        case GroupKind::ORDER_TWO: {
            Cone2 c(dr.pi.r1(), apply(*profile.minus_rep, dr.pi.r1()));
            if (p == c.r1() || p == c.r2())
                throw data_error("point on cone boundary: " + p.str());
            if (!c.contains(p, true))
                throw data_error("point outside the acted-on cone: " + p.str());
            return {0, !dr.pi.contains(p, false)};
        }
        case GroupKind::INFINITE_CYCLIC:
        case GroupKind::INFINITE_DIHEDRAL:
            break;
    }

    const LatMat& f = *profile.plus_generator;
    long d = profile.alpha->d();
    auto ed = eigen_data(f, d);
    if (!ed) throw data_error("plus generator has complex eigenvalues");
    // the eigen lines bound the acted-on cone; pick the sector holding the
    // fundamental domain (eigenray signs are arbitrary)
    Ray inside(dr.pi.r1().vec() + dr.pi.r2().vec());
    std::optional<Cone2> sector;
    for (const Ray& a : {ed->ray1, ed->ray1.opposite(), ed->ray2, ed->ray2.opposite()}) {
        for (const Ray& b : {ed->ray1, ed->ray1.opposite(), ed->ray2, ed->ray2.opposite()}) {
            if (cross(a, b).sign() > 0 && cross(a, inside).sign() > 0 &&
                cross(inside, b).sign() > 0) {
                sector.emplace(a, b);
            }
        }
    }
    if (!sector) throw data_error("fundamental domain is not bounded by the eigen lines");
    const Cone2& c = *sector;
    if (p == c.r1() || p == c.r2()) throw data_error("point on cone boundary: " + p.str());
    if (!c.contains(p, true)) throw data_error("point outside the acted-on cone: " + p.str());

    LatMat finv = f.inverse();
    Vec2 cur = p.vec();
    long k = 0;

    if (profile.kind == GroupKind::INFINITE_CYCLIC) {
        const Ray& lo = dr.pi.r1();
        const Ray& hi = dr.pi.r2();
        for (long step = 0;; ++step) {
            if (step > kMaxSteps) throw data_error("point location did not terminate");
            Ray r(cur);
            if (cross(lo, r).sign() <= 0) {
                cur = f.apply(cur);
                --k;
            } else if (cross(hi, r).sign() > 0) {
                cur = finv.apply(cur);
                ++k;
            } else {
                break;  // lo < cur <= hi
            }
        }
        return {k, false};
    }

    // dihedral: bands [f^k z1, f^(k+1) z1), each split at f^k z2
    Ray z1(*dr.z1);
    Ray z2(*dr.z2);
    Ray fz1(f.apply(*dr.z1));
    for (long step = 0;; ++step) {
        if (step > kMaxSteps) throw data_error("point location did not terminate");
        Ray r(cur);
        if (cross(z1, r).sign() < 0) {
            cur = f.apply(cur);
            --k;
        } else if (cross(fz1, r).sign() >= 0) {
            cur = finv.apply(cur);
            ++k;
        } else {
            break;  // z1 <= cur < f z1
        }
    }
    if (cross(Ray(cur), z2).sign() >= 0) return {k, false};
    return {k + 1, true};
}

}  // namespace conelab
