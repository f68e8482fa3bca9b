#pragma once

#include "conelab/domain.hpp"

#include <string>
#include <vector>

namespace conelab {

struct Tile {
    long k = 0;
    bool flip = false;
    Cone2 cone;

    std::string word() const {
        return "k=" + std::to_string(k) + " flip=" + (flip ? "true" : "false");
    }
};

struct TilingViolation {
    std::string check;
    std::string detail;

    bool operator<(const TilingViolation& o) const {
        return check != o.check ? check < o.check : detail < o.detail;
    }
    bool operator==(const TilingViolation& o) const {
        return check == o.check && detail == o.detail;
    }
};

struct TilingReport {
    int depth = 0;
    std::vector<Tile> tiles;          // sorted angularly from r1 to r2
    std::vector<TilingViolation> violations;  // sorted, deterministic
    bool pass = false;
};

// Group translates f^k Pi and f^k tau Pi for |k| <= depth (or the finite set
// of translates for the finite kinds).
std::vector<Tile> enumerate_tiles(const DomainResult& dr, const GroupProfile& profile, int depth);

// Pairwise interior-disjointness kernel over the tile list. The parallel
// variant uses OpenMP over tile pairs; results are sorted and identical to
// the serial reference.
std::vector<TilingViolation> disjoint_interior_violations(const std::vector<Tile>& tiles,
                                                          bool parallel);

TilingReport verify_tiling(const DomainResult& dr, const GroupProfile& profile, const Cone2& c,
                           int depth, bool parallel = true);

std::string tiling_report_text(const TilingReport& report);

struct Word {
    long k = 0;
    bool flip = false;

    bool operator==(const Word& o) const { return k == o.k && flip == o.flip; }
    std::string str() const {
        return "(k=" + std::to_string(k) + ", flip=" + (flip ? "true" : "false") + ")";
    }
};

// Tile containing p, as the group word (k, flip) with p in f^k tau^flip Pi.
// Points on a tile edge report the lexicographically smallest word.
Word locate(const DomainResult& dr, const GroupProfile& profile, const Ray& p);

}  // namespace conelab
