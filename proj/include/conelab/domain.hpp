#pragma once

#include "conelab/group.hpp"

#include <optional>
#include <string>

namespace conelab {

enum class DomainCase { FINITE_TRIVIAL, FINITE_INVOLUTION, CYCLIC, DIHEDRAL };

std::string to_string(DomainCase c);

struct DomainResult {
    Cone2 pi;
    DomainCase kind;
    Vec2 seed;
    std::optional<Vec2> y;        // FINITE_INVOLUTION: the fixed class seed + tau*seed
    std::optional<Vec2> z1, z2;   // DIHEDRAL: z1 = seed + tau*seed, z2 = z1 + f*z1
};

// Fundamental domain construction inside the acted-on cone C:
//   TRIVIAL        -> Pi = C
//   ORDER_TWO      -> Pi = cone(r1(C), y), y = seed + tau*seed
//   INFINITE_CYCLIC-> Pi = cone(seed, f*seed)
//   INFINITE_DIHEDRAL -> Pi = cone(z1, z2)
DomainResult build_domain(const GroupProfile& profile, const Cone2& c, const Vec2& seed);

// Half-cone weak domain for the finite cases, standalone entry point.
// Requires an integral interior seed; invol, when given, must be a det -1
// involution preserving C.
DomainResult weak_domain_finite(const Cone2& c, const std::optional<LatMat>& invol,
                                const Vec2& seed);

std::string domain_report(const DomainResult& dr);

}  // namespace conelab
