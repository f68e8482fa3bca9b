#pragma once

#include "conelab/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conelab {

enum class GroupKind { TRIVIAL, ORDER_TWO, INFINITE_CYCLIC, INFINITE_DIHEDRAL };

std::string to_string(GroupKind k);

struct GroupProfile {
    GroupKind kind = GroupKind::TRIVIAL;
    std::optional<LatMat> plus_generator;  // generator of the det +1 part, alpha > 1
    std::optional<LatMat> minus_rep;       // det -1 coset representative, an involution
    std::optional<QF> alpha;               // eigenvalue of plus_generator on r2 of the cone

    bool is_infinite() const {
        return kind == GroupKind::INFINITE_CYCLIC || kind == GroupKind::INFINITE_DIHEDRAL;
    }
};

bool is_cone_automorphism(const LatMat& m, const Cone2& c);

std::pair<std::vector<LatMat>, std::vector<LatMat>> split_by_det(const std::vector<LatMat>& gens);

// Eigenvalue of a cone-preserving det +1 element on the r2 boundary ray.
QF plus_eigenvalue(const LatMat& m, const Cone2& c, long d);

// Generator of the cyclic group spanned by the given det +1 cone-preserving
// elements, found by Euclid on the eigenvalue exponents. Returns the identity
// for an empty or all-identity input.
LatMat fundamental_plus_generator(const std::vector<LatMat>& plus_elements, const Cone2& c,
                                  long d);

GroupProfile classify(const std::vector<LatMat>& gens, const Cone2& c, long d);

// True if M generates an infinite subgroup of GL(2,Z) on its own.
bool has_infinite_order(const LatMat& m);

// Desk-scale test for infiniteness of the generated group: some det +1
// generator, or some product of two det -1 generators, has infinite order.
bool generates_infinite_group(const std::vector<LatMat>& gens);

// Deterministic report, keys sorted, canonical encodings.
std::string profile_report(const GroupProfile& p);

}  // namespace conelab
