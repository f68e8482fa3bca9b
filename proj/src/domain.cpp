#include "conelab/domain.hpp"

namespace conelab {

std::string to_string(DomainCase c) {
    switch (c) {
        case DomainCase::FINITE_TRIVIAL: return "FINITE_TRIVIAL";
        case DomainCase::FINITE_INVOLUTION: return "FINITE_INVOLUTION";
        case DomainCase::CYCLIC: return "CYCLIC";
        case DomainCase::DIHEDRAL: return "DIHEDRAL";
    }
    return "?";
}

namespace {

void check_seed(const Cone2& c, const Vec2& seed) {
    Ray r(seed);
    if (!c.contains(r, true)) throw data_error("seed on boundary: " + seed.str() +
                                               " is not strictly inside " + c.str());
}

void check_profile(const GroupProfile& profile, const Cone2& c) {
    if (profile.plus_generator && !is_cone_automorphism(*profile.plus_generator, c))
        throw data_error("profile/cone mismatch: plus generator does not preserve " + c.str());
    if (profile.minus_rep && !is_cone_automorphism(*profile.minus_rep, c))
        throw data_error("profile/cone mismatch: minus representative does not preserve " +
                         c.str());
}

}  // namespace

DomainResult build_domain(const GroupProfile& profile, const Cone2& c, const Vec2& seed) {
    check_seed(c, seed);
    check_profile(profile, c);

    switch (profile.kind) {
        case GroupKind::TRIVIAL:
            return DomainResult{c, DomainCase::FINITE_TRIVIAL, seed, {}, {}, {}};
        case GroupKind::ORDER_TWO: {
            const LatMat& tau = *profile.minus_rep;
            Vec2 y = seed + tau.apply(seed);
            return DomainResult{Cone2(c.r1(), Ray(y)), DomainCase::FINITE_INVOLUTION, seed, y,
                                {}, {}};
        }
        case GroupKind::INFINITE_CYCLIC: {
            const LatMat& f = *profile.plus_generator;
            return DomainResult{Cone2(Ray(seed), Ray(f.apply(seed))), DomainCase::CYCLIC, seed,
                                {}, {}, {}};
        }
        case GroupKind::INFINITE_DIHEDRAL: {
            const LatMat& f = *profile.plus_generator;
            const LatMat& tau = *profile.minus_rep;
            Vec2 z1 = seed + tau.apply(seed);
            Vec2 z2 = z1 + f.apply(z1);
            return DomainResult{Cone2(Ray(z1), Ray(z2)), DomainCase::DIHEDRAL, seed, {}, z1, z2};
        }
    }
    throw usage_error("unreachable");
}

DomainResult weak_domain_finite(const Cone2& c, const std::optional<LatMat>& invol,
                                const Vec2& seed) {
    check_seed(c, seed);
    if (!seed.is_integral()) throw data_error("weak domain seed must be integral");
    if (!invol) return DomainResult{c, DomainCase::FINITE_TRIVIAL, seed, {}, {}, {}};
    if (invol->det() != -1 || !(*invol * *invol).is_identity())
        throw data_error("weak domain element must be a det -1 involution");
    GroupProfile p;
    p.kind = GroupKind::ORDER_TWO;
    p.minus_rep = invol;
    return build_domain(p, c, seed);
}

std::string domain_report(const DomainResult& dr) {
    std::string out;
    out += "case = " + to_string(dr.kind) + "\n";
    out += "pi = " + dr.pi.str() + "\n";
    out += "seed = " + dr.seed.str() + "\n";
    if (dr.y) out += "y = " + Ray(*dr.y).str() + "\n";
    if (dr.z1) out += "z1 = " + Ray(*dr.z1).str() + "\n";
    if (dr.z2) out += "z2 = " + Ray(*dr.z2).str() + "\n";
    return out;
}

}  // namespace conelab
