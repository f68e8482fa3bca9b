#include "conelab/group.hpp"

#include <algorithm>

namespace conelab {

std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::TRIVIAL: return "TRIVIAL";
        case GroupKind::ORDER_TWO: return "ORDER_TWO";
        case GroupKind::INFINITE_CYCLIC: return "INFINITE_CYCLIC";
        case GroupKind::INFINITE_DIHEDRAL: return "INFINITE_DIHEDRAL";
    }
    return "?";
}

bool is_cone_automorphism(const LatMat& m, const Cone2& c) {
    return apply_cone(m, c) == c;
}

std::pair<std::vector<LatMat>, std::vector<LatMat>> split_by_det(const std::vector<LatMat>& gens) {
    std::vector<LatMat> plus, minus;
    for (const auto& g : gens) {
        (g.det() == 1 ? plus : minus).push_back(g);
    }
    return {plus, minus};
}

QF plus_eigenvalue(const LatMat& m, const Cone2& c, long d) {
    if (m.is_identity()) return QF(1);
    auto ed = eigen_data(m, d);
    if (!ed) throw data_error("element " + m.str() + " has complex eigenvalues");
    // eigenrays carry an arbitrary sign choice; compare as lines
    auto same_line = [](const Ray& a, const Ray& b) { return a == b || a == b.opposite(); };
    if (!((same_line(ed->ray1, c.r1()) && same_line(ed->ray2, c.r2())) ||
          (same_line(ed->ray1, c.r2()) && same_line(ed->ray2, c.r1()))))
        throw data_error("ray mismatch: eigenrays of " + m.str() +
                         " are not the boundary rays of " + c.str());
    return same_line(ed->ray1, c.r2()) ? ed->val1 : ed->val2;
}

LatMat fundamental_plus_generator(const std::vector<LatMat>& plus_elements, const Cone2& c,
                                  long d) {
    struct Elem {
        LatMat m;
        QF alpha;  // > 1
    };
    std::vector<Elem> elems;
    for (const auto& g : plus_elements) {
        if (g.det() != 1) throw usage_error("det -1 element passed to plus-part Euclid");
        if (g.is_identity()) continue;
        if (!is_cone_automorphism(g, c))
            throw data_error("element " + g.str() + " does not preserve " + c.str());
        QF alpha = plus_eigenvalue(g, c, d);
        if (alpha == QF(1))
            throw data_error("non-hyperbolic generator: " + g.str() +
                             " has eigenvalue 1 but is not the identity");
        if (alpha.sign() <= 0) throw data_error("cone-preserving element with negative eigenvalue");
        if (alpha < QF(1)) {
            elems.push_back({g.inverse(), alpha.inv()});
        } else {
            elems.push_back({g, alpha});
        }
    }
    if (elems.empty()) return LatMat::identity();

    // Euclid on exponents: reduce the largest eigenvalue by the smallest
    // until a single generator remains. Terminates since the eigenvalue set
    // generates a discrete subgroup of (0, infinity).
    while (elems.size() > 1) {
        std::sort(elems.begin(), elems.end(),
                  [](const Elem& a, const Elem& b) { return a.alpha < b.alpha; });
        Elem small = elems.front();
        Elem big = elems.back();
        elems.pop_back();
        LatMat inv_small = small.m.inverse();
        QF inv_alpha = small.alpha.inv();
        while (big.alpha >= small.alpha) {
            big.m = big.m * inv_small;
            big.alpha *= inv_alpha;
        }
        // now 1 <= big.alpha < small.alpha
        if (big.alpha == QF(1)) {
            if (!big.m.is_identity())
                throw data_error("non-hyperbolic generator produced during reduction");
        } else {
            elems.push_back(big);
        }
    }
    return elems.front().m;
}

GroupProfile classify(const std::vector<LatMat>& gens, const Cone2& c, long d) {
    for (const auto& g : gens) {
        if (!is_cone_automorphism(g, c))
            throw data_error("generator " + g.str() + " does not preserve " + c.str());
    }
    auto [plus, minus] = split_by_det(gens);

    for (const auto& m : minus) {
        if (!(m * m).is_identity())
            throw data_error("det -1 cone-preserving element " + m.str() +
                             " is not an involution; input corrupt");
    }

    // Products of pairs of det -1 generators land in the plus part and may
    // generate it even when no det +1 generator is given.
    std::vector<LatMat> candidates = plus;
    for (size_t i = 0; i < minus.size(); ++i)
        for (size_t j = i + 1; j < minus.size(); ++j) candidates.push_back(minus[i] * minus[j]);

    LatMat g = fundamental_plus_generator(candidates, c, d);

    GroupProfile p;
    if (g.is_identity()) {
        if (minus.empty()) {
            p.kind = GroupKind::TRIVIAL;
        } else {
            p.kind = GroupKind::ORDER_TWO;
            p.minus_rep = minus.front();
        }
    } else {
        p.plus_generator = g;
        p.alpha = plus_eigenvalue(g, c, d);
        if (minus.empty()) {
            p.kind = GroupKind::INFINITE_CYCLIC;
        } else {
            p.kind = GroupKind::INFINITE_DIHEDRAL;
            p.minus_rep = minus.front();
        }
    }
    return p;
}

bool has_infinite_order(const LatMat& m) {
    Int t = m.trace();
    if (m.det() == 1) {
        if (t > 2 || t < -2) return true;
        if (t == 2) return !m.is_identity();
        if (t == -2) return !(-m).is_identity();
        return false;  // elliptic, finite order
    }
    // det -1: eigenvalues lambda, -1/lambda; M^2 has trace t^2 + 2
    return t != 0;
}

bool generates_infinite_group(const std::vector<LatMat>& gens) {
    auto [plus, minus] = split_by_det(gens);
    for (const auto& g : plus)
        if (has_infinite_order(g)) return true;
    for (const auto& g : minus)
        if (has_infinite_order(g)) return true;
    for (size_t i = 0; i < minus.size(); ++i)
        for (size_t j = i + 1; j < minus.size(); ++j)
            if (has_infinite_order(minus[i] * minus[j])) return true;
    return false;
}

std::string profile_report(const GroupProfile& p) {
    std::string out;
    out += "alpha = " + (p.alpha ? p.alpha->str() : "-") + "\n";
    out += "kind = " + to_string(p.kind) + "\n";
    out += "minus_rep = " + (p.minus_rep ? p.minus_rep->str() : "-") + "\n";
    out += "plus_generator = " + (p.plus_generator ? p.plus_generator->str() : "-") + "\n";
    return out;
}

}  // namespace conelab
