#pragma once

#include "conelab/cone.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace conelab {

// 2x2 matrix over Q(sqrt(d)), the action written in a chosen ray basis.
struct QMat {
    QF m00, m01, m10, m11;

    static QMat diagonal(const QF& a, const QF& b) { return {a, QF(0), QF(0), b}; }
    QMat operator*(const QMat& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
};

// A lattice matrix conjugated into the basis given by two rays (B^-1 M B
// with B = [b1 b2] as columns).
QMat in_ray_basis(const LatMat& m, const Ray& b1, const Ray& b2);

// Symmetric n-form on the rank-2 space, determined by the values on the
// monomials x1^m x2^(n-m); coeffs[m] is that value.
struct SymForm {
    int n = 0;
    std::vector<QF> coeffs;  // size n + 1

    static SymForm zero(int n) { return {n, std::vector<QF>(n + 1, QF(0))}; }
};

// Exponents m whose intersection numbers x1^m x2^(n-m) are forced to vanish
// by an infinite-order action: all m with 2m != n.
std::set<int> forced_vanishing(int n, const QF& alpha);

// Coefficients of the pulled-back form F(T x1, ..., T x2) by full
// multinomial expansion.
std::vector<QF> pullback_coeffs(const SymForm& f, const QMat& t);

struct FormInvarianceReport {
    bool invariant = false;
    std::vector<int> mismatched;             // exponents where F.T != F
    std::vector<int> vanishing_violations;   // nonzero coefficients with 2m != n
};

// T is the action in the basis the form is written in. When hyperbolic is
// set, the basis is the eigenray basis and the forced-vanishing pattern is
// reported as well.
FormInvarianceReport check_form_invariance(const SymForm& f, const QMat& t, bool hyperbolic);

struct Cn1Result {
    bool consistent = false;
    std::string witness;  // contradiction witness when inconsistent
};

// An f-invariant functional on the eigenray basis must vanish identically.
Cn1Result cn1_must_vanish(const QF& phi1, const QF& phi2, const QF& alpha);

enum class C2Verdict { CONTRADICTION, NO_OBSTRUCTION };

struct C2Result {
    C2Verdict verdict;
    std::string branch;  // which exponent pattern carries the contradiction
};

C2Result c2_obstruction(int n, const std::optional<bool>& c2_positive, const QF& alpha);

// For an even-degree form with all off-middle coefficients zero: positivity
// of the ample self-intersection (x1+x2)^n.
bool middle_positivity(const SymForm& f);

}  // namespace conelab
