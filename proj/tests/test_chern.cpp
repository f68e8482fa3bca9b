#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conelab/chern.hpp"
#include "support.hpp"

using namespace conelab;
using namespace testsupport;

namespace {

// Matrix of the coeff -> pullback_coeffs map, columns indexed by unit forms.
std::vector<std::vector<QF>> pullback_matrix(int n, const QMat& t) {
    std::vector<std::vector<QF>> p(n + 1, std::vector<QF>(n + 1, QF(0)));
    for (int col = 0; col <= n; ++col) {
        SymForm unit = SymForm::zero(n);
        unit.coeffs[col] = QF(1);
        std::vector<QF> image = pullback_coeffs(unit, t);
        for (int row = 0; row <= n; ++row) p[row][col] = image[row];
    }
    return p;
}

QMat eigen_action() {
    return QMat::diagonal(alpha_unit(), alpha_unit().inv());
}

}  // namespace

TEST_CASE("change of basis into ray coordinates") {
    // identity basis leaves the matrix untouched
    QMat id = in_ray_basis(f_gen(), Ray(QF(1), QF(0)), Ray(QF(0), QF(1)));
    CHECK(id.m00 == QF(-1));
    CHECK(id.m01 == QF(-6));
    CHECK(id.m10 == QF(6));
    CHECK(id.m11 == QF(35));
    // eigenray basis diagonalizes the hyperbolic generator
    QMat diag = in_ray_basis(f_gen(), mov_cone().r1(), mov_cone().r2());
    CHECK(diag.m00 == alpha_unit().inv());
    CHECK(diag.m11 == alpha_unit());
    CHECK(diag.m01.is_zero());
    CHECK(diag.m10.is_zero());
    CHECK_THROWS_AS(in_ray_basis(f_gen(), Ray(QF(1), QF(2)), Ray(QF(2), QF(4))), usage_error);
}

TEST_CASE("forced vanishing pattern") {
    CHECK(forced_vanishing(3, alpha_unit()) == std::set<int>{0, 1, 2, 3});
    CHECK(forced_vanishing(4, alpha_unit()) == std::set<int>{0, 1, 3, 4});
    CHECK(forced_vanishing(6, alpha_unit()) == std::set<int>{0, 1, 2, 4, 5, 6});
    CHECK_THROWS_AS(forced_vanishing(4, QF(3)), usage_error);
    CHECK_THROWS_AS(forced_vanishing(4, alpha_unit().inv()), usage_error);
}

TEST_CASE("pullback through the diagonal action scales by alpha powers") {
    for (int n = 2; n <= 8; ++n) {
        SymForm f = SymForm::zero(n);
        for (int m = 0; m <= n; ++m) f.coeffs[m] = QF(m + 1);
        std::vector<QF> pulled = pullback_coeffs(f, eigen_action());
        for (int m = 0; m <= n; ++m) {
            CHECK(pulled[m] == pow(alpha_unit(), 2 * m - n) * f.coeffs[m]);
        }
    }
}

TEST_CASE("pullback is functorial") {
    QMat t = in_ray_basis(f_gen(), Ray(QF(1), QF(0)), Ray(QF(0), QF(1)));
    QMat t2 = t * t;
    SymForm f = SymForm::zero(3);
    f.coeffs = {QF(1), QF(-2), QF(Rat(1, 3)), QF(5)};
    SymForm once{3, pullback_coeffs(f, t)};
    CHECK(pullback_coeffs(once, t) == pullback_coeffs(f, t2));
}

TEST_CASE("invariant coefficient space matches the nullspace oracle") {
    // Invariance under the hyperbolic action pins the form down to the middle
    // monomial: the fixed space of the pullback map is 1-dimensional for even
    // n and trivial for odd n. Cross-checked with plain Gaussian elimination.
    for (int n = 2; n <= 8; ++n) {
        auto p = pullback_matrix(n, eigen_action());
        for (int i = 0; i <= n; ++i) p[i][i] -= QF(1);
        auto basis = nullspace(p);
        if (n % 2 == 0) {
            REQUIRE(basis.size() == 1);
            for (int m = 0; m <= n; ++m) {
                if (2 * m != n)
                    CHECK(basis[0][m].is_zero());
                else
                    CHECK_FALSE(basis[0][m].is_zero());
            }
        } else {
            CHECK(basis.empty());
        }
    }
}

TEST_CASE("form invariance report") {
    SymForm good = SymForm::zero(4);
    good.coeffs[2] = QF(6);
    FormInvarianceReport r = check_form_invariance(good, eigen_action(), true);
    CHECK(r.invariant);
    CHECK(r.mismatched.empty());
    CHECK(r.vanishing_violations.empty());

    SymForm bad = SymForm::zero(4);
    bad.coeffs[2] = QF(6);
    bad.coeffs[4] = QF(1);
    FormInvarianceReport rb = check_form_invariance(bad, eigen_action(), true);
    CHECK_FALSE(rb.invariant);
    CHECK(rb.mismatched == std::vector<int>{4});
    CHECK(rb.vanishing_violations == std::vector<int>{4});

    // without the hyperbolic flag only plain invariance is reported
    FormInvarianceReport rp = check_form_invariance(bad, QMat::diagonal(QF(1), QF(1)), false);
    CHECK(rp.invariant);
    CHECK(rp.vanishing_violations.empty());
}

TEST_CASE("odd-degree forms admit no nonzero invariant") {
    SymForm f = SymForm::zero(3);
    f.coeffs[1] = QF(2);
    FormInvarianceReport r = check_form_invariance(f, eigen_action(), true);
    CHECK_FALSE(r.invariant);
    CHECK(r.vanishing_violations == std::vector<int>{1});
}

TEST_CASE("first Chern-type functional must vanish") {
    CHECK(cn1_must_vanish(QF(0), QF(0), alpha_unit()).consistent);
    Cn1Result r1 = cn1_must_vanish(QF(3), QF(0), alpha_unit());
    CHECK_FALSE(r1.consistent);
    CHECK(r1.witness == "x1.c_(n-1) = 3 but alpha != 1");
    Cn1Result r2 = cn1_must_vanish(QF(0), QF(Rat(-1, 2)), alpha_unit());
    CHECK_FALSE(r2.consistent);
    CHECK(r2.witness == "x2.c_(n-1) = -1/2 but alpha != 1");
    CHECK_THROWS_AS(cn1_must_vanish(QF(0), QF(0), QF(5)), usage_error);
}

TEST_CASE("second Chern-type obstruction branches") {
    C2Result n4 = c2_obstruction(4, true, alpha_unit());
    CHECK(n4.verdict == C2Verdict::CONTRADICTION);
    CHECK(n4.branch == "x1^2.c2^1 > 0 is scaled by alpha^2");

    C2Result n6 = c2_obstruction(6, true, alpha_unit());
    CHECK(n6.verdict == C2Verdict::CONTRADICTION);
    CHECK(n6.branch == "x1^2.c2^2 > 0 is scaled by alpha^2");

    C2Result n8 = c2_obstruction(8, true, alpha_unit());
    CHECK(n8.verdict == C2Verdict::CONTRADICTION);
    CHECK(n8.branch == "x1^4.c2^2 > 0 is scaled by alpha^4");

    CHECK(c2_obstruction(2, true, alpha_unit()).verdict == C2Verdict::NO_OBSTRUCTION);
    CHECK(c2_obstruction(4, std::nullopt, alpha_unit()).verdict == C2Verdict::NO_OBSTRUCTION);
    CHECK(c2_obstruction(4, false, alpha_unit()).verdict == C2Verdict::NO_OBSTRUCTION);
    CHECK_THROWS_AS(c2_obstruction(3, true, alpha_unit()), usage_error);
    CHECK_THROWS_AS(c2_obstruction(4, true, QF(2)), usage_error);
}

TEST_CASE("middle positivity") {
    SymForm f = SymForm::zero(4);
    f.coeffs[2] = QF(6);
    CHECK(middle_positivity(f));
    f.coeffs[2] = QF(-1);
    CHECK_FALSE(middle_positivity(f));
    f.coeffs[2] = QF(6);
    f.coeffs[1] = QF(1);
    CHECK_THROWS_AS(middle_positivity(f), usage_error);
    SymForm odd = SymForm::zero(3);
    CHECK_THROWS_AS(middle_positivity(odd), usage_error);
}
