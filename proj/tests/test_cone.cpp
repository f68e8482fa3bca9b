#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conelab/cone.hpp"
#include "support.hpp"

#include <random>

using namespace conelab;
using namespace testsupport;

TEST_CASE("ray canonicalization scales the first nonzero coordinate to +-1") {
    CHECK(Ray(QF(-48), QF(288)) == Ray(QF(-1), QF(6)));
    CHECK(Ray(QF(0), QF(8)) == Ray(QF(0), QF(1)));
    CHECK(Ray(QF(0), QF(-8)) == Ray(QF(0), QF(-1)));
    CHECK(Ray(QF(Rat(2, 3)), QF(5)).vec() == Vec2(QF(1), QF(Rat(15, 2))));
    // positive scaling only: the opposite ray stays distinct
    CHECK(Ray(QF(1), QF(6)) != Ray(QF(-1), QF(-6)));
    CHECK(Ray(QF(1), QF(6)).opposite() == Ray(QF(-1), QF(-6)));
    CHECK_THROWS_AS(Ray(QF(0), QF(0)), data_error);
}

TEST_CASE("irrational ray canonicalization") {
    Ray m1 = Ray::parse("(-1,3+2*sqrt(2))", 2);
    // rescaling by a positive field unit identifies the same ray
    QF u(Rat(3), Rat(2), 2);
    CHECK(Ray(m1.vec() * u) == m1);
    CHECK(m1.u() == QF(-1));
    CHECK(m1.v() == QF(Rat(3), Rat(2), 2));
    CHECK_FALSE(m1.is_rational());
}

TEST_CASE("primitive integral representative") {
    CHECK(Ray(QF(Rat(2, 3)), QF(Rat(4, 5))).primitive_integral() == std::make_pair(Int(5), Int(6)));
    CHECK(Ray(QF(-48), QF(288)).primitive_integral() == std::make_pair(Int(-1), Int(6)));
    CHECK(Ray(QF(0), QF(-3)).primitive_integral() == std::make_pair(Int(0), Int(-1)));
    CHECK_THROWS_AS(Ray::parse("(-1,3+2*sqrt(2))", 2).primitive_integral(), usage_error);
}

TEST_CASE("vector parsing") {
    Vec2 v = parse_vec2("(1/2, 3-2*sqrt(2))", 2);
    CHECK(v.x == QF(Rat(1, 2)));
    CHECK(v.y == QF(Rat(3), Rat(-2), 2));
    CHECK_THROWS_AS(parse_vec2("(1,2", 2), data_error);
    CHECK_THROWS_AS(parse_vec2("1,2", 2), data_error);
    CHECK_THROWS_AS(parse_vec2("(1)", 2), data_error);
    CHECK(Vec2(QF(3), QF(-4)).is_integral());
    CHECK_FALSE(Vec2(QF(Rat(1, 2)), QF(1)).is_integral());
    CHECK_FALSE(Vec2(QF(Rat(0), Rat(1), 2), QF(1)).is_integral());
}

TEST_CASE("cone orientation and membership") {
    // constructor reorients so cross(r1, r2) > 0
    Cone2 c(Ray(QF(0), QF(1)), Ray(QF(1), QF(0)));
    CHECK(c.r1() == Ray(QF(1), QF(0)));
    CHECK(c.r2() == Ray(QF(0), QF(1)));
    CHECK(c.contains(Ray(QF(1), QF(1)), true));
    CHECK(c.contains(Ray(QF(1), QF(0)), false));
    CHECK_FALSE(c.contains(Ray(QF(1), QF(0)), true));
    CHECK_FALSE(c.contains(Ray(QF(1), QF(-1)), false));
    CHECK_FALSE(c.contains(Ray(QF(-1), QF(-1)), false));
    CHECK_THROWS_AS(Cone2(Ray(QF(1), QF(1)), Ray(QF(2), QF(2))), data_error);
    CHECK_THROWS_AS(Cone2(Ray(QF(1), QF(1)), Ray(QF(-1), QF(-1))), data_error);
}

TEST_CASE("movable cone of the bundled scenario is oriented with m2 first") {
    Cone2 mov = mov_cone();
    CHECK(mov.r1() == Ray::parse("(3+2*sqrt(2),-1)", 2));
    CHECK(mov.r2() == Ray::parse("(-1,3+2*sqrt(2))", 2));
    // nef cone sits inside the movable cone
    CHECK(mov.contains(nef_cone().r1(), true));
    CHECK(mov.contains(nef_cone().r2(), true));
}

TEST_CASE("lattice matrix basics") {
    LatMat f = f_gen();
    CHECK(f == LatMat(-1, -6, 6, 35));
    CHECK(f.det() == 1);
    CHECK(f.trace() == 34);
    CHECK(f.inverse() == LatMat(35, 6, -6, -1));
    CHECK(f * f.inverse() == LatMat::identity());
    CHECK(f.power(2) == LatMat(-35, -204, 204, 1189));
    CHECK(f.power(2).trace() == 1154);
    CHECK(f.power(3).trace() == 39202);
    CHECK(f.power(-1) == f.inverse());
    CHECK(f.power(0) == LatMat::identity());
    CHECK_THROWS_AS(LatMat(1, 0, 0, 2), data_error);
    CHECK_THROWS_AS(LatMat(2, 0, 0, 0), data_error);
}

TEST_CASE("matrix text form round-trips") {
    LatMat f = f_gen();
    CHECK(f.str() == "[-1,-6,6,35]");
    CHECK(LatMat::parse("[-1,-6,6,35]") == f);
    CHECK(LatMat::parse(" [ 1, 0, 0, 1 ] ") == LatMat::identity());
    CHECK_THROWS_AS(LatMat::parse("[1,0,0]"), data_error);
    CHECK_THROWS_AS(LatMat::parse("[1,0,0,2]"), data_error);
    CHECK_THROWS_AS(LatMat::parse("1,0,0,1"), data_error);
}

TEST_CASE("matrix action on rays and cones") {
    LatMat f = f_gen();
    Cone2 mov = mov_cone();
    CHECK(apply_cone(f, mov) == mov);
    CHECK(apply_cone(tau1(), mov) == mov);
    CHECK(apply_cone(tau2(), mov) == mov);
    // tau1 swaps the irrational boundary rays
    CHECK(apply(tau1(), mov.r1()) == mov.r2());
    CHECK(apply(tau1(), mov.r2()) == mov.r1());
    // f fixes each boundary ray
    CHECK(apply(f, mov.r1()) == mov.r1());
    CHECK(apply(f, mov.r2()) == mov.r2());
    // nef cone is not preserved by the birational generators
    CHECK(apply_cone(f, nef_cone()) != nef_cone());
}

TEST_CASE("eigen decomposition of the hyperbolic generator") {
    LatMat f = f_gen();
    auto ed = eigen_data(f, 2);
    REQUIRE(ed.has_value());
    CHECK(ed->val1 == alpha_unit());
    CHECK(ed->val2 == alpha_unit().inv());
    CHECK(ed->val1 * ed->val2 == QF(1));
    CHECK(ed->ray1 == mov_cone().r2());
    // the sign choice of an eigenray is arbitrary: same line as the boundary
    CHECK(ed->ray2.opposite() == mov_cone().r1());
    // eigen equation holds exactly
    Vec2 img = f.apply(ed->ray1.vec());
    CHECK(img == ed->ray1.vec() * ed->val1);
}

TEST_CASE("eigen decomposition edge cases") {
    // rational eigenvalues
    auto sh = eigen_data(LatMat(1, 1, 0, 1), 2);
    REQUIRE(sh.has_value());
    CHECK(sh->val1 == QF(1));
    CHECK(sh->val2 == QF(1));
    auto refl = eigen_data(LatMat(0, 1, 1, 0), 2);
    REQUIRE(refl.has_value());
    CHECK(refl->val1 == QF(1));
    CHECK(refl->val2 == QF(-1));
    CHECK(refl->ray1 == Ray(QF(1), QF(1)));
    // rotation: complex spectrum
    CHECK_FALSE(eigen_data(LatMat(0, -1, 1, 0), 2).has_value());
    // real irrational spectrum outside the declared field
    CHECK_THROWS_AS(eigen_data(LatMat(2, 1, 1, 1), 2), data_error);  // disc 5
    auto g = eigen_data(LatMat(2, 1, 1, 1), 5);
    REQUIRE(g.has_value());
    CHECK(g->val1 == QF(Rat(3, 2), Rat(1, 2), 5));
}

TEST_CASE("random eigen decompositions satisfy the eigen equation") {
    std::mt19937 rng(4242);
    int checked = 0;
    while (checked < 100) {
        LatMat m = random_unimodular(rng, 8);
        Int disc = m.trace() * m.trace() - 4 * m.det();
        if (disc < 0) continue;
        // restrict to spectra living in Q or Q(sqrt(2))
        std::optional<EigenData> ed;
        try {
            ed = eigen_data(m, 2);
        } catch (const data_error&) {
            continue;
        }
        REQUIRE(ed.has_value());
        CHECK(m.apply(ed->ray1.vec()) == ed->ray1.vec() * ed->val1);
        CHECK(m.apply(ed->ray2.vec()) == ed->ray2.vec() * ed->val2);
        CHECK(ed->val1 + ed->val2 == QF(Rat(m.trace())));
        ++checked;
    }
}
