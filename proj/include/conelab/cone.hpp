#pragma once

#include "conelab/qf.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace conelab {

// Plain vector in the rank-2 lattice plane, not scaled.
struct Vec2 {
    QF x, y;

    Vec2() = default;
    Vec2(QF x_, QF y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    bool is_integral() const;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(const QF& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

QF cross(const Vec2& p, const Vec2& q);

// Parses "(qf,qf)" without any rescaling.
Vec2 parse_vec2(const std::string& text, long d);

// Direction up to positive scaling. Canonical representative: the first
// nonzero coordinate is scaled to +-1, keeping the sign so the ray (not the
// line through it) is identified.
class Ray {
  public:
    explicit Ray(const Vec2& v);
    Ray(QF u, QF v) : Ray(Vec2(std::move(u), std::move(v))) {}

    const Vec2& vec() const { return v_; }
    const QF& u() const { return v_.x; }
    const QF& v() const { return v_.y; }

    bool is_rational() const { return v_.x.is_rational() && v_.y.is_rational(); }
    // Primitive integral representative; only for rational rays.
    std::pair<Int, Int> primitive_integral() const;

    Ray opposite() const { return Ray(Vec2(-v_.x, -v_.y)); }

    bool operator==(const Ray& o) const { return v_ == o.v_; }
    bool operator!=(const Ray& o) const { return !(v_ == o.v_); }

    std::string str() const { return v_.str(); }
    static Ray parse(const std::string& text, long d);

  private:
    Vec2 v_;
};

QF cross(const Ray& p, const Ray& q);
bool is_rational_ray(const Ray& p);

// Salient full-dimensional closed cone, boundary rays oriented so that
// cross(r1, r2) > 0.
class Cone2 {
  public:
    Cone2(const Ray& a, const Ray& b);

    const Ray& r1() const { return r1_; }
    const Ray& r2() const { return r2_; }

    bool contains(const Ray& p, bool strict) const;

    bool operator==(const Cone2& o) const { return r1_ == o.r1_ && r2_ == o.r2_; }
    bool operator!=(const Cone2& o) const { return !(*this == o); }

    std::string str() const { return "cone " + r1_.str() + " " + r2_.str(); }

  private:
    Ray r1_, r2_;
};

// 2x2 integer matrix with determinant +-1, acting on column vectors.
class LatMat {
  public:
    LatMat(Int a, Int b, Int c, Int d);

    static LatMat identity() { return LatMat(1, 0, 0, 1); }

    const Int& at(int r, int c) const { return m_[2 * r + c]; }
    Int det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    Int trace() const { return m_[0] + m_[3]; }
    bool is_identity() const { return m_[0] == 1 && m_[1] == 0 && m_[2] == 0 && m_[3] == 1; }

    LatMat inverse() const;
    LatMat operator*(const LatMat& o) const;
    LatMat power(long k) const;
    LatMat operator-() const { return LatMat(-m_[0], -m_[1], -m_[2], -m_[3]); }

    Vec2 apply(const Vec2& v) const;

    bool operator==(const LatMat& o) const { return m_ == o.m_; }
    bool operator!=(const LatMat& o) const { return !(m_ == o.m_); }

    // Row-major quadruple "[a,b,c,d]".
    std::string str() const;
    static LatMat parse(const std::string& text);

  private:
    std::array<Int, 4> m_;
};

Ray apply(const LatMat& m, const Ray& p);
Cone2 apply_cone(const LatMat& m, const Cone2& c);

struct EigenData {
    QF val1, val2;  // val1 >= val2
    Ray ray1, ray2;  // ray_i spans the val_i eigenspace
};

// Exact eigen decomposition over Q(sqrt(d)). Returns nullopt for complex
// (rotation-type) spectra; throws data_error when the eigenvalues are real
// but live outside Q(sqrt(d)).
std::optional<EigenData> eigen_data(const LatMat& m, long d);

}  // namespace conelab
