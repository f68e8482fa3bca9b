#include "conelab/cone.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace conelab {

bool Vec2::is_integral() const {
    return x.is_rational() && y.is_rational() && x.a().get_den() == 1 && y.a().get_den() == 1;
}

QF cross(const Vec2& p, const Vec2& q) {
    return p.x * q.y - p.y * q.x;
}

Vec2 parse_vec2(const std::string& text, long d) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw data_error("expected '(qf,qf)': " + text);
    s = s.substr(1, s.size() - 2);
    int depth = 0;
    size_t comma = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            comma = i;
            break;
        }
    }
    if (comma == std::string::npos) throw data_error("expected two components: " + text);
    return Vec2(QF::parse(s.substr(0, comma), d), QF::parse(s.substr(comma + 1), d));
}

Ray::Ray(const Vec2& v) : v_(v) {
    if (v_.is_zero()) throw data_error("ray direction must be nonzero");
    QF scale = v_.x.is_zero() ? v_.y : v_.x;
    if (scale.sign() < 0) scale = -scale;
    v_.x /= scale;
    v_.y /= scale;
}

std::pair<Int, Int> Ray::primitive_integral() const {
    if (!is_rational()) throw usage_error("primitive integral form requires a rational ray");
    Rat a = v_.x.a(), b = v_.y.a();
    Int lcm_den;
    mpz_lcm(lcm_den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Int p = a.get_num() * (lcm_den / a.get_den());
    Int q = b.get_num() * (lcm_den / b.get_den());
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return {p / g, q / g};
}

Ray Ray::parse(const std::string& text, long d) {
    return Ray(parse_vec2(text, d));
}

QF cross(const Ray& p, const Ray& q) {
    return cross(p.vec(), q.vec());
}

bool is_rational_ray(const Ray& p) {
    return p.is_rational();
}

Cone2::Cone2(const Ray& a, const Ray& b) : r1_(a), r2_(b) {
    int s = cross(r1_, r2_).sign();
    if (s == 0) throw data_error("degenerate cone: rays " + a.str() + " and " + b.str() +
                                 " span a line");
    if (s < 0) std::swap(r1_, r2_);
}

bool Cone2::contains(const Ray& p, bool strict) const {
    int s1 = cross(r1_, p).sign();
    int s2 = cross(p, r2_).sign();
    if (strict) return s1 > 0 && s2 > 0;
    return s1 >= 0 && s2 >= 0;
}

LatMat::LatMat(Int a, Int b, Int c, Int d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    Int dt = det();
    if (dt != 1 && dt != -1)
        throw data_error("lattice matrix must have determinant +-1, got " + dt.get_str() +
                         " for " + str());
}

LatMat LatMat::inverse() const {
    Int dt = det();
    // det = +-1, so the inverse is det * adjugate
    return LatMat(dt * m_[3], -dt * m_[1], -dt * m_[2], dt * m_[0]);
}

LatMat LatMat::operator*(const LatMat& o) const {
    return LatMat(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                  m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

LatMat LatMat::power(long k) const {
    LatMat base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    LatMat r = identity();
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Vec2 LatMat::apply(const Vec2& v) const {
    QF a{Rat(m_[0])}, b{Rat(m_[1])}, c{Rat(m_[2])}, d{Rat(m_[3])};
    return {a * v.x + b * v.y, c * v.x + d * v.y};
}

std::string LatMat::str() const {
    return "[" + m_[0].get_str() + "," + m_[1].get_str() + "," + m_[2].get_str() + "," +
           m_[3].get_str() + "]";
}

LatMat LatMat::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw data_error("matrix must look like '[a,b,c,d]': " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<Int> entries;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw data_error("empty matrix entry in " + text);
        entries.emplace_back(item);
    }
    if (entries.size() != 4) throw data_error("matrix needs four row-major entries: " + text);
    return LatMat(entries[0], entries[1], entries[2], entries[3]);
}

Ray apply(const LatMat& m, const Ray& p) {
    return Ray(m.apply(p.vec()));
}

Cone2 apply_cone(const LatMat& m, const Cone2& c) {
    return Cone2(apply(m, c.r1()), apply(m, c.r2()));
}

std::optional<EigenData> eigen_data(const LatMat& m, long d) {
    Int t = m.trace();
    Int dt = m.det();
    Int disc = t * t - 4 * dt;
    if (disc < 0) return std::nullopt;

    QF lam1, lam2;
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        lam1 = QF(Rat(t + s) / 2);
        lam2 = QF(Rat(t - s) / 2);
    } else {
        if (d < 2) throw data_error("irrational eigenvalues but no quadratic field given");
        Int quot = disc / d;
        if (disc % d != 0 || !mpz_perfect_square_p(quot.get_mpz_t()))
            throw data_error("eigenvalues of " + m.str() + " lie outside Q(sqrt(" +
                             std::to_string(d) + "))");
        Int s;
        mpz_sqrt(s.get_mpz_t(), quot.get_mpz_t());
        lam1 = QF(Rat(t) / 2, Rat(s) / 2, d);
        lam2 = lam1.conj();
    }

    auto eigenray = [&](const QF& lam) -> Ray {
        QF a(Rat(m.at(0, 0))), b(Rat(m.at(0, 1))), c(Rat(m.at(1, 0)));
        if (!b.is_zero()) return Ray(b, lam - a);
        if (!c.is_zero()) return Ray(lam - QF(Rat(m.at(1, 1))), c);
        // diagonal matrix
        if (lam == a) return Ray(QF(1), QF(0));
        return Ray(QF(0), QF(1));
    };
    return EigenData{lam1, lam2, eigenray(lam1), eigenray(lam2)};
}

}  // namespace conelab
