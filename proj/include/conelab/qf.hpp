#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace conelab {

using Int = mpz_class;
using Rat = mpq_class;

// Operand misuse: mismatched fields, bad preconditions.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by zero and friends.
struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent input data (scenarios, matrices, cones).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

bool is_squarefree(long n);

// Element of the real quadratic field Q(sqrt(d)): a + b*sqrt(d) with a, b
// rational and d a fixed square-free integer >= 2. A value with d == 0 is a
// plain rational (b must be 0) and interoperates with any field; two values
// with nonzero d only interoperate when their d matches.
class QF {
  public:
    QF() : a_(0), b_(0), d_(0) {}
    QF(long v) : a_(v), b_(0), d_(0) {}
    QF(const Rat& a) : a_(a), b_(0), d_(0) { a_.canonicalize(); }
    QF(Rat a, Rat b, long d);

    static QF sqrt_d(long d) { return QF(Rat(0), Rat(1), d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    int min_poly_degree() const { return b_ == 0 ? 1 : 2; }

    QF conj() const { return QF(a_, -b_, d_); }
    Rat trace() const { return 2 * a_; }
    Rat norm() const { return a_ * a_ - b_ * b_ * d_; }
    QF inv() const;

    // Exact sign of the real number a + b*sqrt(d), no floating point.
    int sign() const;

    QF operator-() const { return QF(-a_, -b_, d_); }
    QF& operator+=(const QF& o);
    QF& operator-=(const QF& o);
    QF& operator*=(const QF& o);
    QF& operator/=(const QF& o);

    friend QF operator+(QF x, const QF& y) { return x += y; }
    friend QF operator-(QF x, const QF& y) { return x -= y; }
    friend QF operator*(QF x, const QF& y) { return x *= y; }
    friend QF operator/(QF x, const QF& y) { return x /= y; }

    friend bool operator==(const QF& x, const QF& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || y.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QF& x, const QF& y) { return !(x == y); }
    friend bool operator<(const QF& x, const QF& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QF& x, const QF& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QF& x, const QF& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QF& x, const QF& y) { return (x - y).sign() >= 0; }

    // Canonical text form "p/q+r/s*sqrt(d)"; "/1" and zero parts omitted.
    std::string str() const;
    double to_double() const;

    // Parses the canonical encoding. A sqrt(k) term must have k == d unless
    // the value is purely rational; d == 0 accepts any radicand.
    static QF parse(const std::string& text, long d);

  private:
    void merge_field(const QF& o);

    Rat a_, b_;
    long d_;
};

QF pow(QF base, long exp);

std::string rat_str(const Rat& r);

}  // namespace conelab
