#include "conelab/qf.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace conelab {

bool is_squarefree(long n) {
    if (n < 1) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

QF::QF(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) {
        d_ = d;  // keep declared field even for rational values
    }
    if (d_ != 0 && (d_ < 2 || !is_squarefree(d_))) {
        throw usage_error("quadratic field radicand must be square-free and >= 2, got " +
                          std::to_string(d_));
    }
    if (d_ == 0 && b_ != 0) {
        throw usage_error("irrational part requires a radicand");
    }
}

void QF::merge_field(const QF& o) {
    if (d_ == 0) {
        d_ = o.d_;
    } else if (o.d_ != 0 && o.d_ != d_) {
        throw usage_error("mismatched quadratic fields: sqrt(" + std::to_string(d_) +
                          ") vs sqrt(" + std::to_string(o.d_) + ")");
    }
}

QF& QF::operator+=(const QF& o) {
    merge_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QF& QF::operator-=(const QF& o) {
    merge_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QF& QF::operator*=(const QF& o) {
    merge_field(o);
    Rat a = a_ * o.a_ + b_ * o.b_ * d_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
}

QF QF::inv() const {
    Rat n = norm();
    if (n == 0) {
        if (is_zero()) throw arithmetic_error("division by zero");
        // norm(a + b*sqrt(d)) = 0 with d square-free forces a = b = 0
        throw arithmetic_error("zero norm for nonzero element; field data corrupt");
    }
    return QF(a_ / n, -b_ / n, d_);
}

QF& QF::operator/=(const QF& o) {
    return *this *= o.inv();
}

int QF::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d. Equality is impossible for
    // b != 0 since d is not a rational square.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * d_;
    return lhs > rhs ? sa : sb;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string QF::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string root = (b_ < 0 ? "-" : "") + rat_str(abs(b_)) + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return root;
    if (b_ < 0) return rat_str(a_) + root;
    return rat_str(a_) + "+" + root;
}

double QF::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

namespace {

// One signed term: "p/q", "p/q*sqrt(k)" or "sqrt(k)" (optionally "-sqrt(k)").
void parse_term(const std::string& term, long d, Rat& a, Rat& b, long& found_d) {
    std::string body = term;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (body.empty()) throw data_error("empty term in number '" + term + "'");

    Rat coeff;
    auto sq = body.find("sqrt(");
    bool radical = sq != std::string::npos;
    std::string rational_part;
    if (radical) {
        if (sq != 0) {
            if (body[sq - 1] != '*') throw data_error("malformed term '" + term + "'");
            rational_part = body.substr(0, sq - 1);
        }
        auto close = body.find(')', sq);
        if (close == std::string::npos || close != body.size() - 1)
            throw data_error("malformed sqrt in '" + term + "'");
        std::string rad = body.substr(sq + 5, close - sq - 5);
        long k = std::strtol(rad.c_str(), nullptr, 10);
        if (std::to_string(k) != rad) throw data_error("bad radicand '" + rad + "'");
        if (d != 0 && k != d)
            throw data_error("radicand " + std::to_string(k) + " does not match field sqrt(" +
                             std::to_string(d) + ")");
        if (k < 2 || !is_squarefree(k)) throw data_error("radicand must be square-free and >= 2");
        if (found_d != 0 && found_d != k) throw data_error("mixed radicands in one number");
        found_d = k;
    } else {
        rational_part = body;
    }
    if (rational_part.empty()) {
        coeff = 1;
    } else {
        for (char c : rational_part) {
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
                throw data_error("malformed rational '" + rational_part + "'");
        }
        coeff = Rat(rational_part);
        if (coeff.get_den() == 0) throw data_error("zero denominator in '" + rational_part + "'");
        coeff.canonicalize();
    }
    if (neg) coeff = -coeff;
    if (radical)
        b += coeff;
    else
        a += coeff;
}

}  // namespace

QF QF::parse(const std::string& text, long d) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw data_error("empty number");

    Rat a(0), b(0);
    long found_d = 0;
    size_t start = 0;
    for (size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '(' && s[i - 1] != '*' &&
                              s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-')) {
            // split only at top level; '(' guard keeps "sqrt(" radicands intact
            std::string term = s.substr(start, i - start);
            if (term.find('(') != std::string::npos && term.find(')') == std::string::npos) {
                continue;  // split point was inside sqrt(...): keep scanning
            }
            parse_term(term, d, a, b, found_d);
            start = i;
        }
    }
    if (b == 0) return QF(a, Rat(0), d);
    return QF(a, b, d != 0 ? d : found_d);
}

QF pow(QF base, long exp) {
    if (exp < 0) return pow(base.inv(), -exp);
    QF result(1);
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

}  // namespace conelab
