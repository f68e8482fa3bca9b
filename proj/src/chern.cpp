#include "conelab/chern.hpp"

namespace conelab {

QMat in_ray_basis(const LatMat& m, const Ray& b1, const Ray& b2) {
    QF a = b1.u(), c = b1.v();  // B columns
    QF b = b2.u(), d = b2.v();
    QF det = a * d - b * c;
    if (det.is_zero()) throw usage_error("basis rays are collinear");
    QF inv = det.inv();
    // B^-1 M B
    QF t00(Rat(m.at(0, 0))), t01(Rat(m.at(0, 1))), t10(Rat(m.at(1, 0))), t11(Rat(m.at(1, 1)));
    QMat mb{t00 * a + t01 * c, t00 * b + t01 * d, t10 * a + t11 * c, t10 * b + t11 * d};
    return {inv * (d * mb.m00 - b * mb.m10), inv * (d * mb.m01 - b * mb.m11),
            inv * (a * mb.m10 - c * mb.m00), inv * (a * mb.m11 - c * mb.m01)};
}

std::set<int> forced_vanishing(int n, const QF& alpha) {
    if (alpha.is_rational()) throw usage_error("alpha rational: no infinite-order action");
    if (!(alpha > QF(1))) throw usage_error("alpha must exceed 1");
    std::set<int> out;
    for (int m = 0; m <= n; ++m)
        if (2 * m != n) out.insert(m);
    return out;
}

namespace {

Int binom(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

std::vector<QF> pullback_coeffs(const SymForm& f, const QMat& t) {
    const int n = f.n;
    if (static_cast<int>(f.coeffs.size()) != n + 1)
        throw usage_error("form needs exactly n + 1 coefficients");

    // column images of the basis vectors
    const QF &a = t.m00, &c = t.m10;  // T x1
    const QF &b = t.m01, &d = t.m11;  // T x2

    std::vector<QF> out(n + 1, QF(0));
    for (int m = 0; m <= n; ++m) {
        // (a x1 + c x2)^m (b x1 + d x2)^(n-m), evaluated against F
        QF acc(0);
        for (int i = 0; i <= m; ++i) {
            QF left = QF(Rat(binom(m, i))) * pow(a, i) * pow(c, m - i);
            for (int j2 = 0; j2 <= n - m; ++j2) {
                int j = i + j2;  // total x1 exponent
                QF right = QF(Rat(binom(n - m, j2))) * pow(b, j2) * pow(d, n - m - j2);
                acc += left * right * f.coeffs[j];
            }
        }
        out[m] = acc;
    }
    return out;
}

FormInvarianceReport check_form_invariance(const SymForm& f, const QMat& t, bool hyperbolic) {
    FormInvarianceReport report;
    std::vector<QF> pulled = pullback_coeffs(f, t);
    for (int m = 0; m <= f.n; ++m) {
        if (pulled[m] != f.coeffs[m]) report.mismatched.push_back(m);
    }
    report.invariant = report.mismatched.empty();
    if (hyperbolic) {
        for (int m = 0; m <= f.n; ++m) {
            if (2 * m != f.n && !f.coeffs[m].is_zero()) report.vanishing_violations.push_back(m);
        }
    }
    return report;
}

Cn1Result cn1_must_vanish(const QF& phi1, const QF& phi2, const QF& alpha) {
    if (alpha.is_rational() || !(alpha > QF(1)))
        throw usage_error("alpha must be irrational and exceed 1");
    if (phi1.is_zero() && phi2.is_zero()) return {true, ""};
    // invariance would force alpha * phi_i = phi_i
    if (!phi1.is_zero()) return {false, "x1.c_(n-1) = " + phi1.str() + " but alpha != 1"};
    return {false, "x2.c_(n-1) = " + phi2.str() + " but alpha != 1"};
}

C2Result c2_obstruction(int n, const std::optional<bool>& c2_positive, const QF& alpha) {
    if (n % 2 != 0) throw usage_error("n odd: finiteness already follows without c2");
    if (alpha.is_rational() || !(alpha > QF(1)))
        throw usage_error("alpha must be irrational and exceed 1");
    if (!c2_positive || !*c2_positive) return {C2Verdict::NO_OBSTRUCTION, ""};
    if (n == 2) return {C2Verdict::NO_OBSTRUCTION, "exponent pattern degenerates at n = 2"};
    int m = n / 2;
    if (m % 2 == 0) {
        int k = m / 2;
        return {C2Verdict::CONTRADICTION,
                "x1^" + std::to_string(2 * k) + ".c2^" + std::to_string(k) + " > 0 is scaled by alpha^" +
                    std::to_string(2 * k)};
    }
    int s = (n - 2) / 4;
    return {C2Verdict::CONTRADICTION,
            "x1^" + std::to_string(2 * s) + ".c2^" + std::to_string(s + 1) +
                " > 0 is scaled by alpha^" + std::to_string(2 * s)};
}

bool middle_positivity(const SymForm& f) {
    if (f.n % 2 != 0) throw usage_error("middle positivity needs even n");
    if (static_cast<int>(f.coeffs.size()) != f.n + 1)
        throw usage_error("form needs exactly n + 1 coefficients");
    for (int m = 0; m <= f.n; ++m) {
        if (2 * m != f.n && !f.coeffs[m].is_zero())
            throw usage_error("off-middle coefficient nonzero at m = " + std::to_string(m));
    }
    return f.coeffs[f.n / 2] > QF(0);
}

}  // namespace conelab
