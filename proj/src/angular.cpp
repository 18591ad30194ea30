#include "tomoctx/angular.hpp"

#include <array>
#include <cmath>

namespace tomoctx::angular {

namespace {

// Exact as integers up to 20!, continued in long double beyond.
constexpr int kMaxFact = 64;

std::array<double, kMaxFact + 1> make_factorials() {
    std::array<double, kMaxFact + 1> t{};
    long double acc = 1.0L;
    t[0] = 1.0;
    for (int n = 1; n <= kMaxFact; ++n) {
        acc *= n;
        t[n] = static_cast<double>(acc);
    }
    return t;
}

const std::array<double, kMaxFact + 1> kFact = make_factorials();

}  // namespace

double factorial(int n) {
    if (n < 0 || n > kMaxFact) throw std::invalid_argument("factorial: out of range");
    return kFact[n];
}

double jacobi_poly(int n, double a, double b, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_poly: n must be nonnegative");
    if (n == 0) return 1.0;
    double p_prev = 1.0;
    double p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for (int k = 2; k <= n; ++k) {
        double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
        double c2 = (2.0 * k + a + b - 1.0) *
                    ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x + a * a - b * b);
        double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
        double p_next = (c2 * p - c3 * p_prev) / c1;
        p_prev = p;
        p = p_next;
    }
    return p;
}

double small_d(TwiceJ j, int two_m_row, int two_m_col, double beta) {
    if (!j.valid_m(two_m_row) || !j.valid_m(two_m_col))
        throw std::invalid_argument("small_d: m out of range");

    // Map to the region m_row >= |m_col| using
    // d_{m'm} = d_{-m,-m'} and d_{m'm} = (-1)^{m'-m} d_{mm'}.
    int r = two_m_row, c = two_m_col;
    double sign = 1.0;
    if (r + c < 0) {
        int nr = -c, nc = -r;
        r = nr; c = nc;
    }
    if (r < c) {
        std::swap(r, c);
        if (((r - c) / 2) % 2 != 0) sign = -sign;
    }

    const int tj = j.two_j;
    const double coeff = std::sqrt(kFact[(tj + r) / 2] * kFact[(tj - r) / 2] /
                                   (kFact[(tj + c) / 2] * kFact[(tj - c) / 2]));
    const double ch = std::cos(beta / 2.0);
    const double sh = std::sin(beta / 2.0);
    const int sum = (r + c) / 2;    // m' + m
    const int diff = (r - c) / 2;   // m' - m
    const int n = (tj - r) / 2;     // j - m'
    return sign * coeff * std::pow(ch, sum) * std::pow(sh, diff) *
           jacobi_poly(n, diff, sum, std::cos(beta));
}

Complex wigner_D(TwiceJ j, int two_m_row, int two_m_col, const EulerAngles& ang) {
    double d = small_d(j, two_m_row, two_m_col, ang.beta);
    double phase = 0.5 * two_m_row * ang.gamma + 0.5 * two_m_col * ang.alpha;
    return std::polar(d, phase);
}

Matrix wigner_D_matrix(TwiceJ j, const EulerAngles& ang) {
    const int n = j.dim();
    Matrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out(r, c) = wigner_D(j, j.two_j - 2 * r, j.two_j - 2 * c, ang);
    return out;
}

double wigner_3j(int two_j1, int two_j2, int two_j3,
                 int two_m1, int two_m2, int two_m3) {
    // Invalid couplings are zero by convention.
    if (two_j1 < 0 || two_j2 < 0 || two_j3 < 0) return 0.0;
    if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 ||
        std::abs(two_m3) > two_j3)
        return 0.0;
    if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 ||
        (two_j3 + two_m3) % 2 != 0)
        return 0.0;
    if (two_m1 + two_m2 + two_m3 != 0) return 0.0;
    if (two_j3 < std::abs(two_j1 - two_j2) || two_j3 > two_j1 + two_j2) return 0.0;
    if ((two_j1 + two_j2 + two_j3) % 2 != 0) return 0.0;

    auto f = [](int two_n) { return kFact[two_n / 2]; };

    const double delta = std::sqrt(
        f(two_j1 + two_j2 - two_j3) * f(two_j1 - two_j2 + two_j3) *
        f(-two_j1 + two_j2 + two_j3) / f(two_j1 + two_j2 + two_j3 + 2));
    const double norm = std::sqrt(
        f(two_j1 + two_m1) * f(two_j1 - two_m1) * f(two_j2 + two_m2) *
        f(two_j2 - two_m2) * f(two_j3 + two_m3) * f(two_j3 - two_m3));

    const int k_min = std::max({0, (two_j2 - two_j3 - two_m1) / 2,
                                (two_j1 - two_j3 + two_m2) / 2});
    const int k_max = std::min({(two_j1 + two_j2 - two_j3) / 2,
                                (two_j1 - two_m1) / 2, (two_j2 + two_m2) / 2});

    // Racah single sum; Kahan compensation for the alternating terms.
    double sum = 0.0, comp = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        double term =
            1.0 /
            (kFact[k] * f(two_j1 + two_j2 - two_j3 - 2 * k) *
             f(two_j1 - two_m1 - 2 * k) * f(two_j2 + two_m2 - 2 * k) *
             f(two_j3 - two_j2 + two_m1 + 2 * k) *
             f(two_j3 - two_j1 - two_m2 + 2 * k));
        if (k % 2 != 0) term = -term;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    double phase = (((two_j1 - two_j2 - two_m3) / 2) % 2 == 0) ? 1.0 : -1.0;
    return phase * delta * norm * sum;
}

}  // namespace tomoctx::angular
