#include "wreath/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wreath {

TruncatedSeries TruncatedSeries::constant(const Rational& c, int cap) {
    TruncatedSeries f(cap);
    f.set_coeff(0, c);
    return f;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int k, int cap) {
    TruncatedSeries f(cap);
    if (k <= cap) f.set_coeff(k, c);
    return f;
}

TruncatedSeries TruncatedSeries::inflate(int m) const {
    if (m < 1) throw std::invalid_argument("inflate requires m >= 1");
    TruncatedSeries g(cap());
    for (int k = 0; static_cast<long long>(k) * m <= cap(); ++k)
        g.set_coeff(k * m, coeff(k));
    return g;
}

namespace {
int common_cap(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.cap(), b.cap());
}
}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries c(common_cap(a, b));
    for (int k = 0; k <= c.cap(); ++k) c.set_coeff(k, a.coeff(k) + b.coeff(k));
    return c;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries c(common_cap(a, b));
    for (int k = 0; k <= c.cap(); ++k) c.set_coeff(k, a.coeff(k) - b.coeff(k));
    return c;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries c(common_cap(a, b));
    for (int i = 0; i <= c.cap(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= c.cap(); ++j) {
            if (b.coeff(j) == 0) continue;
            c.set_coeff(i + j, c.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return c;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
    if (f.coeff(0) == 0)
        throw std::invalid_argument("reciprocal requires nonzero constant term, got 0");
    TruncatedSeries g(f.cap());
    g.set_coeff(0, 1 / f.coeff(0));
    for (int k = 1; k <= f.cap(); ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += f.coeff(j) * g.coeff(k - j);
        g.set_coeff(k, -acc / f.coeff(0));
    }
    return g;
}

TruncatedSeries exp(const TruncatedSeries& f) {
    if (f.coeff(0) != 0) {
        std::ostringstream os;
        os << "exp requires constant term 0, got " << f.coeff(0);
        throw std::invalid_argument(os.str());
    }
    // n g_n = sum_{k=1..n} k f_k g_{n-k}
    TruncatedSeries g(f.cap());
    g.set_coeff(0, 1);
    for (int n = 1; n <= f.cap(); ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += Rational(k) * f.coeff(k) * g.coeff(n - k);
        g.set_coeff(n, acc / n);
    }
    return g;
}

TruncatedSeries log(const TruncatedSeries& f) {
    if (f.coeff(0) != 1) {
        std::ostringstream os;
        os << "log requires constant term 1, got " << f.coeff(0);
        throw std::invalid_argument(os.str());
    }
    // n f_n = sum_{k=1..n} k h_k f_{n-k}  =>  solve for h_n
    TruncatedSeries h(f.cap());
    for (int n = 1; n <= f.cap(); ++n) {
        Rational acc = Rational(n) * f.coeff(n);
        for (int k = 1; k < n; ++k) acc -= Rational(k) * h.coeff(k) * f.coeff(n - k);
        h.set_coeff(n, acc / n);
    }
    return h;
}

TruncatedSeries pow_rational(const TruncatedSeries& f, const Rational& q) {
    if (f.coeff(0) != 1) {
        std::ostringstream os;
        os << "pow requires constant term 1, got " << f.coeff(0);
        throw std::invalid_argument(os.str());
    }
    auto lf = log(f);
    TruncatedSeries scaled(f.cap());
    for (int k = 0; k <= f.cap(); ++k) scaled.set_coeff(k, q * lf.coeff(k));
    return exp(scaled);
}

TruncatedSeries psi(int j, const Rational& alpha, unsigned r, int cap) {
    if (j < 1) throw std::invalid_argument("psi requires j >= 1");
    TruncatedSeries f(cap);
    Rational term = 1;  // (alpha/j)^m / m! at m = 0
    Rational base = alpha / j;
    for (long long m = 0; static_cast<long long>(j) * m <= cap; ++m) {
        if (m % static_cast<long long>(r) == 0) f.set_coeff(static_cast<int>(j * m), term);
        term = term * base / static_cast<int>(m + 1);
    }
    return f;
}

namespace {

/// ((1 - u^r)^{1/r} / (1 - u))^q
TruncatedSeries surjective_factor(unsigned r, const Rational& q, int cap) {
    TruncatedSeries one_minus_ur = TruncatedSeries::constant(1, cap);
    if (static_cast<int>(r) <= cap)
        one_minus_ur.set_coeff(static_cast<int>(r), -1);
    TruncatedSeries one_minus_u = TruncatedSeries::constant(1, cap);
    if (cap >= 1) one_minus_u.set_coeff(1, -1);
    auto base = mul(pow_rational(one_minus_ur, Rational(1, static_cast<int>(r))),
                    reciprocal(one_minus_u));
    return pow_rational(base, q);
}

}  // namespace

TruncatedSeries genfun_prob_wreath(const ClassStructure& cs, unsigned r, int cap) {
    require_prime(r);
    auto lab = nonpower_classes(cs, r);
    const long long gorder = cs.group().order();
    TruncatedSeries f = TruncatedSeries::constant(1, cap);
    for (int c = 0; c < cs.num_classes(); ++c) {
        Rational alpha(cs.size(c), gorder);
        if (lab.is_nonpower[static_cast<size_t>(c)]) {
            // all multiplicities in this row forced divisible by r
            for (int j = 1; static_cast<long long>(j) * r <= cap; ++j)
                f = mul(f, psi(j, alpha, r, cap));
        } else {
            f = mul(f, surjective_factor(r, alpha, cap));
            for (int j = 1; static_cast<long long>(j) * r * r <= cap; ++j)
                f = mul(f, psi(static_cast<int>(r) * j, alpha, r, cap));
        }
    }
    return f;
}

TruncatedSeries genfun_partitions(int cap) {
    TruncatedSeries f = TruncatedSeries::constant(1, cap);
    for (int i = 1; i <= cap; ++i) {
        TruncatedSeries factor = TruncatedSeries::constant(1, cap);
        factor.set_coeff(i, -1);
        f = mul(f, reciprocal(factor));
    }
    return f;
}

TruncatedSeries genfun_p_r(unsigned r, int cap) {
    require_prime(r);
    return genfun_partitions(cap).inflate(static_cast<int>(r));
}

TruncatedSeries genfun_p_r_prime(unsigned r, int cap) {
    require_prime(r);
    // parts not divisible by r are free; parts ri contribute in blocks of r
    TruncatedSeries f = TruncatedSeries::constant(1, cap);
    for (int part = 1; part <= cap; ++part) {
        int period = (part % static_cast<int>(r) == 0) ? part * static_cast<int>(r) : part;
        if (period > cap) continue;
        TruncatedSeries factor = TruncatedSeries::constant(1, cap);
        factor.set_coeff(period, -1);
        f = mul(f, reciprocal(factor));
    }
    return f;
}

TruncatedSeries genfun_cc(int s, int cap) {
    if (s < 1) throw std::invalid_argument("genfun_cc requires s >= 1");
    TruncatedSeries f = TruncatedSeries::constant(1, cap);
    auto p = genfun_partitions(cap);
    for (int i = 0; i < s; ++i) f = mul(f, p);
    return f;
}

TruncatedSeries genfun_cc_r(const ClassStructure& cs, unsigned r, int cap) {
    require_prime(r);
    auto lab = nonpower_classes(cs, r);
    const int s = cs.num_classes();
    TruncatedSeries f = TruncatedSeries::constant(1, cap);
    auto pr = genfun_p_r(r, cap);
    auto prp = genfun_p_r_prime(r, cap);
    for (int i = 0; i < lab.d; ++i) f = mul(f, pr);
    for (int i = lab.d; i < s; ++i) f = mul(f, prp);
    return f;
}

SeriesPlateauReport check_plateau_series(const TruncatedSeries& f, unsigned r) {
    require_prime(r);
    SeriesPlateauReport report;
    for (int k = 0; k < f.cap(); ++k) {
        if ((k + 1) % static_cast<int>(r) == 0) continue;  // k = -1 (mod r) is exempt
        if (f.coeff(k + 1) != f.coeff(k)) report.failing_k.push_back(k);
    }
    return report;
}

std::string format_series(const TruncatedSeries& f) {
    std::ostringstream os;
    for (int k = 0; k <= f.cap(); ++k) os << k << '\t' << f.coeff(k) << '\n';
    return os.str();
}

}  // namespace wreath
