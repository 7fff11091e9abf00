#pragma once

#include "wreath/groups.hpp"
#include "wreath/numeric.hpp"

#include <string>
#include <vector>

namespace wreath {

/// Formal power series over exact rationals, truncated at degree cap.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cap) : coeffs_(static_cast<size_t>(cap) + 1, 0) {
        if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
    }

    static TruncatedSeries constant(const Rational& c, int cap);
    /// c * u^k, truncated
    static TruncatedSeries monomial(const Rational& c, int k, int cap);

    int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, Rational v) { coeffs_.at(static_cast<size_t>(k)) = std::move(v); }

    /// Substitute u -> u^m.
    TruncatedSeries inflate(int m) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Rational> coeffs_;  // coeffs_[k] = coefficient of u^k
};

// Results carry cap min(cap(a), cap(b)).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries reciprocal(const TruncatedSeries& f);   // needs nonzero constant term
TruncatedSeries exp(const TruncatedSeries& f);          // needs constant term 0
TruncatedSeries log(const TruncatedSeries& f);          // needs constant term 1
TruncatedSeries pow_rational(const TruncatedSeries& f, const Rational& q);  // constant term 1

/// Multisection of exp(alpha * u^j / j) keeping only the terms whose
/// exponent-multiplicity index is divisible by r:
/// sum over m >= 0, r | m of (alpha/j)^m u^{jm} / m!. For r = 2 this is
/// cosh(alpha u^j / j).
TruncatedSeries psi(int j, const Rational& alpha, unsigned r, int cap);

/// 1 + sum P_r(G wr S_n) u^n.
TruncatedSeries genfun_prob_wreath(const ClassStructure& cs, unsigned r, int cap);

TruncatedSeries genfun_partitions(int cap);                    // sum p(n) u^n
TruncatedSeries genfun_p_r(unsigned r, int cap);               // sum p_r(n) u^n
TruncatedSeries genfun_p_r_prime(unsigned r, int cap);         // sum p_r'(n) u^n

TruncatedSeries genfun_cc(int s, int cap);                     // sum CC(G wr S_n) u^n
TruncatedSeries genfun_cc_r(const ClassStructure& cs, unsigned r, int cap);

struct SeriesPlateauReport {
    std::vector<int> failing_k;  // k < cap, k != -1 (mod r), with c_{k+1} != c_k
    bool pass() const { return failing_k.empty(); }
};

SeriesPlateauReport check_plateau_series(const TruncatedSeries& f, unsigned r);

/// One line per degree: "n<TAB>coefficient".
std::string format_series(const TruncatedSeries& f);

}  // namespace wreath
