#pragma once

#include "wreath/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace wreath {

/// A partition of n in multiplicity form: mults maps part size i to its
/// multiplicity m_i > 0. Doubles as an S_n cycle type.
struct Partition {
    long long n = 0;
    std::map<int, long long> mults;  // part size -> multiplicity, entries > 0

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

Partition make_partition(std::map<int, long long> mults);

/// All partitions of n, each exactly once, in reverse-lexicographic order on
/// the descending part lists ([n] first, [1,1,...,1] last). p(0) = 1 via the
/// empty partition.
std::vector<Partition> partitions_of(int n);

/// Cycle type of pi^r given the cycle type of pi (r prime):
/// d_i = c_i + r*c_{ri} when r does not divide i, d_i = r*c_{ri} otherwise.
Partition power_type_sn(const Partition& c, unsigned r);

/// Whether a class of type lambda consists of r-th powers in S_n (r prime):
/// every part size divisible by r must have multiplicity divisible by r.
bool is_rth_power_sn(const Partition& lambda, unsigned r);

/// |class of lambda| = n! / prod_i (i^{m_i} m_i!)
BigInt sn_class_size(const Partition& lambda);

BigInt count_p(int n);
/// partitions of n with every multiplicity divisible by r
BigInt count_p_r(int n, unsigned r);
/// partitions of n where every part divisible by r has multiplicity divisible by r
BigInt count_p_r_prime(int n, unsigned r);

/// Probability that a uniform element of S_n is an r-th power (r prime).
Rational prob_r_sn(int n, unsigned r);

std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text);

}  // namespace wreath
