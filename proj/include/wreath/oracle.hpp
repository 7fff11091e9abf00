#pragma once

#include "wreath/groups.hpp"
#include "wreath/numeric.hpp"
#include "wreath/wreath_core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wreath {

/// An explicit element (f, pi) of G wr S_n: f maps positions 0..n-1 to
/// G-element indices, pi is a permutation of 0..n-1 (pi[i] = image of i).
struct WreathElement {
    std::vector<int> f;
    std::vector<int> pi;

    int n() const { return static_cast<int>(f.size()); }
    bool operator==(const WreathElement&) const = default;
    auto operator<=>(const WreathElement&) const = default;
};

WreathElement wreath_identity(int n);
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b, const GroupModel& g);
WreathElement wreath_inverse(const WreathElement& a, const GroupModel& g);
WreathElement wreath_power(const WreathElement& a, unsigned long long M, const GroupModel& g);

/// Type of an explicit element: tallies, per cycle of pi, the G-class of the
/// cycle product into an s x n matrix.
TypeMatrix element_type(const WreathElement& a, const ClassStructure& cs);

/// Calls visit on every element of G wr S_n exactly once. Throws if
/// |G|^n n! exceeds the enumeration guard (10^6).
void for_each_element(const GroupModel& g, int n,
                      const std::function<void(const WreathElement&)>& visit);

/// |{a^M : a in G wr S_n}| by full enumeration. M may be composite.
long long power_image_count(const GroupModel& g, int n, unsigned long long M);

struct OracleReport {
    long long checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// element_type(a^r) == power_type(element_type(a)) for every element.
OracleReport verify_power_type_lemma(const GroupModel& g, int n, unsigned r);

/// Conjugation orbits coincide with grouping by type, and orbit sizes match
/// the centralizer formula.
OracleReport verify_conjugacy_types(const GroupModel& g, int n);

}  // namespace wreath
