#pragma once

#include "wreath/groups.hpp"
#include "wreath/numeric.hpp"
#include "wreath/partitions.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wreath {

/// Conjugacy type of an element of G wr S_n: an s x n matrix a_{ij} with
/// sum_{i,j} j*a_{ij} = n. Rows are G-class indices (0-based), columns are
/// cycle lengths (1-based). Only nonzero entries are stored.
struct TypeMatrix {
    int s = 0;
    int n = 0;
    std::map<std::pair<int, int>, long long> entries;  // (row, col) -> a_{ij} > 0

    long long at(int row, int col) const {
        auto it = entries.find({row, col});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int row, int col, long long v);

    bool operator==(const TypeMatrix&) const = default;
    auto operator<=>(const TypeMatrix&) const = default;
};

struct WreathClassInfo {
    TypeMatrix type;
    BigInt centralizer_size;
    BigInt class_size;
    Rational class_probability;
};

/// Every valid s x n type matrix exactly once, sorted lexicographically on
/// the dense row-major reading.
std::vector<TypeMatrix> enumerate_types(int s, int n);

BigInt centralizer_size(const TypeMatrix& t, const std::vector<long long>& class_sizes,
                        long long group_order);

WreathClassInfo class_info(const TypeMatrix& t, const ClassStructure& cs);

/// Type of g^r given the type of g (r prime): column rj feeds column j
/// multiplied by r; for columns j not divisible by r, rows whose class
/// powers into class i also contribute at column j.
TypeMatrix power_type(const TypeMatrix& t, unsigned r, const ClassStructure& cs);

/// Characterization of r-th-power classes: every entry in a non-power-class
/// row and every entry in a column divisible by r must be divisible by r.
bool is_rth_power_type(const TypeMatrix& t, unsigned r, const ClassLabeling& lab);

/// Constructive r-th root at the type level: returns T' with
/// power_type(T', r, cs) == t. Requires is_rth_power_type(t, r, lab).
TypeMatrix preimage_type(const TypeMatrix& t, unsigned r, const ClassStructure& cs,
                         const ClassLabeling& lab);

/// Number of conjugacy classes of G wr S_n when G has s classes:
/// sum over compositions n_1+...+n_s = n of p(n_1)...p(n_s).
BigInt count_classes(int s, int n);

/// Number of r-th-power conjugacy classes by the product-sum formula with
/// p_r factors for the d non-power classes and p_r' factors for the rest.
BigInt count_power_classes_formula(const ClassStructure& cs, int n, unsigned r);

BigInt count_power_elements(const ClassStructure& cs, int n, unsigned r);
Rational prob_r_wreath(const ClassStructure& cs, int n, unsigned r);

/// One (type, probability) term per conjugacy class; probabilities sum to 1.
std::vector<std::pair<TypeMatrix, Rational>> cycle_index_polynomial(const ClassStructure& cs, int n);

struct PlateauPair {
    int n;
    Rational p_n;
    Rational p_n_plus_1;
    bool equal;
};

struct PlateauReport {
    std::vector<PlateauPair> pairs;
    bool all_pass = true;
};

/// Checks P_r(G wr S_{n+1}) = P_r(G wr S_n) for all n <= n_max with
/// n != -1 (mod r). Requires gcd(r, |G|) = 1.
PlateauReport verify_plateau(const ClassStructure& cs, unsigned r, int n_max);

std::string format_type_matrix(const TypeMatrix& t);
TypeMatrix parse_type_matrix(const std::string& text);

}  // namespace wreath
