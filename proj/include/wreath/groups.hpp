#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace wreath {

/// A finite group given by its full multiplication table.
/// Elements are indices 0..order-1; index 0 is always the identity.
class GroupModel {
public:
    GroupModel(std::vector<std::string> labels, std::vector<int> table, std::string name);

    int order() const { return order_; }
    const std::string& name() const { return name_; }
    const std::string& label(int x) const { return labels_.at(static_cast<size_t>(x)); }

    int multiply(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
    int identity() const { return 0; }
    int inverse(int x) const { return inverse_[static_cast<size_t>(x)]; }

    int power(int x, unsigned long long m) const;

private:
    void validate() const;

    int order_;
    std::vector<std::string> labels_;
    std::vector<int> table_;  // row-major, table_[a*order+b] = a*b
    std::vector<int> inverse_;
    std::string name_;
};

/// Conjugacy classes of a GroupModel, in canonical order: each class is the
/// sorted list of its members, classes sorted by least member. Class 0 is
/// always the identity class.
class ClassStructure {
public:
    explicit ClassStructure(GroupModel g);

    const GroupModel& group() const { return group_; }
    int num_classes() const { return static_cast<int>(members_.size()); }
    const std::vector<std::vector<int>>& members() const { return members_; }
    long long size(int c) const { return static_cast<long long>(members_[static_cast<size_t>(c)].size()); }
    int representative(int c) const { return members_[static_cast<size_t>(c)].front(); }
    int class_of(int x) const { return class_of_[static_cast<size_t>(x)]; }

    /// Class index of x^M for any x in class c. Well-definedness is checked
    /// exhaustively over the class members on first use.
    std::vector<int> power_map(unsigned M) const;

private:
    GroupModel group_;
    std::vector<std::vector<int>> members_;
    std::vector<int> class_of_;
};

/// Relabeling of the classes of G placing the classes that are not r-th
/// powers first; d counts them.
struct ClassLabeling {
    unsigned r = 2;
    int d = 0;                    // number of non-power classes
    std::vector<int> order;       // position -> original class index, non-powers first
    std::vector<bool> is_nonpower;  // indexed by original class index
};

GroupModel build_from_cayley(std::istream& in, const std::string& source_name = "<stream>");
GroupModel build_from_cayley_file(const std::string& path);

enum class CatalogKind { Trivial, Cyclic, Symmetric, Dihedral };

GroupModel catalog_group(CatalogKind kind, int m);

ClassLabeling nonpower_classes(const ClassStructure& cs, unsigned r);

/// Whether x -> x^M is onto, by exhaustive evaluation.
bool is_power_surjective(const GroupModel& g, unsigned M);

}  // namespace wreath
