#include "wreath/groups.hpp"

#include "wreath/numeric.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wreath {

GroupModel::GroupModel(std::vector<std::string> labels, std::vector<int> table, std::string name)
    : order_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)),
      name_(std::move(name)) {
    if (order_ < 1) throw std::invalid_argument("group must have at least one element");
    if (table_.size() != static_cast<size_t>(order_) * order_)
        throw std::invalid_argument("multiplication table has wrong size");
    validate();
    inverse_.assign(static_cast<size_t>(order_), -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (multiply(a, b) == 0) {
                inverse_[static_cast<size_t>(a)] = b;
                break;
            }
        }
        if (inverse_[static_cast<size_t>(a)] < 0 || multiply(inverse_[static_cast<size_t>(a)], a) != 0)
            throw std::invalid_argument("element '" + labels_[static_cast<size_t>(a)] +
                                        "' has no two-sided inverse");
    }
}

void GroupModel::validate() const {
    const int m = order_;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int v = multiply(a, b);
            if (v < 0 || v >= m)
                throw std::invalid_argument("table entry out of range at row " + labels_[static_cast<size_t>(a)] +
                                            ", column " + labels_[static_cast<size_t>(b)]);
        }
    // identity must be two-sided
    for (int a = 0; a < m; ++a)
        if (multiply(0, a) != a || multiply(a, 0) != a)
            throw std::invalid_argument("first element is not a two-sided identity (fails at '" +
                                        labels_[static_cast<size_t>(a)] + "')");
    // each row and column a permutation
    for (int a = 0; a < m; ++a) {
        std::vector<bool> row(static_cast<size_t>(m), false), col(static_cast<size_t>(m), false);
        for (int b = 0; b < m; ++b) {
            if (row[static_cast<size_t>(multiply(a, b))])
                throw std::invalid_argument("row '" + labels_[static_cast<size_t>(a)] + "' repeats an entry");
            row[static_cast<size_t>(multiply(a, b))] = true;
            if (col[static_cast<size_t>(multiply(b, a))])
                throw std::invalid_argument("column '" + labels_[static_cast<size_t>(a)] + "' repeats an entry");
            col[static_cast<size_t>(multiply(b, a))] = true;
        }
    }
    // associativity, exhaustively (catalog scale)
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                    throw std::invalid_argument(
                        "table is not associative at triple (" + labels_[static_cast<size_t>(a)] + ", " +
                        labels_[static_cast<size_t>(b)] + ", " + labels_[static_cast<size_t>(c)] + ")");
}

int GroupModel::power(int x, unsigned long long m) const {
    int acc = 0;
    for (unsigned long long k = 0; k < m; ++k) acc = multiply(acc, x);
    return acc;
}

ClassStructure::ClassStructure(GroupModel g) : group_(std::move(g)) {
    const GroupModel& gr = group_;
    const int m = gr.order();
    class_of_.assign(static_cast<size_t>(m), -1);
    for (int x = 0; x < m; ++x) {
        if (class_of_[static_cast<size_t>(x)] >= 0) continue;
        std::set<int> orbit;
        for (int t = 0; t < m; ++t) orbit.insert(gr.multiply(gr.multiply(t, x), gr.inverse(t)));
        int idx = static_cast<int>(members_.size());
        members_.emplace_back(orbit.begin(), orbit.end());
        for (int y : members_.back()) class_of_[static_cast<size_t>(y)] = idx;
    }
    // classes are discovered in order of least member, members come sorted
    // from the set; nothing further to normalize.
}

std::vector<int> ClassStructure::power_map(unsigned M) const {
    std::vector<int> pm(static_cast<size_t>(num_classes()), -1);
    for (int c = 0; c < num_classes(); ++c) {
        int target = -1;
        for (int x : members_[static_cast<size_t>(c)]) {
            int t = class_of_[static_cast<size_t>(group_.power(x, M))];
            if (target < 0) target = t;
            else if (t != target)
                throw std::logic_error("power map not well defined on class " + std::to_string(c));
        }
        pm[static_cast<size_t>(c)] = target;
    }
    return pm;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

GroupModel build_from_cayley(std::istream& in, const std::string& source_name) {
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, out)) {
            size_t pos = out.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (out[pos] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line))
        throw std::invalid_argument(source_name + ": missing order line");
    int m = 0;
    try {
        m = std::stoi(line);
    } catch (const std::exception&) {
        throw std::invalid_argument(source_name + ": order line is not an integer: '" + line + "'");
    }
    if (m < 1) throw std::invalid_argument(source_name + ": group order must be positive");

    if (!next_line(line)) throw std::invalid_argument(source_name + ": missing element name line");
    auto labels = tokenize(line);
    if (static_cast<int>(labels.size()) != m)
        throw std::invalid_argument(source_name + ": expected " + std::to_string(m) +
                                    " element names, got " + std::to_string(labels.size()));
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != m)
        throw std::invalid_argument(source_name + ": element names are not distinct");

    auto index_of = [&](const std::string& name, int row) -> int {
        for (int k = 0; k < m; ++k)
            if (labels[static_cast<size_t>(k)] == name) return k;
        throw std::invalid_argument(source_name + ": unknown element '" + name + "' in table row " +
                                    std::to_string(row + 1));
    };

    std::vector<int> table(static_cast<size_t>(m) * m, -1);
    for (int row = 0; row < m; ++row) {
        if (!next_line(line))
            throw std::invalid_argument(source_name + ": table row " + std::to_string(row + 1) + " missing");
        auto toks = tokenize(line);
        if (static_cast<int>(toks.size()) != m)
            throw std::invalid_argument(source_name + ": table row " + std::to_string(row + 1) + " has " +
                                        std::to_string(toks.size()) + " entries, expected " + std::to_string(m));
        for (int col = 0; col < m; ++col)
            table[static_cast<size_t>(row) * m + col] = index_of(toks[static_cast<size_t>(col)], row);
    }
    return GroupModel(std::move(labels), std::move(table), source_name);
}

GroupModel build_from_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file: " + path);
    return build_from_cayley(in, path);
}

namespace {

GroupModel make_cyclic(int m) {
    std::vector<std::string> labels;
    std::vector<int> table(static_cast<size_t>(m) * m);
    for (int k = 0; k < m; ++k) labels.push_back("g" + std::to_string(k));
    labels[0] = "e";
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[static_cast<size_t>(a) * m + b] = (a + b) % m;
    return GroupModel(std::move(labels), std::move(table), "C" + std::to_string(m));
}

GroupModel make_symmetric(int m) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // put the identity first (it already is in lexicographic order)
    const int ord = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::string> labels;
    for (const auto& q : perms) {
        std::string s = "[";
        for (int i = 0; i < m; ++i) s += std::to_string(q[static_cast<size_t>(i)] + 1);
        s += "]";
        labels.push_back(s);
    }
    std::vector<int> table(static_cast<size_t>(ord) * ord);
    std::vector<int> comp(static_cast<size_t>(m));
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b) {
            for (int i = 0; i < m; ++i)
                comp[static_cast<size_t>(i)] =
                    perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
            table[static_cast<size_t>(a) * ord + b] = index_of(comp);
        }
    return GroupModel(std::move(labels), std::move(table), "S" + std::to_string(m));
}

GroupModel make_dihedral(int m) {
    // elements r^k and s r^k, k = 0..m-1; encode as k and m+k
    const int ord = 2 * m;
    // s^ea r^ka * s^eb r^kb = s^(ea+eb) r^(kb + (-1)^eb ka)
    auto mul = [m](int a, int b) {
        bool fa = a >= m, fb = b >= m;
        int ka = a % m, kb = b % m;
        int k = fb ? (kb - ka % m + m) % m : (ka + kb) % m;
        return (fa != fb ? m : 0) + k;
    };
    std::vector<std::string> labels;
    for (int k = 0; k < m; ++k) labels.push_back(k == 0 ? "e" : "r" + std::to_string(k));
    for (int k = 0; k < m; ++k) labels.push_back(k == 0 ? "s" : "sr" + std::to_string(k));
    std::vector<int> table(static_cast<size_t>(ord) * ord);
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b) table[static_cast<size_t>(a) * ord + b] = mul(a, b);
    return GroupModel(std::move(labels), std::move(table), "D" + std::to_string(m));
}

}  // namespace

GroupModel catalog_group(CatalogKind kind, int m) {
    switch (kind) {
        case CatalogKind::Trivial:
            if (m != 1) throw std::invalid_argument("trivial group has order 1");
            return GroupModel({"e"}, {0}, "1");
        case CatalogKind::Cyclic:
            if (m < 1) throw std::invalid_argument("cyclic group order must be >= 1");
            return make_cyclic(m);
        case CatalogKind::Symmetric:
            if (m < 1 || m > 6)
                throw std::invalid_argument("symmetric group degree must be in 1..6");
            return make_symmetric(m);
        case CatalogKind::Dihedral:
            if (m < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
            return make_dihedral(m);
    }
    throw std::invalid_argument("unknown catalog kind");
}

ClassLabeling nonpower_classes(const ClassStructure& cs, unsigned r) {
    require_prime(r);
    auto pm = cs.power_map(r);
    const int s = cs.num_classes();
    std::vector<bool> in_image(static_cast<size_t>(s), false);
    for (int c = 0; c < s; ++c) in_image[static_cast<size_t>(pm[static_cast<size_t>(c)])] = true;
    ClassLabeling lab;
    lab.r = r;
    lab.is_nonpower.assign(static_cast<size_t>(s), false);
    for (int c = 0; c < s; ++c)
        if (!in_image[static_cast<size_t>(c)]) {
            lab.is_nonpower[static_cast<size_t>(c)] = true;
            lab.order.push_back(c);
        }
    lab.d = static_cast<int>(lab.order.size());
    for (int c = 0; c < s; ++c)
        if (in_image[static_cast<size_t>(c)]) lab.order.push_back(c);
    return lab;
}

bool is_power_surjective(const GroupModel& g, unsigned M) {
    std::set<int> image;
    for (int x = 0; x < g.order(); ++x) image.insert(g.power(x, M));
    return static_cast<int>(image.size()) == g.order();
}

}  // namespace wreath
