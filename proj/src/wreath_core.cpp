#include "wreath/wreath_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreath {

void TypeMatrix::add(int row, int col, long long v) {
    if (v == 0) return;
    auto key = std::make_pair(row, col);
    long long nv = entries[key] + v;
    if (nv == 0) entries.erase(key);
    else entries[key] = nv;
}

namespace {

long long weight(const TypeMatrix& t) {
    long long w = 0;
    for (auto& [key, v] : t.entries) w += static_cast<long long>(key.second) * v;
    return w;
}

void check_valid(const TypeMatrix& t) {
    for (auto& [key, v] : t.entries) {
        auto [row, col] = key;
        if (row < 0 || row >= t.s || col < 1 || col > t.n || v < 0)
            throw std::invalid_argument("type matrix entry out of range");
    }
    if (weight(t) != t.n) throw std::invalid_argument("type matrix weight does not equal n");
}

std::vector<long long> dense_reading(const TypeMatrix& t) {
    std::vector<long long> d(static_cast<size_t>(t.s) * t.n, 0);
    for (auto& [key, v] : t.entries)
        d[static_cast<size_t>(key.first) * t.n + (key.second - 1)] = v;
    return d;
}

void fill_rows(int row, int s, int n, int remaining, TypeMatrix& acc,
               std::vector<TypeMatrix>& out) {
    if (row == s) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    // last row takes whatever is left, earlier rows take any n_i <= remaining
    for (int ni = (row == s - 1 ? remaining : 0); ni <= remaining; ++ni) {
        for (const auto& lambda : partitions_of(ni)) {
            for (auto [part, mult] : lambda.mults) acc.add(row, part, mult);
            fill_rows(row + 1, s, n, remaining - ni, acc, out);
            for (auto [part, mult] : lambda.mults) acc.add(row, part, -mult);
        }
        if (row == s - 1) break;
    }
}

}  // namespace

std::vector<TypeMatrix> enumerate_types(int s, int n) {
    if (s < 1 || n < 1) throw std::invalid_argument("enumerate_types requires s >= 1, n >= 1");
    std::vector<TypeMatrix> out;
    TypeMatrix acc;
    acc.s = s;
    acc.n = n;
    fill_rows(0, s, n, n, acc, out);
    std::sort(out.begin(), out.end(), [](const TypeMatrix& a, const TypeMatrix& b) {
        return dense_reading(a) < dense_reading(b);
    });
    return out;
}

BigInt centralizer_size(const TypeMatrix& t, const std::vector<long long>& class_sizes,
                        long long group_order) {
    BigInt z = 1;
    for (auto& [key, a] : t.entries) {
        auto [row, col] = key;
        long long csize = class_sizes.at(static_cast<size_t>(row));
        if (group_order % csize != 0)
            throw std::invalid_argument("class size does not divide group order");
        BigInt base = static_cast<long long>(col) * group_order / csize;
        z *= factorial(static_cast<unsigned>(a)) * big_pow(base, static_cast<unsigned>(a));
    }
    return z;
}

WreathClassInfo class_info(const TypeMatrix& t, const ClassStructure& cs) {
    std::vector<long long> sizes;
    for (int c = 0; c < cs.num_classes(); ++c) sizes.push_back(cs.size(c));
    WreathClassInfo info;
    info.type = t;
    info.centralizer_size = centralizer_size(t, sizes, cs.group().order());
    BigInt total = big_pow(cs.group().order(), static_cast<unsigned>(t.n)) *
                   factorial(static_cast<unsigned>(t.n));
    info.class_size = total / info.centralizer_size;
    info.class_probability = Rational(info.class_size, total);
    return info;
}

TypeMatrix power_type(const TypeMatrix& t, unsigned r, const ClassStructure& cs) {
    require_prime(r);
    if (t.s != cs.num_classes())
        throw std::invalid_argument("type matrix row count does not match class count");
    check_valid(t);
    auto pm = cs.power_map(r);
    const int ri = static_cast<int>(r);

    TypeMatrix out;
    out.s = t.s;
    out.n = t.n;
    for (auto& [key, a] : t.entries) {
        auto [row, col] = key;
        if (col % ri == 0) {
            // an rj-cycle splits into r j-cycles in the same class
            out.add(row, col / ri, static_cast<long long>(r) * a);
        } else {
            // a j-cycle with r not dividing j stays a j-cycle; its cycle
            // product moves to the r-th-power class of its class
            out.add(pm[static_cast<size_t>(row)], col, a);
        }
    }
    check_valid(out);
    return out;
}

bool is_rth_power_type(const TypeMatrix& t, unsigned r, const ClassLabeling& lab) {
    require_prime(r);
    if (lab.r != r) throw std::invalid_argument("labeling was built for a different exponent");
    const int ri = static_cast<int>(r);
    for (auto& [key, a] : t.entries) {
        auto [row, col] = key;
        if ((col % ri == 0 || lab.is_nonpower[static_cast<size_t>(row)]) &&
            a % static_cast<long long>(r) != 0)
            return false;
    }
    return true;
}

TypeMatrix preimage_type(const TypeMatrix& t, unsigned r, const ClassStructure& cs,
                         const ClassLabeling& lab) {
    require_prime(r);
    if (!is_rth_power_type(t, r, lab))
        throw std::invalid_argument("type is not an r-th power; no preimage exists");
    auto pm = cs.power_map(r);
    const int s = cs.num_classes();
    const int ri = static_cast<int>(r);

    // least-index r-th root of each power class
    std::vector<int> root(static_cast<size_t>(s), -1);
    for (int k = s - 1; k >= 0; --k) root[static_cast<size_t>(pm[static_cast<size_t>(k)])] = k;

    TypeMatrix pre;
    pre.s = t.s;
    pre.n = t.n;
    for (auto& [key, a] : t.entries) {
        auto [row, col] = key;
        if (!lab.is_nonpower[static_cast<size_t>(row)] && col % ri != 0) {
            // keep the j-cycles, sourced from the least-index root class
            pre.add(root[static_cast<size_t>(row)], col, a);
        } else {
            // mandated-divisible entry: r j-cycles come from one rj-cycle
            pre.add(row, col * ri, a / ri);
        }
    }
    check_valid(pre);
    return pre;
}

BigInt count_classes(int s, int n) {
    if (s < 1 || n < 0) throw std::invalid_argument("count_classes requires s >= 1, n >= 0");
    // convolve the partition-count sequence s times
    std::vector<BigInt> p(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) p[static_cast<size_t>(k)] = count_p(k);
    std::vector<BigInt> acc(static_cast<size_t>(n) + 1, 0);
    acc[0] = 1;
    for (int rep = 0; rep < s; ++rep) {
        std::vector<BigInt> next(static_cast<size_t>(n) + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) next[static_cast<size_t>(a + b)] += acc[static_cast<size_t>(a)] * p[static_cast<size_t>(b)];
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(n)];
}

BigInt count_power_classes_formula(const ClassStructure& cs, int n, unsigned r) {
    require_prime(r);
    auto lab = nonpower_classes(cs, r);
    const int s = cs.num_classes();
    std::vector<BigInt> acc(static_cast<size_t>(n) + 1, 0);
    acc[0] = 1;
    for (int i = 0; i < s; ++i) {
        const bool nonpower = i < lab.d;
        std::vector<BigInt> factor(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            factor[static_cast<size_t>(k)] = nonpower ? count_p_r(k, r) : count_p_r_prime(k, r);
        std::vector<BigInt> next(static_cast<size_t>(n) + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                next[static_cast<size_t>(a + b)] += acc[static_cast<size_t>(a)] * factor[static_cast<size_t>(b)];
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(n)];
}

BigInt count_power_elements(const ClassStructure& cs, int n, unsigned r) {
    require_prime(r);
    auto lab = nonpower_classes(cs, r);
    BigInt total = 0;
    for (const auto& t : enumerate_types(cs.num_classes(), n))
        if (is_rth_power_type(t, r, lab)) total += class_info(t, cs).class_size;
    return total;
}

Rational prob_r_wreath(const ClassStructure& cs, int n, unsigned r) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    BigInt total = big_pow(cs.group().order(), static_cast<unsigned>(n)) *
                   factorial(static_cast<unsigned>(n));
    return Rational(count_power_elements(cs, n, r), total);
}

std::vector<std::pair<TypeMatrix, Rational>> cycle_index_polynomial(const ClassStructure& cs, int n) {
    std::vector<std::pair<TypeMatrix, Rational>> terms;
    for (const auto& t : enumerate_types(cs.num_classes(), n))
        terms.emplace_back(t, class_info(t, cs).class_probability);
    return terms;
}

PlateauReport verify_plateau(const ClassStructure& cs, unsigned r, int n_max) {
    require_prime(r);
    if (std::gcd(static_cast<long long>(r), static_cast<long long>(cs.group().order())) != 1)
        throw std::invalid_argument("plateau theorem requires gcd(r, |G|) = 1; group " +
                                    cs.group().name() + " has order divisible by " + std::to_string(r));
    PlateauReport report;
    Rational prev = prob_r_wreath(cs, 1, r);
    for (int n = 1; n <= n_max; ++n) {
        Rational next = prob_r_wreath(cs, n + 1, r);
        if ((n + 1) % static_cast<int>(r) != 0) {
            bool eq = next == prev;
            report.pairs.push_back({n, prev, next, eq});
            if (!eq) report.all_pass = false;
        }
        prev = next;
    }
    return report;
}

std::string format_type_matrix(const TypeMatrix& t) {
    std::ostringstream os;
    for (int row = 0; row < t.s; ++row) {
        if (row) os << ';';
        for (int col = 1; col <= t.n; ++col) {
            if (col > 1) os << ',';
            os << t.at(row, col);
        }
    }
    return os.str();
}

TypeMatrix parse_type_matrix(const std::string& text) {
    TypeMatrix t;
    std::istringstream rows(text);
    std::string rowtext;
    int n = -1;
    std::vector<std::vector<long long>> dense;
    while (std::getline(rows, rowtext, ';')) {
        std::vector<long long> row;
        std::istringstream cells(rowtext);
        std::string cell;
        while (std::getline(cells, cell, ','))
            row.push_back(std::stoll(cell));
        if (n < 0) n = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("type matrix rows have unequal length");
        dense.push_back(std::move(row));
    }
    if (dense.empty()) throw std::invalid_argument("empty type matrix");
    t.s = static_cast<int>(dense.size());
    t.n = n;
    for (int row = 0; row < t.s; ++row)
        for (int col = 1; col <= n; ++col)
            t.add(row, col, dense[static_cast<size_t>(row)][static_cast<size_t>(col - 1)]);
    check_valid(t);
    return t;
}

}  // namespace wreath
