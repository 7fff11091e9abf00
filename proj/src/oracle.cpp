#include "wreath/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wreath {

namespace {
constexpr long long kEnumerationGuard = 1'000'000;

std::vector<int> perm_inverse(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return inv;
}
}  // namespace

WreathElement wreath_identity(int n) {
    WreathElement e;
    e.f.assign(static_cast<size_t>(n), 0);
    e.pi.resize(static_cast<size_t>(n));
    std::iota(e.pi.begin(), e.pi.end(), 0);
    return e;
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b, const GroupModel& g) {
    if (a.n() != b.n()) throw std::invalid_argument("wreath elements have different degrees");
    const int n = a.n();
    auto a_inv = perm_inverse(a.pi);
    WreathElement c;
    c.f.resize(static_cast<size_t>(n));
    c.pi.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // (f f'_pi)(i) = f(i) * f'(pi^{-1}(i))
        c.f[static_cast<size_t>(i)] =
            g.multiply(a.f[static_cast<size_t>(i)], b.f[static_cast<size_t>(a_inv[static_cast<size_t>(i)])]);
        c.pi[static_cast<size_t>(i)] = a.pi[static_cast<size_t>(b.pi[static_cast<size_t>(i)])];
    }
    return c;
}

WreathElement wreath_inverse(const WreathElement& a, const GroupModel& g) {
    const int n = a.n();
    WreathElement inv;
    inv.pi = perm_inverse(a.pi);
    inv.f.resize(static_cast<size_t>(n));
    // (f^{-1}_{pi^{-1}})(i) = f(pi(i))^{-1}
    for (int i = 0; i < n; ++i)
        inv.f[static_cast<size_t>(i)] = g.inverse(a.f[static_cast<size_t>(a.pi[static_cast<size_t>(i)])]);
    return inv;
}

WreathElement wreath_power(const WreathElement& a, unsigned long long M, const GroupModel& g) {
    WreathElement acc = wreath_identity(a.n());
    for (unsigned long long k = 0; k < M; ++k) acc = wreath_multiply(acc, a, g);
    return acc;
}

TypeMatrix element_type(const WreathElement& a, const ClassStructure& cs) {
    const int n = a.n();
    auto inv = perm_inverse(a.pi);
    TypeMatrix t;
    t.s = cs.num_classes();
    t.n = n;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        // cycle product f(j) f(pi^{-1} j) f(pi^{-2} j) ...
        int len = 0;
        int prod = 0;
        int pos = start;
        do {
            seen[static_cast<size_t>(pos)] = true;
            prod = cs.group().multiply(prod, a.f[static_cast<size_t>(pos)]);
            pos = inv[static_cast<size_t>(pos)];
            ++len;
        } while (pos != start);
        t.add(cs.class_of(prod), len, 1);
    }
    return t;
}

void for_each_element(const GroupModel& g, int n,
                      const std::function<void(const WreathElement&)>& visit) {
    BigInt total = big_pow(g.order(), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
    if (total > kEnumerationGuard)
        throw std::invalid_argument("enumeration guard exceeded: |G|^n n! = " + total.str());
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    WreathElement e;
    e.pi = perm;
    e.f.assign(static_cast<size_t>(n), 0);
    do {
        e.pi = perm;
        std::fill(e.f.begin(), e.f.end(), 0);
        while (true) {
            visit(e);
            // odometer over f
            int pos = n - 1;
            while (pos >= 0) {
                if (++e.f[static_cast<size_t>(pos)] < g.order()) break;
                e.f[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

long long power_image_count(const GroupModel& g, int n, unsigned long long M) {
    std::set<WreathElement> image;
    for_each_element(g, n, [&](const WreathElement& e) { image.insert(wreath_power(e, M, g)); });
    return static_cast<long long>(image.size());
}

OracleReport verify_power_type_lemma(const GroupModel& g, int n, unsigned r) {
    require_prime(r);
    ClassStructure cs(g);
    OracleReport report;
    for_each_element(g, n, [&](const WreathElement& e) {
        ++report.checked;
        auto direct = element_type(wreath_power(e, r, g), cs);
        auto predicted = power_type(element_type(e, cs), r, cs);
        if (direct != predicted) {
            std::ostringstream os;
            os << "type mismatch: element with type " << format_type_matrix(element_type(e, cs))
               << " powers to " << format_type_matrix(direct) << " but lemma predicts "
               << format_type_matrix(predicted);
            report.failures.push_back(os.str());
        }
    });
    return report;
}

OracleReport verify_conjugacy_types(const GroupModel& g, int n) {
    ClassStructure cs(g);
    OracleReport report;
    std::vector<WreathElement> all;
    for_each_element(g, n, [&](const WreathElement& e) { all.push_back(e); });
    report.checked = static_cast<long long>(all.size());

    // orbit of each element under explicit conjugation
    std::map<WreathElement, int> orbit_of;
    int next_orbit = 0;
    for (const auto& e : all) {
        if (orbit_of.contains(e)) continue;
        int id = next_orbit++;
        for (const auto& t : all) {
            auto conj = wreath_multiply(wreath_multiply(t, e, g), wreath_inverse(t, g), g);
            orbit_of[conj] = id;
        }
    }

    std::map<int, std::set<TypeMatrix>> orbit_types;
    std::map<TypeMatrix, std::set<int>> type_orbits;
    std::map<int, long long> orbit_sizes;
    for (const auto& e : all) {
        int id = orbit_of.at(e);
        auto t = element_type(e, cs);
        orbit_types[id].insert(t);
        type_orbits[t].insert(id);
        orbit_sizes[id] += 1;
    }
    for (auto& [id, types] : orbit_types)
        if (types.size() != 1)
            report.failures.push_back("orbit " + std::to_string(id) + " contains multiple types");
    for (auto& [t, orbits] : type_orbits) {
        if (orbits.size() != 1) {
            report.failures.push_back("type " + format_type_matrix(t) + " spans multiple orbits");
            continue;
        }
        BigInt expected = class_info(t, cs).class_size;
        if (expected != orbit_sizes.at(*orbits.begin()))
            report.failures.push_back("type " + format_type_matrix(t) + " orbit size " +
                                      std::to_string(orbit_sizes.at(*orbits.begin())) +
                                      " != centralizer-formula size " + expected.str());
    }
    return report;
}

}  // namespace wreath
