#include "wreath/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace wreath {

Partition make_partition(std::map<int, long long> mults) {
    Partition p;
    for (auto& [part, mult] : mults) {
        if (part < 1) throw std::invalid_argument("part sizes must be positive");
        if (mult < 0) throw std::invalid_argument("multiplicities must be nonnegative");
        if (mult == 0) continue;
        p.mults[part] = mult;
        p.n += static_cast<long long>(part) * mult;
    }
    return p;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& parts,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        for (int part : parts) {
            p.mults[part] += 1;
            p.n += part;
        }
        out.push_back(std::move(p));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        parts.push_back(part);
        emit_partitions(remaining - part, part, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> parts;
    emit_partitions(n, n == 0 ? 1 : n, parts, out);
    return out;
}

Partition power_type_sn(const Partition& c, unsigned r) {
    require_prime(r);
    auto mult = [&](long long i) {
        auto it = c.mults.find(static_cast<int>(i));
        return it == c.mults.end() ? 0LL : it->second;
    };
    std::map<int, long long> d;
    for (int i = 1; i <= c.n; ++i) {
        long long di = (i % static_cast<int>(r) == 0)
                           ? static_cast<long long>(r) * mult(static_cast<long long>(r) * i)
                           : mult(i) + static_cast<long long>(r) * mult(static_cast<long long>(r) * i);
        if (di > 0) d[i] = di;
    }
    return make_partition(std::move(d));
}

bool is_rth_power_sn(const Partition& lambda, unsigned r) {
    require_prime(r);
    for (auto [part, mult] : lambda.mults)
        if (part % static_cast<int>(r) == 0 && mult % static_cast<long long>(r) != 0) return false;
    return true;
}

BigInt sn_class_size(const Partition& lambda) {
    BigInt denom = 1;
    for (auto [part, mult] : lambda.mults)
        denom *= big_pow(part, static_cast<unsigned>(mult)) * factorial(static_cast<unsigned>(mult));
    return factorial(static_cast<unsigned>(lambda.n)) / denom;
}

BigInt count_p(int n) { return static_cast<long long>(partitions_of(n).size()); }

BigInt count_p_r(int n, unsigned r) {
    require_prime(r);
    long long count = 0;
    for (const auto& p : partitions_of(n)) {
        bool ok = true;
        for (auto [part, mult] : p.mults)
            if (mult % static_cast<long long>(r) != 0) { ok = false; break; }
        if (ok) ++count;
    }
    return count;
}

BigInt count_p_r_prime(int n, unsigned r) {
    require_prime(r);
    long long count = 0;
    for (const auto& p : partitions_of(n))
        if (is_rth_power_sn(p, r)) ++count;
    return count;
}

Rational prob_r_sn(int n, unsigned r) {
    require_prime(r);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    BigInt power_elements = 0;
    for (const auto& lambda : partitions_of(n))
        if (is_rth_power_sn(lambda, r)) power_elements += sn_class_size(lambda);
    return Rational(power_elements, factorial(static_cast<unsigned>(n)));
}

std::string format_partition(const Partition& p) {
    if (p.mults.empty()) return "()";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.mults.rbegin(); it != p.mults.rend(); ++it) {
        if (!first) os << ' ';
        os << it->first << '^' << it->second;
        first = false;
    }
    return os.str();
}

Partition parse_partition(const std::string& text) {
    if (text == "()") return Partition{};
    std::istringstream is(text);
    std::map<int, long long> mults;
    std::string tok;
    while (is >> tok) {
        auto caret = tok.find('^');
        int part;
        long long mult = 1;
        try {
            if (caret == std::string::npos) {
                part = std::stoi(tok);
            } else {
                part = std::stoi(tok.substr(0, caret));
                mult = std::stoll(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition token: '" + tok + "'");
        }
        mults[part] += mult;
    }
    return make_partition(std::move(mults));
}

}  // namespace wreath
