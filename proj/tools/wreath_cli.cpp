// Command-line surface for class-level power computations in G wr S_n.

#include "wreath/groups.hpp"
#include "wreath/numeric.hpp"
#include "wreath/oracle.hpp"
#include "wreath/partitions.hpp"
#include "wreath/series.hpp"
#include "wreath/wreath_core.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

using namespace wreath;

namespace {

// "C:m" / "S:m" / "D:m" / "1" or a path to a group file
GroupModel resolve_group(const std::string& spec) {
    if (spec == "1") return catalog_group(CatalogKind::Trivial, 1);
    if (spec.size() > 2 && spec[1] == ':') {
        int m = 0;
        try {
            m = std::stoi(spec.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad group spec: " + spec);
        }
        switch (spec[0]) {
            case 'C': return catalog_group(CatalogKind::Cyclic, m);
            case 'S': return catalog_group(CatalogKind::Symmetric, m);
            case 'D': return catalog_group(CatalogKind::Dihedral, m);
            default: throw std::invalid_argument("bad group spec: " + spec);
        }
    }
    return build_from_cayley_file(spec);
}

bool coprime(unsigned r, long long order) {
    return std::gcd(static_cast<long long>(r), order) == 1;
}

int cmd_classes(const std::string& gspec, int n) {
    ClassStructure cs(resolve_group(gspec));
    std::cout << "type\tclass_size\tcentralizer_size\n";
    BigInt cc = 0;
    for (const auto& t : enumerate_types(cs.num_classes(), n)) {
        auto info = class_info(t, cs);
        std::cout << format_type_matrix(t) << '\t' << info.class_size << '\t'
                  << info.centralizer_size << '\n';
        ++cc;
    }
    BigInt total = big_pow(cs.group().order(), static_cast<unsigned>(n)) *
                   factorial(static_cast<unsigned>(n));
    std::cout << "CC\t" << cc << "\ttotal_order\t" << total << '\n';
    return 0;
}

int cmd_powers(const std::string& gspec, int n, unsigned r) {
    require_prime(r);
    ClassStructure cs(resolve_group(gspec));
    auto lab = nonpower_classes(cs, r);
    std::cout << "type\tclass_size\tcentralizer_size\n";
    BigInt filter_count = 0, omega = 0;
    for (const auto& t : enumerate_types(cs.num_classes(), n)) {
        if (!is_rth_power_type(t, r, lab)) continue;
        auto info = class_info(t, cs);
        std::cout << format_type_matrix(t) << '\t' << info.class_size << '\t'
                  << info.centralizer_size << '\n';
        ++filter_count;
        omega += info.class_size;
    }
    BigInt formula = count_power_classes_formula(cs, n, r);
    if (formula != filter_count) {
        std::cerr << "internal failure: formula count " << formula << " != filter count "
                  << filter_count << '\n';
        return 1;
    }
    BigInt total = big_pow(cs.group().order(), static_cast<unsigned>(n)) *
                   factorial(static_cast<unsigned>(n));
    std::cout << "CC\t" << count_classes(cs.num_classes(), n) << '\n';
    std::cout << "CC_r_filter\t" << filter_count << '\n';
    std::cout << "CC_r_formula\t" << formula << '\n';
    std::cout << "omega_r\t" << omega << '\n';
    std::cout << "P_r\t" << Rational(omega, total) << '\n';
    return 0;
}

int cmd_series(const std::string& which, const std::string& gspec, unsigned r, int s, int cap) {
    if (which == "partitions") {
        std::cout << format_series(genfun_partitions(cap));
        return 0;
    }
    if (which == "cc") {
        if (s < 1) throw std::invalid_argument("series cc needs --s >= 1");
        std::cout << format_series(genfun_cc(s, cap));
        return 0;
    }
    require_prime(r);
    if (which == "pr-sn") {
        ClassStructure triv(catalog_group(CatalogKind::Trivial, 1));
        std::cout << format_series(genfun_prob_wreath(triv, r, cap));
        return 0;
    }
    ClassStructure cs(resolve_group(gspec));
    if (which == "ccr") {
        std::cout << format_series(genfun_cc_r(cs, r, cap));
        return 0;
    }
    if (which == "pr") {
        auto f = genfun_prob_wreath(cs, r, cap);
        std::cout << format_series(f);
        if (coprime(r, cs.group().order())) {
            auto rep = check_plateau_series(f, r);
            std::cout << "plateau\t" << (rep.pass() ? "PASS" : "FAIL") << '\n';
            if (!rep.pass()) return 1;
        }
        return 0;
    }
    throw std::invalid_argument("unknown series kind: " + which);
}

int report_outcome(const OracleReport& rep, const std::string& label) {
    for (const auto& f : rep.failures) std::cout << "FAIL\t" << label << '\t' << f << '\n';
    if (rep.pass()) {
        std::cout << "PASS\t" << label << '\t' << rep.checked << " elements\n";
        return 0;
    }
    return 1;
}

int cmd_verify(const std::string& target, const std::string& gspec, unsigned r, int n, int n_max) {
    auto g = resolve_group(gspec);
    if (target == "lemma-4.2") {
        require_prime(r);
        return report_outcome(verify_power_type_lemma(g, n, r), target);
    }
    if (target == "prop-3.1") {
        return report_outcome(verify_conjugacy_types(g, n), target);
    }
    if (target == "prop-4.3") {
        require_prime(r);
        ClassStructure cs(g);
        auto lab = nonpower_classes(cs, r);
        std::set<TypeMatrix> image_types;
        OracleReport rep;
        for_each_element(g, n, [&](const WreathElement& e) {
            ++rep.checked;
            image_types.insert(element_type(wreath_power(e, r, g), cs));
        });
        std::set<TypeMatrix> passing;
        for (const auto& t : enumerate_types(cs.num_classes(), n))
            if (is_rth_power_type(t, r, lab)) passing.insert(t);
        if (image_types != passing)
            rep.failures.push_back("image types and characterization disagree");
        return report_outcome(rep, target);
    }
    if (target == "theorem-5.4") {
        require_prime(r);
        if (!coprime(r, g.order())) {
            std::cout << "REFUSED\ttheorem-5.4\thypothesis gcd(r,|G|)=1 fails for r=" << r
                      << ", |G|=" << g.order() << '\n';
            return 2;
        }
        ClassStructure cs(g);
        auto rep = verify_plateau(cs, r, n_max);
        for (const auto& pair : rep.pairs)
            std::cout << (pair.equal ? "PASS" : "FAIL") << "\ttheorem-5.4\tn=" << pair.n << "\tP="
                      << pair.p_n << "\tP_next=" << pair.p_n_plus_1 << '\n';
        return rep.all_pass ? 0 : 1;
    }
    if (target == "series-vs-enum") {
        require_prime(r);
        ClassStructure cs(g);
        auto f = genfun_prob_wreath(cs, r, n_max);
        bool ok = true;
        for (int k = 1; k <= n_max; ++k) {
            bool eq = f.coeff(k) == prob_r_wreath(cs, k, r);
            std::cout << (eq ? "PASS" : "FAIL") << "\tseries-vs-enum\tn=" << k << '\t'
                      << f.coeff(k) << '\n';
            ok = ok && eq;
        }
        return ok ? 0 : 1;
    }
    throw std::invalid_argument("unknown verify target: " + target);
}

int cmd_scan(const std::string& question, unsigned r, int n, std::vector<std::string> gspecs,
             int max_order) {
    require_prime(r);
    if (n % static_cast<int>(r) != static_cast<int>(r) - 1)
        throw std::invalid_argument("scan requires n = -1 (mod r)");
    std::vector<GroupModel> groups;
    for (const auto& spec : gspecs) groups.push_back(resolve_group(spec));
    if (max_order > 0)
        for (int m = 2; m <= max_order; ++m)
            if (coprime(r, m)) groups.push_back(catalog_group(CatalogKind::Cyclic, m));
    if (groups.empty()) throw std::invalid_argument("scan needs --group or --max-order");
    for (const auto& g : groups)
        if (!coprime(r, g.order()))
            throw std::invalid_argument("scan hypothesis requires gcd(r,|G|)=1; refused for " +
                                        g.name());
    std::sort(groups.begin(), groups.end(),
              [](const GroupModel& a, const GroupModel& b) { return a.order() < b.order(); });

    Rational lower = prob_r_sn(n + 1, r);
    Rational upper = prob_r_sn(n, r);
    std::cout << "EMPIRICAL scan, no theorem asserted\n";
    if (question == "q1") {
        std::cout << "group\t|G|\tP_r(S_{n+1})\tP_r(GwrS_n)\tP_r(S_n)\tviolation\n";
        for (const auto& g : groups) {
            ClassStructure cs(g);
            Rational p = prob_r_wreath(cs, n, r);
            bool violated = p < lower || p > upper;
            std::cout << g.name() << '\t' << g.order() << '\t' << lower << '\t' << p << '\t'
                      << upper << '\t' << (violated ? "VIOLATED" : "ok") << '\n';
        }
        return 0;
    }
    if (question == "q2") {
        std::cout << "group\t|G|\tP_r(GwrS_n)\tgap\n";
        for (const auto& g : groups) {
            ClassStructure cs(g);
            Rational p = prob_r_wreath(cs, n, r);
            std::cout << g.name() << '\t' << g.order() << '\t' << p << '\t' << p - lower << '\n';
        }
        return 0;
    }
    throw std::invalid_argument("unknown scan question: " + question);
}

int cmd_oracle(const std::string& gspec, int n, unsigned long long M, bool brute) {
    if (!is_prime(static_cast<unsigned>(M)) && !brute)
        throw std::invalid_argument(
            "composite exponents bypass the class-level theory; pass --brute to run the "
            "elementwise oracle anyway");
    auto g = resolve_group(gspec);
    long long count = power_image_count(g, n, M);
    BigInt total = big_pow(g.order(), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
    std::cout << "omega_M\t" << count << '\n';
    std::cout << "P_M\t" << Rational(count, total) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact class-level power computations in wreath products G wr S_n"};
    app.require_subcommand(1);

    std::string gspec = "1", which, target, question;
    int n = 1, cap = 10, s = 0, n_max = 6, max_order = 0;
    unsigned r = 2;
    unsigned long long M = 2;
    bool brute = false;
    std::vector<std::string> gspecs;

    auto* classes = app.add_subcommand("classes", "list conjugacy classes of G wr S_n");
    classes->add_option("-g,--group", gspec, "group spec: C:m, S:m, D:m, 1, or a file path")->required();
    classes->add_option("-n", n, "degree of the wreath product")->required();

    auto* powers = app.add_subcommand("powers", "list r-th-power classes and the power probability");
    powers->add_option("-g,--group", gspec)->required();
    powers->add_option("-n", n)->required();
    powers->add_option("-r", r, "prime exponent")->required();

    auto* series = app.add_subcommand("series", "print generating-function coefficients");
    series->add_option("which", which, "pr | cc | ccr | partitions | pr-sn")->required();
    series->add_option("-g,--group", gspec);
    series->add_option("-r", r);
    series->add_option("--s", s, "number of G-classes (for cc)");
    series->add_option("--cap", cap, "truncation degree")->required();

    auto* verify = app.add_subcommand("verify", "run a cross-check; exit 0 iff all checks pass");
    verify->add_option("target", target, "lemma-4.2 | prop-3.1 | prop-4.3 | theorem-5.4 | series-vs-enum")
        ->required();
    verify->add_option("-g,--group", gspec)->required();
    verify->add_option("-r", r);
    verify->add_option("-n", n);
    verify->add_option("--n-max", n_max);

    auto* scan = app.add_subcommand("scan", "empirical sandwich scan over groups");
    scan->add_option("question", question, "q1 | q2")->required();
    scan->add_option("-r", r)->required();
    scan->add_option("-n", n)->required();
    scan->add_option("-g,--group", gspecs, "group specs (repeatable)");
    scan->add_option("--max-order", max_order, "also scan cyclic groups up to this order");

    auto* oracle = app.add_subcommand("oracle", "brute-force image count of the M-th power map");
    oracle->add_option("-g,--group", gspec)->required();
    oracle->add_option("-n", n)->required();
    oracle->add_option("-M", M, "exponent (composite needs --brute)")->required();
    oracle->add_flag("--brute", brute, "allow composite exponents");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classes->parsed()) return cmd_classes(gspec, n);
        if (powers->parsed()) return cmd_powers(gspec, n, r);
        if (series->parsed()) return cmd_series(which, gspec, r, s, cap);
        if (verify->parsed()) return cmd_verify(target, gspec, r, n, n_max);
        if (scan->parsed()) return cmd_scan(question, r, n, gspecs, max_order);
        if (oracle->parsed()) return cmd_oracle(gspec, n, M, brute);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
