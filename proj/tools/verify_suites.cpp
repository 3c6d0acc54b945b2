#include "verify_suites.hpp"

#include <iostream>
#include <set>
#include <sstream>

#include <nott/json_io.hpp>
#include <nott/sampling.hpp>

namespace nott::suites {

namespace {

struct Tally {
    int failed = 0;

    void check(bool ok, const std::string& what, const std::string& witness = {}) {
        if (ok) {
            std::cout << "PASS " << what << "\n";
        } else {
            ++failed;
            std::cout << "FAIL " << what;
            if (!witness.empty()) std::cout << " -- " << witness;
            std::cout << "\n";
        }
    }
};

std::vector<u32> valid_m_values(u32 p, u32 limit) {
    std::vector<u32> ms;
    for (u32 m = 2 * p; m <= limit; ++m) {
        if (validate_type(p, 2, m)) ms.push_back(m);
    }
    return ms;
}

std::string issues_text(const ClassReport& report) {
    std::ostringstream os;
    for (const auto& issue : report.issues) os << issue.check << " (" << issue.witness << "); ";
    return os.str();
}

int suite_corollary_weak_counts(const SuiteConfig& cfg) {
    Tally t;
    for (u32 m : valid_m_values(cfg.p, 3 * cfg.p + 2)) {
        if (cfg.m && *cfg.m != m) continue;
        const ClassReport report = weak_orbits_bruteforce(cfg.p, m, cfg.orbit);
        const u64 expected = d_weak_closed_form(cfg.p, m);
        std::ostringstream what;
        what << "weak count at (p=" << cfg.p << ", m=" << m << ") equals " << expected;
        t.check(report.ok() && report.weak_count == expected, what.str(),
                "oracle found " + std::to_string(report.weak_count) + "; " + issues_text(report));
    }
    return t.failed;
}

int suite_theorem_strict_bounds(const SuiteConfig& cfg) {
    Tally t;
    const u32 p = cfg.p;
    for (u32 m : {2 * p, 2 * p + 1, 2 * p + 2}) {
        if (cfg.m && *cfg.m != m) continue;
        if (!validate_type(p, 2, m)) continue;
        const ClassReport report = strict_classes_bruteforce(p, m, cfg.orbit);
        std::ostringstream what;
        what << "strict count at (p=" << p << ", m=" << m << ") is " << *report.strict_count
             << ", inside [" << report.weak_count << ", " << p * report.weak_count << "]";
        t.check(report.ok(), what.str(), issues_text(report));
    }
    return t.failed;
}

// transported standard coordinates against the closed formulas, one arm at
// a time; the checked identities live in Z/p^2 exactly
bool coarse_arm_holds(char arm, const Character& chi, const NottinghamElement& u) {
    const u32 p = chi.p();
    const StandardExpansion before = standard_expansion(chi);
    const u32 m = before.m;
    const Character moved = act(u, chi);
    const StandardExpansion after = standard_expansion(moved);
    const u32 alpha = u.alpha(1);
    switch (arm) {
        case 'a':
            return after.x1 == add_mod(before.x1, mul_mod(alpha, before.x2, p), p) &&
                   after.x2 == before.x2;
        case 'b':
            return moved.coeff(m) == p * before.a_at(m);
        case 'c': {
            const u32 shift = mul_mod(mul_mod((m - 1) % p, alpha, p), before.a_at(m), p);
            return after.a_at(m - 1) == add_mod(before.a_at(m - 1), shift, p);
        }
        case 'd': {
            const u32 eta = mul_mod((m - 1) % p, alpha, p);
            return after.a_at(m - 1) == add_mod(before.a_at(m - 1), mul_mod(eta, before.x2, p), p);
        }
    }
    return false;
}

int suite_lemma_coarse(const SuiteConfig& cfg) {
    Tally t;
    sampling::Rng rng(cfg.seed);
    const u32 p = cfg.p;
    const int trials = 1000;
    const std::vector<u32> all_cases{2 * p, 2 * p + 1, 2 * p + 2};

    struct Arm {
        char name;
        std::vector<u32> ms;
    };
    const std::vector<Arm> arms{{'a', all_cases},
                                {'b', {2 * p + 1, 2 * p + 2}},
                                {'c', {2 * p + 2}},
                                {'d', {2 * p}}};
    for (const auto& arm : arms) {
        int bad = 0;
        std::string witness;
        for (int i = 0; i < trials; ++i) {
            const u32 m = arm.ms[i % arm.ms.size()];
            const Character chi = sampling::character(rng, p, 2, m);
            const NottinghamElement u = sampling::element(rng, p, m + 2);
            if (!coarse_arm_holds(arm.name, chi, u)) {
                ++bad;
                if (witness.empty()) {
                    witness = "chi = " + to_json(chi).dump() + ", u = " + to_json(u).dump();
                }
            }
        }
        std::ostringstream what;
        what << "coefficient transport arm (" << arm.name << "), " << trials
             << " randomized checks at p=" << p;
        t.check(bad == 0, what.str(), witness);
    }
    return t.failed;
}

int suite_prop_phi(const SuiteConfig& cfg) {
    Tally t;
    const u32 p = cfg.p;
    const auto elems = enumerate_quotient(p, 4);

    bool homo = true;
    std::string witness;
    for (const auto& u : elems) {
        for (const auto& v : elems) {
            if (!(phi(compose(u, v)) == oplus(phi(u), phi(v)))) {
                homo = false;
                witness = to_json(u).dump() + " o " + to_json(v).dump();
            }
        }
    }
    t.check(homo, "phi is a homomorphism on all " + std::to_string(elems.size() * elems.size()) +
                      " quotient pairs", witness);

    bool partition = true;
    witness.clear();
    for (u32 x1 = 0; x1 < p && partition; ++x1) {
        for (u32 x2 = 1; x2 < p && partition; ++x2) {
            for (const auto& u : elems) {
                int hits = 0;
                u32 hit = 0;
                for (u32 k = 0; k < p; ++k) {
                    if (in_coset_set(compose(u, inverse(g_element(p, k, 4))), x1, x2)) {
                        ++hits;
                        hit = k;
                    }
                }
                if (hits != 1 || hit != coset_index(u, x1, x2)) {
                    partition = false;
                    witness = "u = " + to_json(u).dump() + " at (x1,x2) = (" +
                              std::to_string(x1) + "," + std::to_string(x2) + ")";
                    break;
                }
            }
        }
    }
    t.check(partition, "coset translates partition the quotient for every (x1, x2)", witness);
    return t.failed;
}

int suite_lemma_lubin_criterion(const SuiteConfig& cfg) {
    Tally t;
    const u32 p = cfg.p;
    const u32 m = cfg.m.value_or(2 * p + 1);
    const ClassReport weak_kernel = strict_classes_bruteforce(p, m, cfg.orbit, false);
    const ClassReport full_kernel = strict_classes_bruteforce(p, m, cfg.orbit, true);
    bool same = weak_kernel.strict_count == full_kernel.strict_count;
    std::string witness;
    if (same) {
        for (std::size_t c = 0; c < weak_kernel.strict_classes.size(); ++c) {
            const auto& a = weak_kernel.strict_classes[c];
            const auto& b = full_kernel.strict_classes[c];
            if (!(a.representative == b.representative) || a.size != b.size) {
                same = false;
                witness = "class " + std::to_string(c) + " differs";
                break;
            }
        }
    } else {
        witness = std::to_string(*weak_kernel.strict_count) + " vs " +
                  std::to_string(*full_kernel.strict_count) + " classes";
    }
    t.check(same,
            "mod-p and mod-p^2 kernel conditions give one strict partition at (p=" +
                std::to_string(p) + ", m=" + std::to_string(m) + ")",
            witness);
    return t.failed;
}

int suite_thm_1m(const SuiteConfig& cfg) {
    Tally t;
    const u32 p = cfg.p;
    for (u32 m : {p, p + 1, p + 2}) {
        if (cfg.m && *cfg.m != m) continue;
        if (!validate_type(p, 1, m)) continue;
        const ClassReport report = strict_classes_1m(p, m, cfg.orbit);
        std::ostringstream what;
        what << "strict classes of type <1," << m << "> at p=" << p
             << " match the indicator fibration (" << *report.strict_count << " classes)";
        t.check(report.ok(), what.str(), issues_text(report));
    }
    return t.failed;
}

} // namespace

std::vector<std::string> names() {
    return {"corollary-weak-counts", "theorem-strict-bounds", "lemma-coarse",
            "prop-phi",              "lemma-lubin-criterion", "thm-1m"};
}

int run(const std::string& name, const SuiteConfig& config) {
    if (name == "corollary-weak-counts") return suite_corollary_weak_counts(config);
    if (name == "theorem-strict-bounds") return suite_theorem_strict_bounds(config);
    if (name == "lemma-coarse") return suite_lemma_coarse(config);
    if (name == "prop-phi") return suite_prop_phi(config);
    if (name == "lemma-lubin-criterion") return suite_lemma_lubin_criterion(config);
    if (name == "thm-1m") return suite_thm_1m(config);
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace nott::suites
