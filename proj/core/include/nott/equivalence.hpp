#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nott/characters.hpp>

namespace nott {

struct OrbitOptions {
    // Cap on action evaluations for one run (characters x acting elements).
    u64 budget = 100'000'000;
    unsigned threads = 1;
    // Act by every element of the finite quotient instead of the generator
    // set {t(1+t^k)}; used to validate that the generators suffice.
    bool weak_full_group = false;
};

class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(u64 required, u64 allowed)
        : std::runtime_error("budget exceeded: run needs " + std::to_string(required) +
                             " action evaluations, budget is " + std::to_string(allowed)),
          required_(required),
          allowed_(allowed) {}

    u64 required() const noexcept { return required_; }
    u64 allowed() const noexcept { return allowed_; }

private:
    u64 required_;
    u64 allowed_;
};

enum class ReportMethod { indicator, brute_force, both };

std::string to_string(ReportMethod m);

struct WeakClassInfo {
    Indicator indicator;
    std::size_t size = 0;
    Character representative; // lexicographically smallest coefficient vector
};

struct StrictClassInfo {
    Character representative;
    std::size_t size = 0;
    std::size_t weak_class = 0; // index into weak_classes
};

/// A theorem check that failed, with a concrete witness. Disagreement between
/// oracle and statement is reported, never silently dropped.
struct VerificationIssue {
    std::string check;
    std::string witness;
};

struct ClassReport {
    u32 p = 0;
    u32 m = 0;
    u32 b0 = 2;
    ReportMethod method = ReportMethod::brute_force;
    std::size_t total_characters = 0;
    std::size_t weak_count = 0;
    std::optional<std::size_t> strict_count;
    std::vector<WeakClassInfo> weak_classes;
    std::vector<StrictClassInfo> strict_classes;
    std::vector<VerificationIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
};

// Number of weak equivalence classes of type <2,m>:
// p(p-1) when p | m, (p-1)^2 when m = 1 mod p, p(p-1)^2 otherwise.
u64 d_weak_closed_form(u32 p, u32 m);

// indicator(chi) == indicator(psi); both characters must be of type <2,m>
// for the same (p, m).
bool weak_equiv_indicator(const Character& chi, const Character& psi);

// Union-find orbit partition of all type-<2,m> characters under the
// generator set {t(1+t^k) : 1 <= k <= m}. The class count is verified
// against the closed form and indicator constancy is verified classwise;
// failures land in the report's issues.
ClassReport weak_orbits_bruteforce(u32 p, u32 m, const OrbitOptions& opts = {});

// chi(u(t)/t) = 0 mod p. Requires precision of u at least bound+2.
bool strict_edge(const Character& chi, const NottinghamElement& u);

// chi(u(t)/t) = 0 mod p^2, the kernel condition of the definition.
bool strict_edge_strong(const Character& chi, const NottinghamElement& u);

// Partition of the type-<2,m> characters by strict equivalence: union-find
// closure of the edges chi -> act(u, chi) over all u in the finite quotient
// with strict_edge(chi, u). With strong = true the mod-p^2 kernel condition
// is used instead (both give the same partition; running both is how that
// is checked). The report also carries the weak partition and verifies the
// bracket weak <= strict <= p * weak classwise.
ClassReport strict_classes_bruteforce(u32 p, u32 m, const OrbitOptions& opts = {},
                                      bool strong = false);

// Existence of u with u in N(x1(chi), x2(chi)) and act(u, chi) = psi,
// searching the finite quotient.
bool strict_via_coset(const Character& chi, const Character& psi,
                      const OrbitOptions& opts = {});

// Strict partition of the type-<1,m> characters by brute force, compared
// against the fibers of indicator_1m; a mismatch is reported as an issue.
ClassReport strict_classes_1m(u32 p, u32 m, const OrbitOptions& opts = {});

} // namespace nott
