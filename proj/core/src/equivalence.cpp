#include <nott/equivalence.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

namespace nott {

std::string to_string(ReportMethod m) {
    switch (m) {
        case ReportMethod::indicator: return "indicator";
        case ReportMethod::brute_force: return "brute_force";
        case ReportMethod::both: return "both";
    }
    return "?";
}

u64 d_weak_closed_form(u32 p, u32 m) {
    if (!validate_type(p, 2, m)) {
        throw std::invalid_argument("d_weak_closed_form: invalid type <2," + std::to_string(m) +
                                    ">: " + type_violation(p, 2, m));
    }
    const u64 q = p - 1;
    if (m % p == 0) return p * q;
    if (m % p == 1) return q * q;
    return p * q * q;
}

bool weak_equiv_indicator(const Character& chi, const Character& psi) {
    if (chi.p() != psi.p()) throw std::invalid_argument("weak_equiv_indicator: modulus mismatch");
    const BreakSequence a = break_sequence(chi);
    const BreakSequence b = break_sequence(psi);
    if (a.b0 != 2 || b.b0 != 2 || a.b1 != b.b1) {
        throw std::invalid_argument("weak_equiv_indicator: characters do not share a type <2,m>");
    }
    return indicator(chi) == indicator(psi);
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) x = std::exchange(parent_[x], root);
        return root;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    // Fold another partition of the same ground set into this one.
    void absorb(UnionFind& other) {
        for (std::size_t i = 0; i < parent_.size(); ++i) unite(i, other.find(i));
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

// The type-<b0,m> characters with dense value vectors in one flat buffer.
// The enumeration order is an odometer over the per-index value sets, so a
// value vector is ranked back to its position arithmetically; no lookup
// table is needed.
class CharacterFamily {
public:
    CharacterFamily(u32 p, u32 b0, u32 m)
        : p_(p), b0_(b0), m_(m), support_(character_support(p, m)) {
        u64 stride = 1;
        strides_.reserve(support_.size());
        for (u32 j : support_) {
            strides_.push_back(stride);
            stride *= set_size(j);
        }
        n_ = static_cast<std::size_t>(stride);
        flat_.reserve(n_ * width());
        for_each_character_profile(p, b0, m, [&](const std::vector<u32>& prof) {
            flat_.insert(flat_.end(), prof.begin(), prof.end());
        });
        if (flat_.size() != n_ * width()) {
            throw std::logic_error("CharacterFamily: enumeration disagrees with the counting formula");
        }
    }

    u32 p() const noexcept { return p_; }
    u32 b0() const noexcept { return b0_; }
    u32 m() const noexcept { return m_; }
    std::size_t size() const noexcept { return n_; }
    std::size_t width() const noexcept { return support_.size(); }
    const std::vector<u32>& support() const noexcept { return support_; }

    std::span<const u32> profile_of(std::size_t i) const {
        return {flat_.data() + i * width(), width()};
    }

    Character character_at(std::size_t i) const {
        return character_from_profile(p_, m_, profile_of(i));
    }

    std::size_t rank(std::span<const u32> prof) const {
        u64 r = 0;
        for (std::size_t i = 0; i < support_.size(); ++i) {
            r += strides_[i] * ordinal(support_[i], prof[i]);
        }
        return static_cast<std::size_t>(r);
    }

private:
    u64 set_size(u32 j) const {
        if (j < b0_) return static_cast<u64>(p_) * p_;
        if (j == b0_) return static_cast<u64>(p_) * (p_ - 1);
        if (j == m_) return p_ - 1; // the support contains m only when p does not divide m
        return p_;
    }

    u64 ordinal(u32 j, u32 v) const {
        if (j < b0_) return v;
        if (j == b0_) {
            if (v % p_ == 0) {
                throw std::logic_error("CharacterFamily: value left the family (unit coefficient lost)");
            }
            return v - 1 - (v - 1) / p_;
        }
        if (v % p_ != 0) {
            throw std::logic_error("CharacterFamily: value left the family (divisibility lost)");
        }
        const u32 a = v / p_;
        if (j == m_) {
            if (a == 0) {
                throw std::logic_error("CharacterFamily: value left the family (top coefficient vanished)");
            }
            return a - 1;
        }
        return a;
    }

    u32 p_, b0_, m_;
    std::vector<u32> support_;
    std::vector<u64> strides_;
    std::vector<u32> flat_;
    std::size_t n_ = 0;
};

enum class EdgeMode { all, mod_p, mod_p2 };

// t(1 + t^k) for k = 1..m as coefficient tails.
std::vector<std::vector<u32>> generator_tails(u32 m) {
    std::vector<std::vector<u32>> tails;
    tails.reserve(m);
    for (u32 k = 1; k <= m; ++k) {
        std::vector<u32> tail(k, 0);
        tail[k - 1] = 1;
        tails.push_back(std::move(tail));
    }
    return tails;
}

// All of {0..p-1}^digits, first digit fastest.
std::vector<std::vector<u32>> quotient_tails(u32 p, std::size_t digits) {
    u64 count = 1;
    for (std::size_t i = 0; i < digits; ++i) count *= p;
    std::vector<std::vector<u32>> tails;
    tails.reserve(count);
    std::vector<u32> tail(digits, 0);
    for (u64 n = 0; n < count; ++n) {
        tails.push_back(tail);
        for (std::size_t i = 0; i < digits; ++i) {
            if (++tail[i] < p) break;
            tail[i] = 0;
        }
    }
    return tails;
}

u64 pow_u64(u64 base, u32 exp) {
    u64 r = 1;
    while (exp--) r *= base;
    return r;
}

void check_budget(u64 n_characters, u64 n_actors, u64 budget) {
    if (n_actors != 0 && n_characters > budget / n_actors) {
        throw budget_exceeded(n_characters * n_actors, budget);
    }
}

// Union-find closure of the edges chi -> act(u, chi), u over the given
// coefficient tails, restricted by the kernel condition chi(u/t) = 0
// (mod p or mod p^2) unless mode is `all`. Workers build local partitions
// over disjoint ranges of actors; the merged result does not depend on the
// chunking.
UnionFind closure_scan(const CharacterFamily& fam, const std::vector<std::vector<u32>>& tails,
                       EdgeMode mode, unsigned threads) {
    const std::size_t n = fam.size();
    const u32 p = fam.p();
    const u32 p2 = p * p;
    const u32 m = fam.m();
    const std::size_t elem_precision = static_cast<std::size_t>(m) + 2;

    auto scan_range = [&](std::size_t lo, std::size_t hi, UnionFind& uf) {
        std::vector<u32> buf;
        std::vector<u32> kernel_row;
        for (std::size_t a = lo; a < hi; ++a) {
            const NottinghamElement u = NottinghamElement::from_tail(p, tails[a], elem_precision);
            const ActionTable table(u, m);
            if (mode != EdgeMode::all) {
                const UnitExponents d = decompose(u.unit_part(), m);
                kernel_row.clear();
                for (u32 j : fam.support()) kernel_row.push_back(d.at(j));
            }
            for (std::size_t i = 0; i < n; ++i) {
                const auto prof = fam.profile_of(i);
                if (mode != EdgeMode::all) {
                    u64 acc = 0;
                    for (std::size_t c = 0; c < kernel_row.size(); ++c) {
                        acc += static_cast<u64>(kernel_row[c]) * prof[c];
                    }
                    const u32 v = static_cast<u32>(acc % p2);
                    if (mode == EdgeMode::mod_p ? (v % p != 0) : (v != 0)) continue;
                }
                table.apply_into(prof, buf);
                uf.unite(i, fam.rank(buf));
            }
        }
    };

    const unsigned nthreads =
        std::max<unsigned>(1, std::min<unsigned>(threads, static_cast<unsigned>(tails.size())));
    if (nthreads == 1) {
        UnionFind uf(n);
        scan_range(0, tails.size(), uf);
        return uf;
    }

    std::vector<UnionFind> locals(nthreads, UnionFind(n));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (tails.size() + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
        const std::size_t lo = std::min(tails.size(), t * chunk);
        const std::size_t hi = std::min(tails.size(), lo + chunk);
        pool.emplace_back(scan_range, lo, hi, std::ref(locals[t]));
    }
    for (auto& th : pool) th.join();
    UnionFind global(n);
    for (auto& local : locals) global.absorb(local);
    return global;
}

struct Partition {
    std::vector<std::size_t> class_of;              // character index -> class index
    std::vector<std::vector<std::size_t>> members;  // class index -> member indices
    std::vector<std::size_t> reps;                  // class index -> lex-min member
};

Partition finalize_partition(UnionFind uf, const CharacterFamily& fam) {
    const std::size_t n = fam.size();
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

    auto lex_less = [&](std::size_t a, std::size_t b) {
        const auto pa = fam.profile_of(a);
        const auto pb = fam.profile_of(b);
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    };

    // enumeration position order is not lexicographic, so pick the lex-min
    // member of each class as its representative
    struct Group {
        std::vector<std::size_t> ids;
        std::size_t rep;
    };
    std::vector<Group> gs;
    gs.reserve(groups.size());
    for (auto& [root, ids] : groups) {
        std::size_t best = ids.front();
        for (std::size_t i : ids) {
            if (lex_less(i, best)) best = i;
        }
        gs.push_back(Group{std::move(ids), best});
    }
    std::sort(gs.begin(), gs.end(), [&](const Group& a, const Group& b) {
        return lex_less(a.rep, b.rep);
    });

    Partition part;
    part.class_of.assign(n, 0);
    part.members.reserve(gs.size());
    part.reps.reserve(gs.size());
    for (auto& g : gs) {
        for (std::size_t i : g.ids) part.class_of[i] = part.members.size();
        part.reps.push_back(g.rep);
        part.members.push_back(std::move(g.ids));
    }
    return part;
}

std::string describe(const Character& chi) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [j, v] : chi.coeffs()) {
        if (!first) os << ", ";
        first = false;
        os << j << ": " << v;
    }
    os << "}";
    return os.str();
}

std::string describe(const Indicator& ind) {
    std::ostringstream os;
    os << to_string(ind.kind) << "[";
    for (std::size_t i = 0; i < ind.values.size(); ++i) {
        if (i) os << ", ";
        os << ind.values[i];
    }
    os << "]";
    return os.str();
}

Indicator class_indicator(const CharacterFamily& fam, std::size_t rep) {
    const Character chi = fam.character_at(rep);
    return fam.b0() == 2 ? indicator(chi) : indicator_1m(chi);
}

// Weak classes, sizes, representatives; verifies that the indicator is
// constant on every class and separates distinct classes.
void fill_weak_part(ClassReport& report, const CharacterFamily& fam, const Partition& weak) {
    report.total_characters = fam.size();
    report.weak_count = weak.members.size();
    std::map<Indicator, std::size_t> seen;
    for (std::size_t c = 0; c < weak.members.size(); ++c) {
        const Indicator ind = class_indicator(fam, weak.reps[c]);
        report.weak_classes.push_back(
            WeakClassInfo{ind, weak.members[c].size(), fam.character_at(weak.reps[c])});
        if (fam.b0() != 2) continue; // the <1,m> indicator is a strict invariant only
        for (std::size_t i : weak.members[c]) {
            if (class_indicator(fam, i) != ind) {
                report.issues.push_back(
                    {"indicator constant on weak orbits",
                     describe(fam.character_at(weak.reps[c])) + " and " +
                         describe(fam.character_at(i)) + " share an orbit, indicators differ"});
                break;
            }
        }
        auto [it, inserted] = seen.emplace(ind, c);
        if (!inserted) {
            report.issues.push_back(
                {"indicator separates weak orbits",
                 "orbits of " + describe(fam.character_at(weak.reps[it->second])) + " and " +
                     describe(fam.character_at(weak.reps[c])) + " share indicator " + describe(ind)});
        }
    }
    if (fam.b0() == 2) {
        const u64 expected = d_weak_closed_form(fam.p(), fam.m());
        if (expected != report.weak_count) {
            report.issues.push_back({"weak class count equals the closed form",
                                     "closed form gives " + std::to_string(expected) +
                                         ", the orbit enumeration found " +
                                         std::to_string(report.weak_count)});
        }
    }
}

void fill_strict_part(ClassReport& report, const CharacterFamily& fam, const Partition& weak,
                      const Partition& strict) {
    report.strict_count = strict.members.size();
    for (std::size_t c = 0; c < strict.members.size(); ++c) {
        const std::size_t rep = strict.reps[c];
        const std::size_t parent = weak.class_of[rep];
        report.strict_classes.push_back(
            StrictClassInfo{fam.character_at(rep), strict.members[c].size(), parent});
        for (std::size_t i : strict.members[c]) {
            if (weak.class_of[i] != parent) {
                report.issues.push_back({"strict classes refine weak classes",
                                         describe(fam.character_at(rep)) + " and " +
                                             describe(fam.character_at(i)) +
                                             " are strictly but not weakly equivalent"});
                break;
            }
        }
    }
    const std::size_t lower = report.weak_count;
    const std::size_t upper = static_cast<std::size_t>(fam.p()) * report.weak_count;
    if (*report.strict_count < lower || *report.strict_count > upper) {
        report.issues.push_back({"strict count lies in [d_weak, p*d_weak]",
                                 std::to_string(*report.strict_count) + " outside [" +
                                     std::to_string(lower) + ", " + std::to_string(upper) + "]"});
    }
    std::vector<std::size_t> splits(report.weak_count, 0);
    for (const auto& sc : report.strict_classes) ++splits[sc.weak_class];
    for (std::size_t w = 0; w < splits.size(); ++w) {
        if (splits[w] > fam.p()) {
            report.issues.push_back(
                {"each weak class splits into at most p strict classes",
                 "weak class of " + describe(report.weak_classes[w].representative) + " splits into " +
                     std::to_string(splits[w])});
        }
    }
}

} // namespace

ClassReport weak_orbits_bruteforce(u32 p, u32 m, const OrbitOptions& opts) {
    if (!validate_type(p, 2, m)) {
        throw std::invalid_argument("weak_orbits_bruteforce: invalid type <2," + std::to_string(m) +
                                    ">: " + type_violation(p, 2, m));
    }
    const u64 n_actors = opts.weak_full_group ? pow_u64(p, m - 1) : m;
    check_budget(character_count(p, 2, m), n_actors, opts.budget);

    const CharacterFamily fam(p, 2, m);
    const auto tails = opts.weak_full_group ? quotient_tails(p, m - 1) : generator_tails(m);
    const Partition weak = finalize_partition(closure_scan(fam, tails, EdgeMode::all, opts.threads), fam);

    ClassReport report;
    report.p = p;
    report.m = m;
    report.b0 = 2;
    report.method = ReportMethod::brute_force;
    fill_weak_part(report, fam, weak);
    return report;
}

bool strict_edge(const Character& chi, const NottinghamElement& u) {
    return evaluate(chi, u.unit_part()) % chi.p() == 0;
}

bool strict_edge_strong(const Character& chi, const NottinghamElement& u) {
    return evaluate(chi, u.unit_part()) == 0;
}

ClassReport strict_classes_bruteforce(u32 p, u32 m, const OrbitOptions& opts, bool strong) {
    if (!validate_type(p, 2, m)) {
        throw std::invalid_argument("strict_classes_bruteforce: invalid type <2," +
                                    std::to_string(m) + ">: " + type_violation(p, 2, m));
    }
    // act and the mod-p kernel value both ignore coefficients past t^m, so
    // the scan ranges over tails (a1..a_{m-1}); the mod-p^2 kernel value
    // reads a_m as well.
    const u32 digits = strong ? m : m - 1;
    const u64 n_chars = character_count(p, 2, m);
    check_budget(n_chars, static_cast<u64>(m) + pow_u64(p, digits), opts.budget);

    const CharacterFamily fam(p, 2, m);
    const Partition weak =
        finalize_partition(closure_scan(fam, generator_tails(m), EdgeMode::all, opts.threads), fam);
    const Partition strict = finalize_partition(
        closure_scan(fam, quotient_tails(p, digits), strong ? EdgeMode::mod_p2 : EdgeMode::mod_p,
                     opts.threads),
        fam);

    ClassReport report;
    report.p = p;
    report.m = m;
    report.b0 = 2;
    report.method = ReportMethod::brute_force;
    fill_weak_part(report, fam, weak);
    fill_strict_part(report, fam, weak, strict);
    return report;
}

bool strict_via_coset(const Character& chi, const Character& psi, const OrbitOptions& opts) {
    if (chi.p() != psi.p() || chi.bound() != psi.bound()) {
        throw std::invalid_argument("strict_via_coset: characters live on different families");
    }
    const StandardExpansion se = standard_expansion(chi);
    const BreakSequence bp = break_sequence(psi);
    if (bp.b0 != 2 || bp.b1 != se.m) {
        throw std::invalid_argument("strict_via_coset: characters do not share a type <2,m>");
    }
    const u32 p = chi.p();
    const u32 m = se.m;
    check_budget(1, pow_u64(p, m - 1), opts.budget);
    for (const auto& tail : quotient_tails(p, m - 1)) {
        const NottinghamElement u = NottinghamElement::from_tail(p, tail, m + 2);
        if (!in_coset_set(u, se.x1, se.x2)) continue;
        if (act(u, chi) == psi) return true;
    }
    return false;
}

ClassReport strict_classes_1m(u32 p, u32 m, const OrbitOptions& opts) {
    if (!validate_type(p, 1, m)) {
        throw std::invalid_argument("strict_classes_1m: invalid type <1," + std::to_string(m) +
                                    ">: " + type_violation(p, 1, m));
    }
    const u64 n_chars = character_count(p, 1, m);
    check_budget(n_chars, static_cast<u64>(m) + pow_u64(p, m - 1), opts.budget);

    const CharacterFamily fam(p, 1, m);
    const Partition weak =
        finalize_partition(closure_scan(fam, generator_tails(m), EdgeMode::all, opts.threads), fam);
    const Partition strict = finalize_partition(
        closure_scan(fam, quotient_tails(p, m - 1), EdgeMode::mod_p, opts.threads), fam);

    ClassReport report;
    report.p = p;
    report.m = m;
    report.b0 = 1;
    report.method = ReportMethod::both;
    fill_weak_part(report, fam, weak);
    fill_strict_part(report, fam, weak, strict);

    // The strict partition must be exactly the indicator fibration.
    std::map<Indicator, std::size_t> fiber_of;
    for (std::size_t c = 0; c < strict.members.size(); ++c) {
        const Indicator ind = class_indicator(fam, strict.reps[c]);
        for (std::size_t i : strict.members[c]) {
            if (class_indicator(fam, i) != ind) {
                report.issues.push_back({"indicator constant on strict classes",
                                         describe(fam.character_at(strict.reps[c])) + " and " +
                                             describe(fam.character_at(i)) +
                                             " are strictly equivalent with different indicators"});
                break;
            }
        }
        auto [it, inserted] = fiber_of.emplace(ind, c);
        if (!inserted) {
            report.issues.push_back(
                {"indicator separates strict classes",
                 "classes of " + describe(fam.character_at(strict.reps[it->second])) + " and " +
                     describe(fam.character_at(strict.reps[c])) + " share indicator " +
                     describe(ind)});
        }
    }
    return report;
}

} // namespace nott
