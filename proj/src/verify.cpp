#include "hspin/verify.hpp"

#include "hspin/factorization.hpp"
#include "hspin/killing.hpp"
#include "hspin/weitzenboeck.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hspin {

namespace {

using R = Rational;

constexpr std::size_t kMaxViolations = 100;

class Checker {
public:
    explicit Checker(std::string suite) { report_.suite = std::move(suite); }

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++report_.checks;
        if (ok) return;
        ++report_.failed;
        if (report_.violations.size() < kMaxViolations) report_.violations.push_back(describe());
    }

    // runs body, turning an escaped library error into one violation
    template <typename Body>
    void guarded(const std::string& where, Body&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, [&] { return where + ": " + e.what(); });
        }
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
};

std::string tag(const FamilyMember& m) {
    return std::string(family_name(m.family)) + "(n=" + std::to_string(m.n) + ",j=" + std::to_string(m.j) +
           ",k=" + std::to_string(m.k) + ",s=" + std::to_string(m.s) + ")";
}

std::string tag(const char* what, int n, int j) {
    return std::string(what) + "(n=" + std::to_string(n) + ",j=" + std::to_string(j) + ")";
}

R binom(int a, int b) {
    if (b < 0 || a < b) return R(0);
    R r(1);
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

const R kCurvatures[] = {R(1), R(2), R(1, 3)};

R ev(OperatorKind op, const FamilyMember& m, const R& c = R(1)) {
    EvalOptions opt;
    opt.curvature = c;
    return operator_ev(op, m, opt);
}

// eigenvalue >= 0 everywhere and = 0 exactly on the stated kernel family
void check_kernels(Checker& ck, const BundleDescriptor& b, const std::vector<FamilyMember>& members,
                   std::initializer_list<OperatorKind> ops) {
    for (OperatorKind op : ops) {
        const auto filter = kernel_family(op, b);
        for (const auto& m : members) {
            const R e = ev(op, m);
            ck.expect(e >= 0 && (e == 0) == filter.contains(m), [&] {
                return std::string("kernel ") + op_name(op) + " " + tag(m) + " ev=" + to_string(e) +
                       " expected kernel: " + filter.description;
            });
        }
    }
}

void crosscheck_spinor(Checker& ck, int n, int j, int k_max) {
    const R N(n), J(j);
    const auto b = spinor_bundle(n, j);
    const auto members = frobenius_decompose(b, k_max);
    const R wf1 = J * (N + J - 2) - N * (N - 1) / 8;
    const R wf2 = (J + 1) * (N + J - 1) - N * (N - 1) / 8;
    const R rough = J * (N + J - 1) + N * (N - 1) / 8;
    const R ratio = (N + 2 * J - 2) / (N + 2 * J);
    const auto sys = spinor_system(n, j);
    for (const auto& m : members) {
        const R K(m.k), S(m.s);
        const R lap = laplacian_ev(m);
        const R top = J + K + N / 2;
        ck.expect(lap == top * top + S * (S + N - 2) - N * (N - 1) / 8,
                  [&] { return "spinor Laplacian closed form " + tag(m); });
        const R dratio = (N + 2 * S - 2) / (N + 2 * J - 2);
        ck.expect(ev(OperatorKind::DiracSq, m) == dratio * dratio * top * top,
                  [&] { return "spinor D^2 closed form " + tag(m); });
        for (const R& c : kCurvatures) {
            const R l = laplacian_ev(m, {c, false});
            const R d2 = ev(OperatorKind::DiracSq, m, c);
            ck.expect(l == d2 + ev(OperatorKind::TMinusAdjTMinus, m, c) + c * wf1,
                      [&] { return "spinor WF1 c=" + to_string(c) + " " + tag(m); });
            ck.expect(l == ev(OperatorKind::TPlusAdjTPlus, m, c) + ratio * ratio * d2 + c * wf2,
                      [&] { return "spinor WF2 c=" + to_string(c) + " " + tag(m); });
        }
        // rough Laplacian as the sum of the unnormalized gradient squares
        R sum(0);
        const std::pair<GradientRole, OperatorKind> roles[] = {
            {GradientRole::TPlus, OperatorKind::TPlusAdjTPlus},
            {GradientRole::U, OperatorKind::UAdjU},
            {GradientRole::D, OperatorKind::DiracSq},
            {GradientRole::TMinus, OperatorKind::TMinusAdjTMinus}};
        for (const auto& [role, op] : roles) {
            if (!sys.has(role)) continue;
            sum += ev(op, m) / normalization_sq(role, SystemKind::Spinor, n, j).square;
        }
        ck.expect(lap - rough == sum, [&] { return "spinor gradient sum rule " + tag(m); });
        if (m.k >= 1) {
            const auto up = make_member(Family::SpinorSphere, n, j + 1, m.k - 1, m.s);
            ck.expect(ev(OperatorKind::DiracSq, up) == ratio * ratio * ev(OperatorKind::DiracSq, m),
                      [&] { return "spinor D^2 intertwining " + tag(m); });
        }
        if (n == 3) ck.expect(ev(OperatorKind::UAdjU, m) == 0, [&] { return "U vanishes at n=3 " + tag(m); });
        // dimension closed form (l = k + j), summed over the pair on odd n
        const int l = m.k + j;
        const R dim = R(1 << ((n + 1) / 2)) * (l + n - 1 + m.s) * (l + 1 - m.s) / ((N - 1) * (N - 2)) *
                      binom(l + n - 2, l + 1) * binom(m.s + n - 3, m.s);
        ck.expect(R(member_dim(m)) == dim,
                  [&] { return "spinor dimension closed form " + tag(m); });
    }
    check_kernels(ck, b, members,
                  {OperatorKind::DiracSq, OperatorKind::TPlusAdjTPlus, OperatorKind::TMinusAdjTMinus,
                   OperatorKind::UAdjU});
}

void crosscheck_sym(Checker& ck, int n, int j, int k_max) {
    const R N(n), J(j);
    const auto b = sym_bundle(n, j);
    const auto members = frobenius_decompose(b, k_max);
    const R wt = (J + 1) * (N + 2 * J - 2) / ((N + J - 2) * (N + 2 * J));
    for (const auto& m : members) {
        const R K(m.k), S(m.s);
        const R lap = laplacian_ev(m);
        ck.expect(lap == (J + K) * (N + K + J - 1) + S * (N + S - 3),
                  [&] { return "sym Laplacian closed form " + tag(m); });
        for (const R& c : kCurvatures) {
            const R l = laplacian_ev(m, {c, false});
            ck.expect(l == (J + 1) * ev(OperatorKind::TPlusAdjTPlus, m, c) -
                               (N + J - 3) * ev(OperatorKind::TMinusAdjTMinus, m, c) + c * 2 * J * (N + J - 2),
                      [&] { return "sym Weitzenboeck c=" + to_string(c) + " " + tag(m); });
            if (n > 3)
                ck.expect(c * J * (N + J - 2) == -J * ev(OperatorKind::TPlusAdjTPlus, m, c) +
                                                     ev(OperatorKind::UAdjU, m, c) +
                                                     (N + J - 2) * ev(OperatorKind::TMinusAdjTMinus, m, c),
                          [&] { return "sym curvature relation c=" + to_string(c) + " " + tag(m); });
        }
        // (T_{j+1}^-)* T_{j+1}^- against T_j^+ (T_j^+)*
        const auto up = make_member(Family::SymSphere, n, j + 1, m.k, m.s);
        const auto right = make_member(Family::SymSphere, n, j, m.k + 1, m.s);
        ck.expect(ev(OperatorKind::TMinusAdjTMinus, up) == wt * ev(OperatorKind::TPlusAdjTPlus, right),
                  [&] { return "sym T-/T+ relative-dimension identity " + tag(m); });
        if (m.s == j) {
            const auto top = make_member(Family::SymSphere, n, j + 1, m.k, j + 1);
            ck.expect(ev(OperatorKind::TMinusAdjTMinus, top) == 0,
                      [&] { return "sym T- vanishes at s=j+1 " + tag(m); });
        }
        if (n >= 5) {
            const int l = m.k + j;
            const R dim = (2 * R(l) + n - 1) * (2 * S + n - 3) * (R(l) + n - 2 + S) * (R(l) + 1 - S) /
                          ((N - 1) * (N - 2) * (S + N - 3) * (R(l) + N - 2)) * binom(l + n - 2, l + 1) *
                          binom(m.s + n - 3, m.s);
            ck.expect(R(member_dim(m)) == dim, [&] { return "sym dimension closed form " + tag(m); });
        }
    }
    if (n > 3)
        check_kernels(ck, b, members,
                      {OperatorKind::TPlusAdjTPlus, OperatorKind::TMinusAdjTMinus, OperatorKind::UAdjU});
    else
        check_kernels(ck, b, members, {OperatorKind::TPlusAdjTPlus, OperatorKind::TMinusAdjTMinus});
}

void crosscheck_forms(Checker& ck, int n, int j, int k_max) {
    const R N(n), J(j);
    const auto b = form_bundle(n, j);
    const auto members = frobenius_decompose(b, k_max);
    for (const auto& m : members) {
        const R K(m.k);
        const R lap = laplacian_ev(m);
        ck.expect(lap == ev(OperatorKind::DDStar, m) + ev(OperatorKind::DStarD, m),
                  [&] { return "form Hodge Laplacian " + tag(m); });
        const R closed = m.family == Family::FormUp ? (K + J + 1) * (N + K - J) : (K + J) * (N - J + K + 1);
        ck.expect(lap == closed, [&] { return "form Laplacian table " + tag(m); });
        if (m.family == Family::FormUp && 2 * (j + 1) <= n) {
            const auto down = make_member(Family::FormDown, n, j + 1, m.k);
            ck.expect(down.parent_weight == m.parent_weight &&
                          ev(OperatorKind::DStarD, m) == ev(OperatorKind::DDStar, down),
                      [&] { return "d intertwining " + tag(m); });
        }
    }
    check_kernels(ck, b, members, {OperatorKind::DDStar, OperatorKind::DStarD, OperatorKind::CAdjC});
}

void crosscheck_spinor_forms(Checker& ck, int n, int j, int k_max) {
    const R N(n), J(j);
    const auto b = spinor_form_bundle(n, j);
    const auto members = frobenius_decompose(b, k_max);
    const auto sys = spinor_form_system(n, j);
    const R c1 = J * (N - J) - N * (N - 1) / 8;
    const R c2 = (J - 1) * (N - J + 1) - N * (N - 1) / 8;
    const R rough = J * (N - J + 1) + N * (N - 1) / 8;
    const bool second = n - 2 * j - 1 != 0 && n - 2 * j != 0;
    for (const auto& m : members) {
        const R K(m.k);
        const R lap = laplacian_ev(m);
        const R closed = m.family == Family::SpinorFormUp ? (K + J + 1) * (N - J + K + 1) + N * (N + 1) / 8
                                                          : (K + J) * (N - J + K + 2) + N * (N + 1) / 8;
        ck.expect(lap == closed, [&] { return "spinor-form Laplacian table " + tag(m); });
        const R top = N / 2 + K + 1;
        R d2_closed = top * top;
        if (m.family == Family::SpinorFormDown) {
            const R a = (N - 2 * J) / (N - 2 * J + 2);
            d2_closed *= a * a;
        }
        ck.expect(ev(OperatorKind::DiracSq, m) == d2_closed, [&] { return "spinor-form D^2 table " + tag(m); });
        for (const R& c : kCurvatures) {
            const R l = laplacian_ev(m, {c, false});
            const R d2 = ev(OperatorKind::DiracSq, m, c);
            const R tm = ev(OperatorKind::TMinusAdjTMinus, m, c);
            const R tp = ev(OperatorKind::TPlusAdjTPlus, m, c);
            ck.expect(l == d2 + tm + c * c1, [&] { return "spinor-form identity 1 c=" + to_string(c) + " " + tag(m); });
            if (second) {
                const R q = (N - 2 * J + 2) / (N - 2 * J);
                ck.expect(l == -(N - 2 * J + 1) / (N - 2 * J - 1) * tp + q * q * d2 + c * c2,
                          [&] { return "spinor-form identity 2 c=" + to_string(c) + " " + tag(m); });
                ck.expect(l == (N - 2 * J) * (N - 2 * J) / (4 * (N - 2 * J - 1)) * tp +
                                   (N - 2 * J + 2) * (N - 2 * J + 2) / (4 * (N - 2 * J + 1)) * tm +
                                   c * N * (N + 1) / 8,
                          [&] { return "spinor-form D-free identity c=" + to_string(c) + " " + tag(m); });
            }
        }
        if (j >= 1) {
            const R gap = lap - N * (N + 1) / 8;
            ck.expect(gap >= J * (N - J + 2) && gap > 0,
                      [&] { return "spinor-form harmonic piece not empty " + tag(m); });
        }
        R sum(0);
        const std::pair<GradientRole, OperatorKind> roles[] = {
            {GradientRole::TPlus, OperatorKind::TPlusAdjTPlus},
            {GradientRole::U, OperatorKind::UAdjU},
            {GradientRole::D, OperatorKind::DiracSq},
            {GradientRole::TMinus, OperatorKind::TMinusAdjTMinus}};
        for (const auto& [role, op] : roles) {
            if (!sys.has(role)) continue;
            sum += ev(op, m) / normalization_sq(role, SystemKind::SpinorForm, n, j).square;
        }
        ck.expect(lap - rough == sum, [&] { return "spinor-form gradient sum rule " + tag(m); });
    }
    check_kernels(ck, b, members,
                  {OperatorKind::DiracSq, OperatorKind::TPlusAdjTPlus, OperatorKind::TMinusAdjTMinus,
                   OperatorKind::UAdjU});
}

// E_0 and S_0 carry the same Dirac spectrum
void crosscheck_j0(Checker& ck, int n, int k_max) {
    std::map<R, std::int64_t> e0, s0;
    for (const auto& m : frobenius_decompose(spinor_form_bundle(n, 0), k_max - 1))
        e0[ev(OperatorKind::DiracSq, m)] += member_dim(m) * m.multiplicity;
    for (const auto& m : frobenius_decompose(spinor_bundle(n, 0), k_max))
        s0[ev(OperatorKind::DiracSq, m)] += member_dim(m) * m.multiplicity;
    ck.expect(e0 == s0, [&] { return "E_0 and S_0 Dirac spectra differ at n=" + std::to_string(n); });
}

// the closed form of an identity, skipped where it divides by zero
struct ClosedIdentity {
    std::map<GradientRole, R> coefficients;
    R constant;
};

void check_identity(Checker& ck, const WeitzenboeckSystem& sys, GradientRole a, GradientRole b,
                    const ClosedIdentity& closed, const std::string& what) {
    // only the gradients that exist in this system are compared
    std::map<GradientRole, R> present;
    for (const auto& [role, c] : closed.coefficients)
        if (sys.has(role)) present[role] = c;
    ck.guarded(what, [&] {
        const auto id = derive_identities(sys, a, b);
        if (id.unique) {
            ck.expect(id.coefficients == present && id.constant == closed.constant, [&] {
                std::string got;
                for (const auto& [r, c] : id.coefficients) got += std::string(" ") + role_name(r) + "=" + to_string(c);
                return what + " derived" + got + " const=" + to_string(id.constant);
            });
        }
        ck.expect(identity_holds(sys, present, closed.constant), [&] { return what + " does not hold"; });
    });
}

R weyl_ratio(const IrrepLabel& a, const IrrepLabel& b) { return R(weyl_dim(a)) / R(weyl_dim(b)); }

}  // namespace

void VerifyReport::merge(const VerifyReport& other) {
    checks += other.checks;
    failed += other.failed;
    for (const auto& v : other.violations)
        if (violations.size() < kMaxViolations) violations.push_back(v);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"branching", "weitzenboeck", "factorization", "crosscheck",
                                                "killing"};
    return names;
}

VerifyReport run_suite(const std::string& name, const VerifyGrid& grid) {
    if (name == "branching") return verify_branching(grid);
    if (name == "weitzenboeck") return verify_weitzenboeck(grid);
    if (name == "factorization") return verify_factorization_suite(grid);
    if (name == "crosscheck") return verify_crosscheck(grid);
    if (name == "killing") return verify_killing(grid);
    if (name == "all") {
        VerifyReport all;
        all.suite = "all";
        for (const auto& s : suite_names()) all.merge(run_suite(s, grid));
        return all;
    }
    throw Error(ErrorKind::ParseError, "unknown suite '" + name + "'");
}

VerifyReport verify_branching(const VerifyGrid& grid) {
    Checker ck("branching");
    std::mt19937_64 rng(grid.seed);
    const int N_lo = std::max(grid.n_min + 1, 4);
    const int N_hi = std::max(N_lo, std::min(grid.n_max + 1, 11));
    std::uniform_int_distribution<int> pick_N(N_lo, N_hi);
    std::uniform_int_distribution<int> pick_twice(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int sample = 0; sample < 500; ++sample) {
        const AlgebraDescriptor alg(pick_N(rng));
        const bool half_odd = coin(rng) == 1;
        // entries in {0..9/2} of the chosen class, sorted into a dominant weight
        std::vector<int> tw(static_cast<std::size_t>(alg.rank()));
        for (auto& x : tw) x = 2 * pick_twice(rng) + (half_odd ? 1 : 0);
        std::sort(tw.rbegin(), tw.rend());
        if (alg.series() == Series::D && coin(rng) == 1) tw.back() = -tw.back();
        WeightVector w(alg.rank());
        for (int i = 0; i < alg.rank(); ++i) w(i) = R(tw[static_cast<std::size_t>(i)], 2);
        ck.guarded("random branching", [&] {
            const auto parent = validate_weight(alg, w);
            const auto bl = branch(parent);
            std::int64_t sum = 0;
            std::set<std::string> seen;
            bool all_contained = true;
            for (const auto& c : bl.children) {
                sum += weyl_dim(c);
                seen.insert(weight_to_string(c.weight));
                all_contained = all_contained && contains(parent, c) == 1;
            }
            ck.expect(sum == weyl_dim(parent) && seen.size() == bl.children.size() && all_contained, [&] {
                return "branching of so(" + std::to_string(alg.dim_n) + ") (" + weight_to_string(w) + ")";
            });
        });
    }
    const int kb = std::min(grid.k_max, 4);
    for (int n = grid.n_min; n <= std::min(grid.n_max, 9); ++n) {
        for (int j = 0; j <= std::min(grid.j_max, 3); ++j) {
            std::vector<BundleDescriptor> bundles{spinor_bundle(n, j), sym_bundle(n, j)};
            if (j <= n / 2) {
                bundles.push_back(form_bundle(n, j));
                bundles.push_back(spinor_form_bundle(n, j));
            }
            for (const auto& b : bundles) {
                ck.guarded(tag("family/generic", n, j), [&] {
                    const R bound = generic_first_entry_bound(b, kb);
                    std::vector<FamilyMember> fam;
                    for (auto& m : frobenius_decompose(b, kb + 1))
                        if (m.parent_weight(0) <= bound) fam.push_back(std::move(m));
                    const auto gen = frobenius_generic(b, kb);
                    ck.expect(to_multiset(fam) == to_multiset(gen),
                              [&] { return tag("family/generic disagreement", n, j) + " kind " +
                                           std::to_string(static_cast<int>(b.kind)); });
                });
            }
        }
    }
    for (int n = grid.n_min; n <= grid.n_max; ++n)
        for (int j = 0; j <= grid.j_max; ++j) {
            std::int64_t d = 0;
            for (const auto& c : spinor_bundle(n, j).fiber) d += weyl_dim(c.label);
            ck.expect(R(d) == R(1 << (n / 2)) * binom(n + j - 2, j),
                      [&] { return tag("spinor fiber dimension", n, j); });
        }
    return ck.take();
}

VerifyReport verify_weitzenboeck(const VerifyGrid& grid) {
    Checker ck("weitzenboeck");
    using G = GradientRole;
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
        const R N(n);
        for (int j = 0; j <= grid.j_max; ++j) {
            const R J(j);
            ck.guarded(tag("spinor system", n, j), [&] {
                const auto sys = spinor_system(n, j);
                const std::map<G, std::pair<R, R>> table{
                    {G::TPlus, {J + R(1, 2), (N + J - 1) / (J + 1)}},
                    {G::U, {R(-1, 2), (N - 3) * (N + J - 1) * J / ((N + J - 2) * (J + 1))}},
                    {G::D, {-N / 2 + R(1, 2), R(1)}},
                    {G::TMinus, {-N - J + R(3, 2), J / (N + J - 2)}}};
                for (const auto& t : sys.targets) {
                    const auto& [w, rd] = table.at(t.role);
                    ck.expect(t.conformal_weight == w && t.shifted_weight - t.conformal_weight == (N - 1) / 2,
                              [&] { return tag("spinor conformal weight", n, j) + " " + role_name(t.role); });
                    ck.expect(t.relative_dim == rd,
                              [&] { return tag("spinor relative dimension", n, j) + " " + role_name(t.role); });
                }
                ck.expect(sys.targets.size() == static_cast<std::size_t>(2 + (j > 0 ? 1 : 0) + (j > 0 && n > 3 ? 1 : 0)),
                          [&] { return tag("spinor target count", n, j); });
                ck.expect(shifted_casimir(sys, 0) == N, [&] { return tag("spinor chat0", n, j); });
                ck.expect(independent_relation_count(sys) == static_cast<int>(sys.targets.size()) / 2,
                          [&] { return tag("spinor relation count", n, j); });
                ck.expect(sys.half_r1 == J * (N + J - 1) + N * (N - 1) / 8,
                          [&] { return tag("spinor curvature constant", n, j); });
                check_identity(ck, sys, G::D, G::TMinus,
                               {{{G::D, (N + 2 * J) * (N - 2) / (N + 2 * J - 2)},
                                 {G::TMinus, 4 * (N + J - 2) / (N + 2 * J - 2)}},
                                J * (N + J - 2) - N * (N - 1) / 8},
                               tag("WF1", n, j));
                check_identity(ck, sys, G::TPlus, G::D,
                               {{{G::TPlus, 4 * (J + 1) / (N + 2 * J)},
                                 {G::D, (N + 2 * J - 2) * (N - 2) / (N + 2 * J)}},
                                (J + 1) * (N + J - 1) - N * (N - 1) / 8},
                               tag("WF2", n, j));
                // normalization constants
                const auto d = normalization_sq(G::D, SystemKind::Spinor, n, j);
                ck.expect(d.square == (N + 2 * J) * (N - 2) / (N + 2 * J - 2) && (j > 0 || d.square == N),
                          [&] { return tag("spinor D normalization", n, j); });
                ck.expect(normalization_sq(G::TPlus, SystemKind::Spinor, n, j).square == 4 * (J + 1) / (N + 2 * J),
                          [&] { return tag("spinor T+ normalization", n, j); });
                const auto primed = primed_dirac_normalization(n, j);
                const R q = (N + 2 * J - 2) / (N + 2 * J);
                ck.expect(primed.sign == -1 && primed.square == q * q * d.square,
                          [&] { return tag("primed Dirac normalization", n, j); });
                if (j >= 1) {
                    const R tm = normalization_sq(G::TMinus, SystemKind::Spinor, n, j).square;
                    ck.expect(tm == 4 * (N + J - 2) / (N + 2 * J - 2),
                              [&] { return tag("spinor T- normalization", n, j); });
                    const auto lower = spinor_system(n, j - 1);
                    ck.expect(normalization_sq(G::TPlus, SystemKind::Spinor, n, j - 1).square *
                                      lower.find(G::TPlus)->relative_dim == tm,
                              [&] { return tag("T+ / T- adjoint normalization", n, j); });
                } else {
                    bool threw = false;
                    try {
                        normalization_sq(G::TMinus, SystemKind::Spinor, n, 0);
                    } catch (const Error& e) {
                        threw = e.kind() == ErrorKind::AbsentOperator;
                    }
                    ck.expect(threw, [&] { return tag("T-_0 must be absent", n, j); });
                }
            });
            ck.guarded(tag("sym system", n, j), [&] {
                const auto sys = sym_system(n, j);
                ck.expect(shifted_casimir(sys, 0) == N, [&] { return tag("sym chat0", n, j); });
                ck.expect(sys.half_r1 == J * (N + J - 2), [&] { return tag("sym curvature constant", n, j); });
                check_identity(ck, sys, G::TPlus, G::TMinus,
                               {{{G::TPlus, J + 1}, {G::TMinus, -(N + J - 3)}}, 2 * J * (N + J - 2)},
                               tag("sym Weitzenboeck", n, j));
                ck.expect(relation_holds(sys, {{G::TPlus, -J}, {G::U, R(1)}, {G::TMinus, N + J - 2}},
                                         -J * (N + J - 2)),
                          [&] { return tag("sym curvature relation", n, j); });
                const auto up = sys.find(G::TPlus);
                ck.expect((J + 1) * (N + 2 * J - 2) / ((N + J - 2) * (N + 2 * J)) == 1 / up->relative_dim,
                          [&] { return tag("sym T-/T+ coefficient", n, j); });
            });
            if (j <= n / 2) {
                ck.guarded(tag("spinor-form system", n, j), [&] {
                    const auto sys = spinor_form_system(n, j);
                    ck.expect(shifted_casimir(sys, 0) == N, [&] { return tag("E chat0", n, j); });
                    ck.expect(sys.half_r1 == J * (N - J + 1) + N * (N - 1) / 8,
                              [&] { return tag("E curvature constant", n, j); });
                    if (n - 2 * j + 2 != 0)
                        check_identity(ck, sys, G::D, G::TMinus,
                                       {{{G::D, (N + 2) * (N - 2 * J) / (N - 2 * J + 2)},
                                         {G::TMinus, 4 * (N - 2 * J + 1) * (N - J + 2) /
                                                         ((N - 2 * J + 3) * (N - 2 * J + 2))}},
                                        J * (N - J) - N * (N - 1) / 8},
                                       tag("E line 2", n, j));
                    if (n - 2 * j - 1 != 0 && n - 2 * j != 0) {
                        check_identity(ck, sys, G::TPlus, G::D,
                                       {{{G::TPlus, -4 * (N - 2 * J + 1) * (J + 1) / ((N - 2 * J - 1) * (N - 2 * J))},
                                         {G::D, (N - 2 * J + 2) * (N + 2) / (N - 2 * J)}},
                                        (J - 1) * (N - J + 1) - N * (N - 1) / 8},
                                       tag("E line 3", n, j));
                        check_identity(ck, sys, G::U, G::TPlus,
                                       {{{G::U, (N - J + 2) * (N + 2) / ((N - J + 1) * (N + 1))},
                                         {G::TPlus, (N - 2 * J) * (N - 2 * J + 1) / ((N - 2 * J - 1) * (N - J + 1))}},
                                        J * (N - J + 2) + N * (N + 1) / 8},
                                       tag("E line 4", n, j));
                    }
                    if (2 * j != n)
                        ck.expect(normalization_sq(G::D, SystemKind::SpinorForm, n, j).square ==
                                      (N + 2) * (N - 2 * J) / (N - 2 * J + 2),
                                  [&] { return tag("E D normalization", n, j); });
                    if (j >= 1) {
                        ck.expect(normalization_sq(G::TMinus, SystemKind::SpinorForm, n, j).square ==
                                      4 * (N - 2 * J + 1) * (N - J + 2) / ((N - 2 * J + 3) * (N - 2 * J + 2)),
                                  [&] { return tag("E T- normalization", n, j); });
                        // (T_{j-1}^+)* T_{j-1}^+ against T_j^- (T_j^-)*: the ratio of fiber dimensions
                        const auto lower = spinor_form_system(n, j - 1);
                        const auto* up = lower.find(G::TPlus);
                        ck.expect(up && (N - 2 * J + 1) * (N - J + 2) / (J * (N - 2 * J + 3)) == up->relative_dim &&
                                      up->relative_dim == weyl_ratio(sys.source, lower.source),
                                  [&] { return tag("E adjoint relation", n, j); });
                    }
                    if (j < n / 2)
                        ck.expect(normalization_sq(G::TPlus, SystemKind::SpinorForm, n, j).square ==
                                      4 * (J + 1) / (N - 2 * J),
                                  [&] { return tag("E T+ normalization", n, j); });
                });
            }
        }
    }
    return ck.take();
}

VerifyReport verify_factorization_suite(const VerifyGrid& grid) {
    Checker ck("factorization");
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
        const R N(n);
        for (int j = 0; j <= grid.j_max; ++j) {
            const R J(j);
            ck.guarded(tag("spinor factorization", n, j), [&] {
                for (const auto& r : verify_factorization(FactorFamily::SpinorSphere, n, j, grid.k_max)) {
                    const auto& m = r.member;
                    const R S(m.s);
                    const R q = (N + 2 * S - 2) / (N + 2 * J - 2);
                    ck.expect(r.product == 0 && r.vanishing_index == m.s &&
                                  ev(OperatorKind::DiracSq, m) ==
                                      q * q * (laplacian_ev(m) - (S * (N + S - 2) - N * (N - 1) / 8)),
                              [&] { return "spinor factorization " + tag(m); });
                }
            });
            ck.guarded(tag("T+ factorization", n, j), [&] {
                for (const auto& r : tplus_factorization_check(n, j, grid.k_max))
                    ck.expect(r.product == 0, [&] { return "T+ factorization " + tag(r.member); });
            });
            ck.guarded(tag("sym factorization", n, j), [&] {
                for (const auto& r : verify_factorization(FactorFamily::SymSphere, n, j, grid.k_max)) {
                    const auto& m = r.member;
                    const R S(m.s), K(m.k);
                    const R a = (J - S + 1) * (N + J + S - 2) / ((J + 1) * (N + 2 * J - 2));
                    ck.expect(r.product == 0 && r.vanishing_index == m.s &&
                                  ev(OperatorKind::TPlusAdjTPlus, m) == a * K * (N + K + 2 * J - 1),
                              [&] { return "sym factorization " + tag(m); });
                    if (m.k == 0)
                        ck.expect(laplacian_ev(m) == J * (N + J - 1) + S * (N + S - 3),
                                  [&] { return "sym Laplacian on ker T+ " + tag(m); });
                }
            });
            for (auto fam : {FactorFamily::SpinorSphere, FactorFamily::SymSphere}) {
                ck.guarded(tag("grading", n, j), [&] {
                    const auto g = grading_decomposition(fam, n, j, grid.k_max);
                    std::size_t total = 0;
                    for (const auto& [s, members] : g.slices) {
                        total += members.size();
                        for (const auto& m : members) ck.expect(m.s == s, [&] { return "grading slice " + tag(m); });
                    }
                    ck.expect(g.filtration_consistent && g.kernel_equals_slice &&
                                  total == frobenius_decompose(fam == FactorFamily::SpinorSphere ? spinor_bundle(n, j)
                                                                                                 : sym_bundle(n, j),
                                                               grid.k_max)
                                               .size(),
                              [&] { return tag("grading filtration", n, j); });
                });
            }
        }
        for (int j = 1; j <= n / 2; ++j) {
            ck.guarded(tag("spinor-form factorization", n, j), [&] {
                for (const auto& r : verify_factorization(FactorFamily::SpinorFormSphere, n, j, grid.k_max))
                    ck.expect(r.product == 0, [&] { return "spinor-form factorization " + tag(r.member); });
            });
        }
    }
    return ck.take();
}

VerifyReport verify_crosscheck(const VerifyGrid& grid) {
    Checker ck("crosscheck");
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
        for (int j = 0; j <= grid.j_max; ++j) {
            ck.guarded(tag("spinor spectra", n, j), [&] { crosscheck_spinor(ck, n, j, grid.k_max); });
            ck.guarded(tag("sym spectra", n, j), [&] { crosscheck_sym(ck, n, j, grid.k_max); });
        }
        for (int j = 0; j <= n / 2; ++j) {
            ck.guarded(tag("form spectra", n, j), [&] { crosscheck_forms(ck, n, j, grid.k_max); });
            ck.guarded(tag("spinor-form spectra", n, j), [&] { crosscheck_spinor_forms(ck, n, j, grid.k_max); });
        }
        ck.guarded(tag("j=0 cross-family", n, 0), [&] { crosscheck_j0(ck, n, grid.k_max); });
    }
    return ck.take();
}

VerifyReport verify_killing(const VerifyGrid& grid) {
    Checker ck("killing");
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
        ck.guarded(tag("killing", n, 0), [&] {
            ck.expect(killing_space_dim(n, 1).total_dim == n * (n + 1) / 2,
                      [&] { return tag("Killing vectors", n, 1); });
            const int N = n + 1;
            // Sym^2 of the Killing vectors, minus the Lambda^4 relations
            ck.expect(R(killing_space_dim(n, 2).total_dim) == binom(N * (N - 1) / 2 + 1, 2) - binom(N, 4),
                      [&] { return tag("Killing 2-tensors", n, 2); });
            for (int j = 0; j <= grid.j_max; ++j) {
                const auto chain = killing_chain_check(n, j);
                ck.expect(chain.failures.empty(), [&] {
                    return tag("Killing chain", n, j) + ": " + (chain.failures.empty() ? "" : chain.failures.front());
                });
                const auto p = primitive_killing(n, j);
                for (const auto& piece : p.primitive_pieces)
                    ck.expect(piece.dim > 0 && is_dominant(piece.labels.front().algebra, piece.labels.front().weight),
                              [&] { return tag("primitive piece", n, j); });
            }
            for (int j = 0; j <= n / 2; ++j) {
                const auto f = killing_forms(n, j);
                ck.expect(ev(OperatorKind::CAdjC, f.killing.member) == 0 &&
                              ev(OperatorKind::DDStar, f.killing.member) == 0,
                          [&] { return tag("Killing form eigenvalues", n, j); });
                ck.expect(ev(OperatorKind::CAdjC, f.co_killing.member) == 0 &&
                              ev(OperatorKind::DStarD, f.co_killing.member) == 0,
                          [&] { return tag("co-Killing form eigenvalues", n, j); });
                ck.expect(f.killing.dim == member_dim(f.killing.member) &&
                              R(f.co_killing.dim) == binom(n + 1, j),
                          [&] { return tag("Killing form dimensions", n, j); });
            }
        });
    }
    return ck.take();
}

}  // namespace hspin
