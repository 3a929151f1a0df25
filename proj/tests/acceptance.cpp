#include "hspin/factorization.hpp"
#include "hspin/killing.hpp"
#include "hspin/output.hpp"
#include "hspin/weitzenboeck.hpp"

#include "oracles.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace hspin;

namespace {

using R = Rational;
using Op = OperatorKind;
using G = GradientRole;

struct Criterion {
    int number;
    std::string title;
    std::int64_t checks = 0;
    std::int64_t failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failed++ == 0) first_failure = what;
    }

    template <class F>
    void guarded(const std::string& what, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            expect(false, what + ": " + e.what());
        }
    }
};

std::string at(int n, int j, int k = -1, int s = -1) {
    std::string t = "n=" + std::to_string(n) + " j=" + std::to_string(j);
    if (k >= 0) t += " k=" + std::to_string(k);
    if (s >= 0) t += " s=" + std::to_string(s);
    return t;
}

R ev(Op op, const FamilyMember& m) { return operator_ev(op, m); }

void dirac(Criterion& c) {
    for (int n = 3; n <= 10; ++n)
        for (int k = 0; k <= 20; ++k)
            c.guarded(at(n, 0, k), [&] {
                const auto m = make_member(Family::SpinorSphere, n, 0, k, 0);
                const R t = R(k) + R(n, 2);
                c.expect(ev(Op::DiracSq, m) == t * t, "D^2 " + at(n, 0, k));
                c.expect(R(member_dim(m) * m.multiplicity) == 2 * oracle::dirac_multiplicity(n, k),
                         "multiplicity " + at(n, 0, k));
            });
}

void higher_spin(Criterion& c) {
    for (int n = 3; n <= 10; ++n)
        for (int j = 0; j <= 5; ++j)
            for (int k = 0; k <= 20; ++k)
                for (int s = 0; s <= j; ++s)
                    c.guarded(at(n, j, k, s), [&] {
                        const auto m = make_member(Family::SpinorSphere, n, j, k, s);
                        const R N(n), t = R(j + k) + N / 2, r = R(n + 2 * s - 2) / (n + 2 * j - 2);
                        c.expect(ev(Op::DiracSq, m) == r * r * t * t, "D^2 " + at(n, j, k, s));
                        const R lap = casimir(validate_weight(so(n + 1), m.parent_weight));
                        c.expect(laplacian_ev(m) == lap, "Laplacian via Casimir " + at(n, j, k, s));
                        c.expect(lap - (s * (s + n - 2) - N * (N - 1) / 8) == t * t, "Laplacian shift " + at(n, j, k, s));
                    });
}

void factorizations(Criterion& c) {
    auto check_reports = [&](const std::vector<FactorReport>& rs, const std::string& what, bool index_is_s) {
        for (const auto& r : rs) {
            c.expect(r.product == 0, what + " product " + at(r.member.n, r.member.j, r.member.k, r.member.s));
            c.expect(r.vanishing_index >= 0 && (!index_is_s || r.vanishing_index == r.member.s),
                     what + " vanishing factor " + at(r.member.n, r.member.j, r.member.k, r.member.s));
        }
    };
    for (int n = 3; n <= 10; ++n)
        for (int j = 0; j <= 5; ++j) {
            c.guarded("spinor " + at(n, j), [&] {
                check_reports(verify_factorization(FactorFamily::SpinorSphere, n, j, 20), "spinor", true);
            });
            c.guarded("sym " + at(n, j), [&] {
                check_reports(verify_factorization(FactorFamily::SymSphere, n, j, 20), "sym", true);
            });
            c.guarded("T+ " + at(n, j), [&] { check_reports(tplus_factorization_check(n, j, 20), "T+", true); });
            if (j >= 1 && j <= n / 2)
                c.guarded("spinor-form " + at(n, j), [&] {
                    for (const auto& r : verify_factorization(FactorFamily::SpinorFormSphere, n, j, 20)) {
                        const auto& m = r.member;
                        c.expect(r.product == 0, "spinor-form product " + at(n, j, m.k));
                        const int want = (2 * j == n) ? 0 : (m.family == Family::SpinorFormUp ? 1 : 0);
                        c.expect(r.vanishing_index == want, "spinor-form vanishing factor " + at(n, j, m.k));
                    }
                });
        }
}

void identity(Criterion& c, const WeitzenboeckSystem& sys, G a, G b, std::map<G, R> coeffs, const R& constant,
              const std::string& what) {
    std::map<G, R> present;
    for (const auto& [role, v] : coeffs)
        if (sys.has(role)) present[role] = v;
    c.guarded(what, [&] {
        const auto id = derive_identities(sys, a, b);
        if (id.unique) c.expect(id.coefficients == present && id.constant == constant, what + " coefficients");
        c.expect(identity_holds(sys, present, constant), what + " implied");
    });
}

void weitzenboeck(Criterion& c) {
    for (int n = 3; n <= 12; ++n)
        for (int j = 0; j <= 6; ++j) {
            const R N(n), J(j);
            c.guarded("systems " + at(n, j), [&] {
                const auto sp = spinor_system(n, j);
                identity(c, sp, G::D, G::TMinus,
                         {{G::D, (N + 2 * J) * (N - 2) / (N + 2 * J - 2)}, {G::TMinus, 4 * (N + J - 2) / (N + 2 * J - 2)}},
                         J * (N + J - 2) - N * (N - 1) / 8, "WF1 " + at(n, j));
                identity(c, sp, G::TPlus, G::D,
                         {{G::TPlus, 4 * (J + 1) / (N + 2 * J)}, {G::D, (N + 2 * J - 2) * (N - 2) / (N + 2 * J)}},
                         (J + 1) * (N + J - 1) - N * (N - 1) / 8, "WF2 " + at(n, j));

                const auto dn = normalization_sq(G::D, SystemKind::Spinor, n, j).square;
                c.expect(dn == (N + 2 * J) * (N - 2) / (N + 2 * J - 2), "D normalization " + at(n, j));
                if (j == 0) c.expect(dn == N, "D_0 = sqrt(n) D~_0 " + at(n, j));
                c.expect(normalization_sq(G::TPlus, SystemKind::Spinor, n, j).square == 4 * (J + 1) / (N + 2 * J),
                         "T+ normalization " + at(n, j));
                if (j >= 1)
                    c.expect(normalization_sq(G::TMinus, SystemKind::Spinor, n, j).square ==
                                 4 * (N + J - 2) / (N + 2 * J - 2),
                             "T- normalization " + at(n, j));
                const auto primed = primed_dirac_normalization(n, j);
                const R q = (N + 2 * J - 2) / (N + 2 * J);
                c.expect(primed.sign == -1 && primed.square == q * q * dn, "primed D " + at(n, j));

                // T-/T+ relation on symmetric tensors, coefficient and spectrum
                if (n >= 4) {
                    const auto sy = sym_system(n, j);
                    const R wt = (J + 1) * (N + 2 * J - 2) / ((N + J - 2) * (N + 2 * J));
                    c.expect(wt == 1 / sy.find(G::TPlus)->relative_dim, "W-T coefficient " + at(n, j));
                    for (int k = 0; k <= 6; ++k)
                        for (int s = 0; s <= j; ++s)
                            c.expect(ev(Op::TMinusAdjTMinus, make_member(Family::SymSphere, n, j + 1, k, s)) ==
                                         wt * ev(Op::TPlusAdjTPlus, make_member(Family::SymSphere, n, j, k + 1, s)),
                                     "W-T spectrum " + at(n, j, k, s));
                }

                if (j <= n / 2) {
                    const auto e = spinor_form_system(n, j);
                    c.expect(e.half_r1 == J * (N - J + 1) + N * (N - 1) / 8, "E line 1 " + at(n, j));
                    if (n - 2 * j + 2 != 0)
                        identity(c, e, G::D, G::TMinus,
                                 {{G::D, (N + 2) * (N - 2 * J) / (N - 2 * J + 2)},
                                  {G::TMinus, 4 * (N - 2 * J + 1) * (N - J + 2) / ((N - 2 * J + 3) * (N - 2 * J + 2))}},
                                 J * (N - J) - N * (N - 1) / 8, "E line 2 " + at(n, j));
                    if (n - 2 * j - 1 > 0) {
                        identity(c, e, G::TPlus, G::D,
                                 {{G::TPlus, -4 * (N - 2 * J + 1) * (J + 1) / ((N - 2 * J - 1) * (N - 2 * J))},
                                  {G::D, (N - 2 * J + 2) * (N + 2) / (N - 2 * J)}},
                                 (J - 1) * (N - J + 1) - N * (N - 1) / 8, "E line 3 " + at(n, j));
                        identity(c, e, G::U, G::TPlus,
                                 {{G::U, (N - J + 2) * (N + 2) / ((N - J + 1) * (N + 1))},
                                  {G::TPlus, (N - 2 * J) * (N - 2 * J + 1) / ((N - 2 * J - 1) * (N - J + 1))}},
                                 J * (N - J + 2) + N * (N + 1) / 8, "E line 4 " + at(n, j));
                    }
                    if (2 * j != n)
                        c.expect(normalization_sq(G::D, SystemKind::SpinorForm, n, j).square ==
                                     (N + 2) * (N - 2 * J) / (N - 2 * J + 2),
                                 "E D normalization " + at(n, j));
                    if (j >= 1)
                        c.expect(normalization_sq(G::TMinus, SystemKind::SpinorForm, n, j).square ==
                                     4 * (N - 2 * J + 1) * (N - J + 2) / ((N - 2 * J + 3) * (N - 2 * J + 2)),
                                 "E T- normalization " + at(n, j));
                    if (j < n / 2)
                        c.expect(normalization_sq(G::TPlus, SystemKind::SpinorForm, n, j).square ==
                                     4 * (J + 1) / (N - 2 * J),
                                 "E T+ normalization " + at(n, j));
                }
            });
        }
}

void appendix(Criterion& c) {
    for (int n = 3; n <= 12; ++n)
        for (int j = 0; j <= 6; ++j) {
            const R N(n), J(j);
            c.guarded(at(n, j), [&] {
                const auto sys = spinor_system(n, j);
                const std::map<G, std::pair<R, R>> table{
                    {G::TPlus, {J + R(1, 2), (N + J - 1) / (J + 1)}},
                    {G::U, {R(-1, 2), (N - 3) * (N + J - 1) * J / ((N + J - 2) * (J + 1))}},
                    {G::D, {-N / 2 + R(1, 2), R(1)}},
                    {G::TMinus, {-N - J + R(3, 2), J / (N + J - 2)}}};
                for (const auto& t : sys.targets) {
                    const auto& [w, rd] = table.at(t.role);
                    c.expect(conformal_weight(t.source, t.target) == w, "weight " + std::string(role_name(t.role)) + " " + at(n, j));
                    c.expect(t.shifted_weight - t.conformal_weight == (N - 1) / 2, "shift " + at(n, j));
                    c.expect(relative_dim(t.source, t.target) == rd, "relative dim " + std::string(role_name(t.role)) + " " + at(n, j));
                    c.expect(R(weyl_dim(t.target)) / R(weyl_dim(t.source)) == rd, "Weyl ratio " + at(n, j));
                }
                c.expect(shifted_casimir(sys, 0) == N, "chat0 spinor " + at(n, j));
                c.expect(shifted_casimir(sym_system(n, j), 0) == N, "chat0 sym " + at(n, j));
                if (j <= n / 2) c.expect(shifted_casimir(spinor_form_system(n, j), 0) == N, "chat0 E " + at(n, j));
            });
        }
}

void branching(Criterion& c) {
    std::mt19937_64 rng(20240601);
    std::map<std::pair<int, bool>, std::vector<WeightVector>> pool;
    for (int trial = 0; trial < 500; ++trial) {
        const int N = 4 + static_cast<int>(rng() % 8);  // so(4)..so(11), rank 2..5
        const bool half = trial % 2 == 1;
        auto& ws = pool[{N, half}];
        if (ws.empty()) ws = dominant_weights(so(N), R(9, 2), half);
        const auto& w = ws[rng() % ws.size()];
        c.guarded("random weight", [&] {
            const auto parent = validate_weight(so(N), w);
            std::int64_t sum = 0;
            std::set<std::string> seen;
            for (const auto& ch : branch(parent).children) {
                sum += weyl_dim(ch);
                c.expect(seen.insert(weight_to_string(ch.weight)).second, "repeated child of " + weight_to_string(w));
            }
            c.expect(sum == weyl_dim(parent), "conservation at " + weight_to_string(w));
        });
    }
    for (int n = 3; n <= 9; ++n)
        for (int j = 0; j <= 3; ++j) {
            std::vector<BundleDescriptor> bundles{spinor_bundle(n, j), sym_bundle(n, j)};
            if (j <= n / 2) {
                bundles.push_back(form_bundle(n, j));
                bundles.push_back(spinor_form_bundle(n, j));
            }
            for (const auto& b : bundles)
                for (int kb = 0; kb <= 4; ++kb)
                    c.guarded("agreement " + at(n, j), [&] {
                        const R bound = generic_first_entry_bound(b, kb);
                        std::vector<FamilyMember> fam;
                        for (auto& m : frobenius_decompose(b, kb + 1))
                            if (m.parent_weight(0) <= bound) fam.push_back(std::move(m));
                        c.expect(to_multiset(fam) == to_multiset(frobenius_generic(b, kb)),
                                 "family/generic " + at(n, j, kb));
                    });
        }
}

void tables(Criterion& c) {
    for (int n = 3; n <= 10; ++n) {
        const R N(n);
        for (int j = 0; j <= n / 2; ++j) {
            const R J(j);
            for (int k = 0; k <= 15; ++k) {
                const R K(k);
                c.guarded("forms " + at(n, j, k), [&] {
                    if (member_exists(Family::FormUp, n, j, k)) {
                        const auto m = make_member(Family::FormUp, n, j, k);
                        c.expect(laplacian_ev(m) == (K + J + 1) * (N + K - J), "form up lap " + at(n, j, k));
                        c.expect(ev(Op::DDStar, m) == 0, "form up dd* " + at(n, j, k));
                        c.expect(ev(Op::DStarD, m) == (K + J + 1) * (N + K - J), "form up d*d " + at(n, j, k));
                        c.expect(ev(Op::CAdjC, m) == J / (J + 1) * K * (N + K + 1), "form up C " + at(n, j, k));
                    }
                    if (member_exists(Family::FormDown, n, j, k)) {
                        const auto m = make_member(Family::FormDown, n, j, k);
                        c.expect(laplacian_ev(m) == (K + J) * (N - J + K + 1), "form down lap " + at(n, j, k));
                        c.expect(ev(Op::DDStar, m) == (K + J) * (N - J + K + 1), "form down dd* " + at(n, j, k));
                        c.expect(ev(Op::DStarD, m) == 0, "form down d*d " + at(n, j, k));
                        c.expect(ev(Op::CAdjC, m) == (N - J) / (N - J + 1) * K * (N + K + 1), "form down C " + at(n, j, k));
                    }
                });
                c.guarded("spinor-forms " + at(n, j, k), [&] {
                    const R top = N / 2 + K + 1;
                    if (member_exists(Family::SpinorFormUp, n, j, k)) {
                        const auto m = make_member(Family::SpinorFormUp, n, j, k);
                        c.expect(laplacian_ev(m) == (K + J + 1) * (N - J + K + 1) + N * (N + 1) / 8, "E up lap " + at(n, j, k));
                        c.expect(ev(Op::DiracSq, m) == top * top, "E up D2 " + at(n, j, k));
                        c.expect(ev(Op::TMinusAdjTMinus, m) == 0, "E up T- " + at(n, j, k));
                        const R tp = 4 * (N - 2 * J - 1) / ((N - 2 * J) * (N - 2 * J)) * (N - J + K + 1) * (K + J + 1);
                        c.expect(ev(Op::TPlusAdjTPlus, m) == tp, "E up T+ " + at(n, j, k));
                        if (n == 2 * j + 1) c.expect(ev(Op::TPlusAdjTPlus, m) == 0, "E up T+ degenerate " + at(n, j, k));
                        c.expect(ev(Op::UAdjU, m) == (N + 1) * J / ((N + 2) * (J + 1)) * K * (N + K + 2), "E up U " + at(n, j, k));
                    }
                    if (member_exists(Family::SpinorFormDown, n, j, k)) {
                        const auto m = make_member(Family::SpinorFormDown, n, j, k);
                        c.expect(laplacian_ev(m) == (K + J) * (N - J + K + 2) + N * (N + 1) / 8, "E down lap " + at(n, j, k));
                        const R r = (N - 2 * J) / (N - 2 * J + 2);
                        c.expect(ev(Op::DiracSq, m) == r * r * top * top, "E down D2 " + at(n, j, k));
                        if (n == 2 * j) c.expect(ev(Op::DiracSq, m) == 0, "E down D2 degenerate " + at(n, j, k));
                        c.expect(ev(Op::TMinusAdjTMinus, m) ==
                                     4 * (N - 2 * J + 1) / ((N - 2 * J + 2) * (N - 2 * J + 2)) * (K + J) * (N - J + K + 2),
                                 "E down T- " + at(n, j, k));
                        c.expect(ev(Op::TPlusAdjTPlus, m) == 0, "E down T+ " + at(n, j, k));
                        c.expect(ev(Op::UAdjU, m) == (N + 1) * (N - J + 1) / ((N + 2) * (N - J + 2)) * K * (N + K + 2),
                                 "E down U " + at(n, j, k));
                    }
                });
            }
        }
        // E_0 against S_0 as eigenvalue -> total dimension
        c.guarded("j=0 cross-family " + at(n, 0), [&] {
            const int K = 15;
            std::map<std::string, std::int64_t> e0, s0;
            for (const auto& line : spectrum_table(spinor_form_bundle(n, 0), Op::DiracSq, K - 1))
                e0[to_string(line.eigenvalue)] += line.dim * line.multiplicity;
            for (const auto& line : spectrum_table(spinor_bundle(n, 0), Op::DiracSq, K))
                s0[to_string(line.eigenvalue)] += line.dim * line.multiplicity;
            c.expect(e0 == s0, "E_0 and S_0 Dirac spectra " + at(n, 0));
        });
    }
}

void killing(Criterion& c) {
    for (int n = 3; n <= 10; ++n) {
        c.guarded("K1 " + at(n, 1), [&] {
            c.expect(killing_space_dim(n, 1).total_dim == n * (n + 1) / 2, "K^1 " + at(n, 1));
        });
        for (int j = 0; j <= n / 2; ++j)
            c.guarded("Killing forms " + at(n, j), [&] {
                const auto f = killing_forms(n, j);
                c.expect(f.killing.member.k == 0, "Killing form member " + at(n, j));
                c.expect(ev(Op::CAdjC, f.killing.member) == 0, "C*C on Killing forms " + at(n, j));
                c.expect(ev(Op::DDStar, f.killing.member) == 0, "dd* on Killing forms " + at(n, j));
            });
    }
    c.guarded("K2 on S^4", [&] {
        const auto k2 = killing_space_dim(4, 2);
        c.expect(k2.total_dim == 50, "K^2(S^4) = 50");
        c.expect(R(k2.total_dim) == oracle::sym2_lambda2_dim(5) - oracle::lambda4_dim(5), "plethysm 55 - 5");
        c.expect(killing_forms(4, 2).killing.dim == 10, "Killing 2-forms on S^4");
        c.expect(R(killing_forms(4, 2).killing.dim) == oracle::binom(5, 2), "dim Lambda^2 R^5");
    });
}

// the stated kernel of each operator
bool in_kernel(Op op, const FamilyMember& m) {
    const int n = m.n, j = m.j, k = m.k, s = m.s;
    switch (m.family) {
        case Family::SpinorSphere:
            if (op == Op::TPlusAdjTPlus) return k == 0;
            if (op == Op::TMinusAdjTMinus) return j == 0 || s == j;
            if (op == Op::UAdjU) return j == 0 || n == 3 || s == 0;
            return false;
        case Family::SymSphere:
            if (op == Op::TPlusAdjTPlus) return k == 0;
            if (op == Op::TMinusAdjTMinus) return j == 0 || s == j;
            if (op == Op::UAdjU) return j == 0 || s == 0;
            return k == 0 && j == 0 && op == Op::Laplacian;
        case Family::FormUp:
            if (op == Op::DDStar) return true;
            if (op == Op::CAdjC) return k == 0 || j == 0;
            return false;
        case Family::FormDown:
            if (op == Op::DStarD) return true;
            if (op == Op::CAdjC) return k == 0;
            if (op == Op::DDStar || op == Op::Laplacian) return j == 0;
            return false;
        case Family::SpinorFormUp:
            if (op == Op::TMinusAdjTMinus) return true;
            if (op == Op::TPlusAdjTPlus) return n == 2 * j + 1;
            if (op == Op::UAdjU) return j == 0 || k == 0;
            return false;
        case Family::SpinorFormDown:
            if (op == Op::TPlusAdjTPlus) return true;
            if (op == Op::TMinusAdjTMinus) return j == 0;
            if (op == Op::UAdjU) return k == 0;
            if (op == Op::DiracSq) return n == 2 * j;
            return false;
    }
    return false;
}

void positivity(Criterion& c) {
    for (int n = 3; n <= 10; ++n)
        for (int j = 0; j <= 5; ++j) {
            std::vector<BundleDescriptor> bundles{spinor_bundle(n, j), sym_bundle(n, j)};
            if (j <= n / 2) {
                bundles.push_back(form_bundle(n, j));
                bundles.push_back(spinor_form_bundle(n, j));
            }
            for (const auto& b : bundles)
                c.guarded("positivity " + at(n, j), [&] {
                    for (const auto& m : frobenius_decompose(b, 20))
                        for (Op op : operators_for(m.family)) {
                            if (m.family == Family::SymSphere && op == Op::UAdjU && n == 3) continue;
                            const R v = ev(op, m);
                            const std::string what = std::string(family_name(m.family)) + " " + op_name(op) + " " +
                                                     at(n, j, m.k, m.s);
                            c.expect(v >= 0, "negative " + what);
                            c.expect((v == 0) == in_kernel(op, m), "kernel " + what);
                        }
                });
            if (j >= 1 && j <= n / 2)
                c.guarded("Hodge " + at(n, j), [&] {
                    for (const auto& m : frobenius_decompose(spinor_form_bundle(n, j), 20)) {
                        const R gap = laplacian_ev(m) - R(n * (n + 1), 8);
                        c.expect(gap >= j * (n - j + 2) && gap > 0, "harmonic piece " + at(n, j, m.k));
                    }
                });
        }
}

struct Proc {
    int code = -1;
    std::string out;
};

Proc shell(const std::string& cmd) {
    Proc p;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return p;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) p.out.append(buf, got);
    const int status = pclose(f);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

void cli_contract(Criterion& c) {
    const std::string bin = HSPIN_CLI_PATH;
    c.guarded("verify all", [&] {
        const auto v = shell(bin + " verify --suite all --n-min 3 --n-max 10 --j-max 4 --k-max 15 --format json");
        c.expect(v.code == 0, "verify exit code " + std::to_string(v.code));
        const auto doc = Json::parse(v.out);
        c.expect(doc["status"] == "ok", "verify status");
        c.expect(doc["checks"].get<std::int64_t>() >= 10000, "verify check count");
        const auto again = shell(bin + " verify --suite all --n-min 3 --n-max 10 --j-max 4 --k-max 15 --format json");
        c.expect(again.out == v.out, "verify output is byte-identical");
    });
    for (const std::string space : {"spinor", "sym", "form", "spinor-form"})
        c.guarded("round trip " + space, [&] {
            const std::string base = bin + " spectrum --space " + space + " --n 6 --j 2 --k-max 6 --op lap";
            const auto js = shell(base + " --format json");
            const auto cs = shell(base + " --format csv");
            c.expect(js.code == 0 && cs.code == 0, "spectrum exit " + space);
            const auto doc = Json::parse(js.out);
            const auto rows = parse_csv(cs.out);
            c.expect(rows.size() == doc["lines"].size() && !rows.empty(), "row count " + space);
            for (std::size_t i = 0; i < rows.size() && i < doc["lines"].size(); ++i) {
                R num, den;
                std::string weight;
                for (const auto& [col, cell] : rows[i]) {
                    if (col == "eig_num") num = parse_rational(cell);
                    if (col == "eig_den") den = parse_rational(cell);
                    if (col == "weight") weight = cell;
                }
                const auto& line = doc["lines"][i];
                const auto m = make_member(parse_family(line["family"].get<std::string>()), line["n"], line["j"],
                                           line["k"], line["s"].is_null() ? 0 : line["s"].get<int>());
                c.expect(num / den == rational_from_json(line["eig"]), "csv/json eigenvalue " + space);
                c.expect(rational_from_json(line["eig"]) == laplacian_ev(m), "json eigenvalue exact " + space);
                c.expect(weight_from_json(line["weight"]) == m.parent_weight, "json weight " + space);
                c.expect(weight_to_string(m.parent_weight, ';') == weight, "csv weight " + space);
            }
            c.expect(shell(base + " --format csv").out == cs.out, "csv byte-identical " + space);
        });
}

}  // namespace

int main() {
    std::vector<Criterion> all{
        {1, "Dirac spectrum on S^n with classical multiplicities"},
        {2, "higher spin Dirac spectrum and the Laplacian shift"},
        {3, "factorization formulas on every eigenspace"},
        {4, "Weitzenboeck coefficients and normalizations"},
        {5, "conformal weights, relative dimensions, chat0"},
        {6, "branching conservation and family/generic agreement"},
        {7, "form and spinor-form eigenvalue tables, j=0 cross-family"},
        {8, "Killing tensor and Killing form counts"},
        {9, "positivity, kernels and the empty harmonic piece"},
        {10, "command line contract"},
    };
    void (*runners[])(Criterion&) = {dirac, higher_spin, factorizations, weitzenboeck, appendix,
                                     branching, tables, killing, positivity, cli_contract};
    int bad = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto& c = all[i];
        runners[i](c);
        const bool pass = c.failed == 0 && c.checks > 0;
        if (!pass) ++bad;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << c.checks
                  << " checks, " << c.failed << " failed)";
        if (!pass && !c.first_failure.empty()) std::cout << " first failure: " << c.first_failure;
        std::cout << "\n";
    }
    return bad == 0 ? 0 : 1;
}
