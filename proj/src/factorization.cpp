#include "hspin/factorization.hpp"

namespace hspin {

namespace {

using R = Rational;

void require(bool ok, FactorFamily family, const FamilyMember& m) {
    if (ok) return;
    (void)family;
    throw Error(ErrorKind::NotApplicable,
                std::string("factorization does not cover ") + family_name(m.family) + " members here");
}

R ev(OperatorKind op, const FamilyMember& m) { return operator_ev(op, m); }

std::string describe(const FactorReport& r) {
    std::string out = std::string(family_name(r.member.family)) + " n=" + std::to_string(r.member.n) +
                      " j=" + std::to_string(r.member.j) + " k=" + std::to_string(r.member.k) +
                      " s=" + std::to_string(r.member.s) + " factors:";
    for (const auto& f : r.factor_evs) out += " " + to_string(f);
    return out;
}

BundleDescriptor bundle_for(FactorFamily family, int n, int j) {
    switch (family) {
        case FactorFamily::SpinorSphere: return spinor_bundle(n, j);
        case FactorFamily::SymSphere: return sym_bundle(n, j);
        case FactorFamily::SpinorFormSphere: return spinor_form_bundle(n, j);
    }
    throw Error(ErrorKind::NotApplicable, "unknown factor family");
}

int expected_index(FactorFamily family, const FamilyMember& m) {
    if (family != FactorFamily::SpinorFormSphere) return m.s;
    if (2 * m.j == m.n) return 0;
    return m.family == Family::SpinorFormUp ? 1 : 0;
}

}  // namespace

Rational b_factor_ev(int sp, const FamilyMember& m) {
    require(m.family == Family::SpinorSphere && sp >= 0 && sp <= m.j, FactorFamily::SpinorSphere, m);
    const R n(m.n), j(m.j), s(sp);
    const R ratio = (n + 2 * s - 2) / (n + 2 * j - 2);
    return ev(OperatorKind::DiracSq, m) -
           ratio * ratio * (laplacian_ev(m) - (s * (n + s - 2) - n * (n - 1) / 8));
}

Rational sym_factor_ev(int sp, const FamilyMember& m) {
    require(m.family == Family::SymSphere && sp >= 0 && sp <= m.j, FactorFamily::SymSphere, m);
    const R n(m.n), j(m.j), s(sp);
    const R a = (j - s + 1) * (n + j + s - 2) / ((j + 1) * (n + 2 * j - 2));
    const R b = j * (n + j - 1) + s * (n + s - 3);
    return ev(OperatorKind::TPlusAdjTPlus, m) - a * (laplacian_ev(m) - b);
}

Rational tplus_factor_ev(int sp, const FamilyMember& m) {
    require(m.family == Family::SpinorSphere && sp >= 0 && sp <= m.j, FactorFamily::SpinorSphere, m);
    const R n(m.n), j(m.j), s(sp);
    const R a = 4 * (j - s + 1) * (n + j + s - 1) / ((n + 2 * j) * (n + 2 * j));
    const R b = j * (n + j) + s * (n + s - 2) + n * (n + 1) / 8;
    return ev(OperatorKind::TPlusAdjTPlus, m) - a * (laplacian_ev(m) - b);
}

std::vector<Rational> spinor_form_factor_evs(const FamilyMember& m) {
    require(m.family == Family::SpinorFormUp || m.family == Family::SpinorFormDown,
            FactorFamily::SpinorFormSphere, m);
    const R n(m.n), j(m.j);
    const R lap = laplacian_ev(m);
    if (2 * m.j == m.n)
        return {lap - ev(OperatorKind::TMinusAdjTMinus, m) - (j * (n - j) - n * (n - 1) / 8)};
    const R d2 = ev(OperatorKind::DiracSq, m);
    const R ratio = (n - 2 * j) / (n - 2 * j + 2);
    return {d2 - ratio * ratio * (lap - ((j - 1) * (n - j + 1) - n * (n - 1) / 8)),
            d2 - (lap - (j * (n - j) - n * (n - 1) / 8))};
}

FactorReport factor_report(FactorFamily family, const FamilyMember& m) {
    FactorReport r;
    r.member = m;
    switch (family) {
        case FactorFamily::SpinorSphere:
            for (int s = 0; s <= m.j; ++s) r.factor_evs.push_back(b_factor_ev(s, m));
            break;
        case FactorFamily::SymSphere:
            for (int s = 0; s <= m.j; ++s) r.factor_evs.push_back(sym_factor_ev(s, m));
            break;
        case FactorFamily::SpinorFormSphere: r.factor_evs = spinor_form_factor_evs(m); break;
    }
    r.product = 1;
    int zeros = 0;
    for (std::size_t i = 0; i < r.factor_evs.size(); ++i) {
        r.product *= r.factor_evs[i];
        if (r.factor_evs[i] == 0) {
            ++zeros;
            r.vanishing_index = static_cast<int>(i);
        }
    }
    if (zeros != 1) r.vanishing_index = -1;
    return r;
}

std::vector<FactorReport> verify_factorization(FactorFamily family, int n, int j, int k_max) {
    if (family == FactorFamily::SpinorFormSphere && (j < 1 || j > n / 2))
        throw Error(ErrorKind::NotApplicable, "the two-factor identity covers 1 <= j <= n/2");
    std::vector<FactorReport> out;
    for (const auto& m : frobenius_decompose(bundle_for(family, n, j), k_max)) {
        auto r = factor_report(family, m);
        if (r.product != 0 || r.vanishing_index != expected_index(family, m))
            throw Error(ErrorKind::FactorizationViolated, describe(r));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<FactorReport> tplus_factorization_check(int n, int j, int k_max) {
    std::vector<FactorReport> out;
    for (const auto& m : frobenius_decompose(spinor_bundle(n, j), k_max)) {
        FactorReport r;
        r.member = m;
        r.product = 1;
        for (int s = 0; s <= j; ++s) {
            r.factor_evs.push_back(tplus_factor_ev(s, m));
            r.product *= r.factor_evs.back();
        }
        if (r.factor_evs[static_cast<std::size_t>(m.s)] == 0) r.vanishing_index = m.s;
        const R N(n), J(j), S(m.s);
        const bool kernel_ok = m.k != 0 || laplacian_ev(m) == J * (N + J) + S * (N + S - 2) + N * (N + 1) / 8;
        if (r.product != 0 || r.vanishing_index != m.s || !kernel_ok)
            throw Error(ErrorKind::FactorizationViolated, describe(r));
        out.push_back(std::move(r));
    }
    return out;
}

GradingReport grading_decomposition(FactorFamily family, int n, int j, int k_max) {
    if (family == FactorFamily::SpinorFormSphere)
        throw Error(ErrorKind::NotApplicable, "grading is defined for spinors and symmetric tensors");
    GradingReport g;
    for (const auto& m : frobenius_decompose(bundle_for(family, n, j), k_max)) {
        const auto r = factor_report(family, m);
        g.slices[m.s].push_back(m);
        // F_k = ker prod_{s' >= k} B(s';j) should be exactly the members with s >= k
        for (int k = 0; k <= j; ++k) {
            R prod(1);
            for (int sp = k; sp <= j; ++sp) prod *= r.factor_evs[static_cast<std::size_t>(sp)];
            if ((prod == 0) != (m.s >= k)) g.filtration_consistent = false;
        }
        for (int sp = 0; sp <= j; ++sp)
            if (r.factor_evs[static_cast<std::size_t>(sp)] == 0 && sp != m.s) g.kernel_equals_slice = false;
        if (r.factor_evs[static_cast<std::size_t>(m.s)] != 0) g.filtration_consistent = false;
    }
    return g;
}

}  // namespace hspin
