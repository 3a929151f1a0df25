#include "hspin/spectra.hpp"

#include <algorithm>

namespace hspin {

namespace {

using R = Rational;

constexpr OperatorKind kAllOps[] = {
    OperatorKind::Laplacian,     OperatorKind::DiracSq, OperatorKind::TPlusAdjTPlus,
    OperatorKind::TMinusAdjTMinus, OperatorKind::UAdjU, OperatorKind::DStarD,
    OperatorKind::DDStar,        OperatorKind::CAdjC,
};

bool is_form(Family f) { return f == Family::FormUp || f == Family::FormDown; }

std::string describe(const FamilyMember& m) {
    return std::string(family_name(m.family)) + " n=" + std::to_string(m.n) +
           " j=" + std::to_string(m.j) + " k=" + std::to_string(m.k) + " s=" + std::to_string(m.s);
}

R spinor_ev(OperatorKind op, int n_, int j_, int k_, int s_) {
    const R n(n_), j(j_), k(k_), s(s_);
    switch (op) {
        case OperatorKind::DiracSq: {
            const R a = (n + 2 * s - 2) / (n + 2 * j - 2);
            const R b = j + k + n / 2;
            return a * a * b * b;
        }
        case OperatorKind::TPlusAdjTPlus: {
            const R d = j + n / 2;
            return k * (j - s + 1) * (2 * j + k + n) * (j + s + n - 1) / (d * d);
        }
        case OperatorKind::TMinusAdjTMinus: {
            const R d = j + n / 2 - 1;
            return (k + 1) * (j - s) * (2 * j + k + n - 1) * (j + s + n - 2) / (d * d);
        }
        case OperatorKind::UAdjU:
            return (n - 3) * s * (j + k + 1) * (n + s - 2) * (j + k + n - 1) /
                   ((n - 2) * (j + 1) * (j + n - 2));
        default: break;
    }
    return R(0);
}

R sym_ev(OperatorKind op, int n_, int j_, int k_, int s_) {
    const R n(n_), j(j_), k(k_), s(s_);
    switch (op) {
        case OperatorKind::TPlusAdjTPlus:
            return k * (n + k + 2 * j - 1) * (j - s + 1) * (n + j + s - 2) / ((j + 1) * (n + 2 * j - 2));
        case OperatorKind::TMinusAdjTMinus:
            return (j - s) * (k + 1) * (n + k + 2 * j - 2) * (n + j + s - 3) /
                   ((n + j - 3) * (n + 2 * j - 2));
        case OperatorKind::UAdjU:
            return s * (k + j + 1) * (n + s - 3) * (n + k + j - 2) / ((j + 1) * (n + j - 3));
        default: break;
    }
    return R(0);
}

R form_ev(OperatorKind op, bool up, int n_, int j_, int k_) {
    const R n(n_), j(j_), k(k_);
    switch (op) {
        case OperatorKind::DDStar:
            return up ? R(0) : (k + j) * (n - j + k + 1);
        case OperatorKind::DStarD:
            return up ? (k + j + 1) * (n + k - j) : R(0);
        case OperatorKind::CAdjC:
            return up ? j / (j + 1) * k * (n + k + 1) : (n - j) / (n - j + 1) * k * (n + k + 1);
        default: break;
    }
    return R(0);
}

R spinor_form_ev(OperatorKind op, bool up, int n_, int j_, int k_) {
    const R n(n_), j(j_), k(k_);
    const R top = n / 2 + k + 1;
    switch (op) {
        case OperatorKind::DiracSq: {
            if (up) return top * top;
            const R a = (n - 2 * j) / (n - 2 * j + 2);
            return a * a * top * top;
        }
        case OperatorKind::TMinusAdjTMinus: {
            if (up) return R(0);
            const R d = n - 2 * j + 2;
            return 4 * (n - 2 * j + 1) / (d * d) * (k + j) * (n - j + k + 2);
        }
        case OperatorKind::TPlusAdjTPlus: {
            if (!up) return R(0);
            const R d = n - 2 * j;
            return 4 * (n - 2 * j - 1) / (d * d) * (n - j + k + 1) * (k + j + 1);
        }
        case OperatorKind::UAdjU:
            return up ? (n + 1) * j / ((n + 2) * (j + 1)) * k * (n + k + 2)
                      : (n + 1) * (n - j + 1) / ((n + 2) * (n - j + 2)) * k * (n + k + 2);
        default: break;
    }
    return R(0);
}

}  // namespace

const char* op_name(OperatorKind op) {
    switch (op) {
        case OperatorKind::Laplacian: return "lap";
        case OperatorKind::DiracSq: return "D2";
        case OperatorKind::TPlusAdjTPlus: return "Tplus";
        case OperatorKind::TMinusAdjTMinus: return "Tminus";
        case OperatorKind::UAdjU: return "U";
        case OperatorKind::DStarD: return "dstar_d";
        case OperatorKind::DDStar: return "d_dstar";
        case OperatorKind::CAdjC: return "C";
    }
    return "?";
}

OperatorKind parse_op(const std::string& name) {
    for (OperatorKind op : kAllOps)
        if (name == op_name(op)) return op;
    throw Error(ErrorKind::ParseError, "unknown operator '" + name + "'");
}

bool applicable(OperatorKind op, Family family) {
    if (op == OperatorKind::Laplacian) return true;
    const bool form_op = op == OperatorKind::DStarD || op == OperatorKind::DDStar || op == OperatorKind::CAdjC;
    if (is_form(family)) return form_op;
    if (form_op) return false;
    if (family == Family::SymSphere) return op != OperatorKind::DiracSq;
    return true;
}

std::vector<OperatorKind> operators_for(Family family) {
    std::vector<OperatorKind> out;
    for (OperatorKind op : kAllOps)
        if (applicable(op, family)) out.push_back(op);
    return out;
}

bool operator_absent(OperatorKind op, const FamilyMember& m) {
    const int n = m.n, j = m.j;
    switch (m.family) {
        case Family::SpinorSphere:
            if (op == OperatorKind::TMinusAdjTMinus) return j == 0;
            if (op == OperatorKind::UAdjU) return j == 0 || n == 3;
            return false;
        case Family::SymSphere:
            return (op == OperatorKind::TMinusAdjTMinus || op == OperatorKind::UAdjU) && j == 0;
        case Family::SpinorFormUp:
        case Family::SpinorFormDown:
            if (op == OperatorKind::TMinusAdjTMinus || op == OperatorKind::UAdjU) return j == 0;
            if (op == OperatorKind::TPlusAdjTPlus) return j == n / 2;
            if (op == OperatorKind::DiracSq) return n % 2 == 0 && j == n / 2;
            return false;
        default: return false;
    }
}

Rational laplacian_ev(const FamilyMember& m, const EvalOptions& opt) {
    return opt.curvature * casimir_of(AlgebraDescriptor(m.n + 1), m.parent_weight);
}

Rational operator_ev(OperatorKind op, const FamilyMember& m, const EvalOptions& opt) {
    if (!applicable(op, m.family))
        throw Error(ErrorKind::NotApplicable, std::string(op_name(op)) + " on " + describe(m));
    if (op == OperatorKind::Laplacian) return laplacian_ev(m, opt);
    if (operator_absent(op, m)) return R(0);
    R ev;
    switch (m.family) {
        case Family::SpinorSphere: ev = spinor_ev(op, m.n, m.j, m.k, m.s); break;
        case Family::SymSphere:
            if (op == OperatorKind::UAdjU && m.n == 3 && !opt.extrapolate_sym_u_n3)
                throw Error(ErrorKind::NotApplicable,
                            "U*U on symmetric tensors at n=3 needs the extrapolation flag");
            ev = sym_ev(op, m.n, m.j, m.k, m.s);
            break;
        case Family::FormUp:
        case Family::FormDown: ev = form_ev(op, m.family == Family::FormUp, m.n, m.j, m.k); break;
        case Family::SpinorFormUp:
        case Family::SpinorFormDown:
            ev = spinor_form_ev(op, m.family == Family::SpinorFormUp, m.n, m.j, m.k);
            break;
    }
    return opt.curvature * ev;
}

std::vector<SpectrumLine> spectrum_table(const BundleDescriptor& bundle, OperatorKind op, int k_max,
                                         const EvalOptions& opt) {
    auto members = frobenius_decompose(bundle, k_max);
    // Up before Down at equal (k, s)
    std::stable_sort(members.begin(), members.end(), [](const FamilyMember& a, const FamilyMember& b) {
        if (a.k != b.k) return a.k < b.k;
        if (a.s != b.s) return a.s < b.s;
        return static_cast<int>(a.family) < static_cast<int>(b.family);
    });
    std::vector<SpectrumLine> out;
    out.reserve(members.size());
    for (auto& m : members) {
        SpectrumLine line;
        line.op = op;
        line.eigenvalue = operator_ev(op, m, opt);
        line.dim = member_dim(m);
        line.multiplicity = m.multiplicity;
        line.member = std::move(m);
        out.push_back(std::move(line));
    }
    return out;
}

KernelFilter kernel_family(OperatorKind op, const BundleDescriptor& bundle) {
    using M = const FamilyMember&;
    const int n = bundle.base_n;
    auto not_applicable = [&] {
        return Error(ErrorKind::NotApplicable, std::string("no kernel description for ") + op_name(op));
    };
    switch (bundle.kind) {
        case FiberKind::Spinor:
            switch (op) {
                case OperatorKind::TPlusAdjTPlus: return {"k = 0, any s", [](M m) { return m.k == 0; }};
                case OperatorKind::TMinusAdjTMinus:
                    return {"s = j", [](M m) { return m.j == 0 || m.s == m.j; }};
                case OperatorKind::UAdjU:
                    if (n == 3) return {"everything (U vanishes for n = 3)", [](M) { return true; }};
                    return {"s = 0", [](M m) { return m.j == 0 || m.s == 0; }};
                case OperatorKind::DiracSq: return {"empty", [](M) { return false; }};
                default: throw not_applicable();
            }
        case FiberKind::Sym:
            switch (op) {
                case OperatorKind::TPlusAdjTPlus: return {"k = 0, any s", [](M m) { return m.k == 0; }};
                case OperatorKind::TMinusAdjTMinus:
                    return {"s = j", [](M m) { return m.j == 0 || m.s == m.j; }};
                case OperatorKind::UAdjU: return {"s = 0", [](M m) { return m.j == 0 || m.s == 0; }};
                default: throw not_applicable();
            }
        case FiberKind::Form:
            switch (op) {
                case OperatorKind::DDStar:
                    return {"up family, plus constants",
                            [](M m) { return m.family == Family::FormUp || m.j == 0; }};
                case OperatorKind::DStarD:
                    return {"down family", [](M m) { return m.family == Family::FormDown; }};
                case OperatorKind::CAdjC:
                    return {"k = 0 (and all of the up family in degree 0)", [](M m) {
                                return m.k == 0 || (m.family == Family::FormUp && m.j == 0);
                            }};
                default: throw not_applicable();
            }
        case FiberKind::SpinorForm:
            switch (op) {
                case OperatorKind::TMinusAdjTMinus:
                    return {"up family (everything for j = 0)",
                            [](M m) { return m.family == Family::SpinorFormUp || m.j == 0; }};
                case OperatorKind::TPlusAdjTPlus:
                    return {"down family (everything in top degree)", [n](M m) {
                                return m.family == Family::SpinorFormDown || m.j == n / 2;
                            }};
                case OperatorKind::UAdjU:
                    return {"k = 0 (everything for j = 0)", [](M m) { return m.k == 0 || m.j == 0; }};
                case OperatorKind::DiracSq:
                    return {"down family when n = 2j, otherwise empty", [](M m) {
                                return m.family == Family::SpinorFormDown && m.n == 2 * m.j;
                            }};
                default: throw not_applicable();
            }
        case FiberKind::Generic: break;
    }
    throw Error(ErrorKind::NotApplicable, "kernel families need a family-mode bundle");
}

}  // namespace hspin
