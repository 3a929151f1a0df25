#include "hspin/weitzenboeck.hpp"

#include <Eigen/LU>

#include <algorithm>

namespace hspin {

namespace {

using R = Rational;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct Shift {
    int index;  // 0-based; -1 means no shift
    int sign;
};

// the single unit shift taking a to b, if any
std::optional<Shift> unit_shift(const WeightVector& a, const WeightVector& b) {
    std::optional<Shift> found;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const R d = b(i) - a(i);
        if (d == 0) continue;
        if (found || (d != 1 && d != -1)) return std::nullopt;
        found = Shift{static_cast<int>(i), d > 0 ? 1 : -1};
    }
    if (!found) return Shift{-1, 0};
    return found;
}

GradientRole classify(SystemKind kind, int j, int rank, const Shift& sh) {
    const bool self = sh.index < 0;
    const bool lower_last = sh.index == rank - 1 && sh.sign < 0;
    switch (kind) {
        case SystemKind::Spinor:
            if (sh.index == 0 && sh.sign > 0) return GradientRole::TPlus;
            if (sh.index == 0 && sh.sign < 0) return GradientRole::TMinus;
            if (sh.index == 1 && sh.sign > 0) return GradientRole::U;
            if (self || lower_last) return GradientRole::D;
            break;
        case SystemKind::Sym:
            if (sh.index == 0) return sh.sign > 0 ? GradientRole::TPlus : GradientRole::TMinus;
            return GradientRole::U;
        case SystemKind::SpinorForm:
            if (sh.index == j && sh.sign > 0) return GradientRole::TPlus;
            if (j > 0 && sh.index == j - 1 && sh.sign < 0) return GradientRole::TMinus;
            if (j > 0 && sh.index == 0 && sh.sign > 0) return GradientRole::U;
            if (self || lower_last) return GradientRole::D;
            break;
    }
    throw Error(ErrorKind::NotASummand, "unclassified gradient target");
}

std::vector<std::pair<GradientRole, Shift>> formal_candidates(SystemKind kind) {
    switch (kind) {
        case SystemKind::Spinor:
        case SystemKind::Sym:
            return {{GradientRole::U, {1, 1}}, {GradientRole::TMinus, {0, -1}}};
        case SystemKind::SpinorForm: return {};
    }
    return {};
}

GradientTarget make_target(GradientRole role, const IrrepLabel& source, const IrrepLabel& target,
                           bool formal) {
    const int n = source.algebra.dim_n;
    GradientTarget t;
    t.role = role;
    t.source = source;
    t.target = target;
    t.conformal_weight = (casimir_of(target.algebra, target.weight) - casimir(source) - (n - 1)) / 2;
    t.shifted_weight = t.conformal_weight + R(n - 1, 2);
    t.relative_dim = formal ? R(0) : relative_dim(source, target);
    t.formal = formal;
    return t;
}

WeitzenboeckSystem build(SystemKind kind, int n, const IrrepLabel& source, int j) {
    WeitzenboeckSystem sys;
    sys.kind = kind;
    sys.n = n;
    sys.j = j;
    sys.source = source;
    const int rank = source.algebra.rank();
    for (const auto& t : tensor_targets(source)) {
        const auto sh = unit_shift(source.weight, t.weight);
        sys.targets.push_back(make_target(classify(kind, j, rank, *sh), source, t, false));
    }
    std::stable_sort(sys.targets.begin(), sys.targets.end(),
                     [](const GradientTarget& a, const GradientTarget& b) { return a.role < b.role; });
    for (const auto& [role, sh] : formal_candidates(kind)) {
        if (sys.has(role) || sh.index >= rank) continue;
        WeightVector w = source.weight;
        w(sh.index) += sh.sign;
        if (weyl_product(source.algebra, w) != 0) continue;
        sys.formal.push_back(make_target(role, source, IrrepLabel{source.algebra, w}, true));
    }
    for (int k = 0; k < 6; ++k) sys.chat[k] = shifted_casimir(sys, k);
    sys.half_r1 = casimir(source);
    sys.r_hat4 = sys.chat[5] - R(n - 1, 2) * sys.chat[4];
    return sys;
}

struct Column {
    R w;
    R a;
    GradientRole role;
    bool formal;
};

std::vector<Column> columns(const WeitzenboeckSystem& sys, bool with_formal) {
    std::vector<Column> cols;
    for (const auto& t : sys.targets)
        cols.push_back({t.conformal_weight, relation_b_coefficient(sys, t), t.role, false});
    if (with_formal)
        for (const auto& t : sys.formal)
            cols.push_back({t.conformal_weight, relation_b_coefficient(sys, t), t.role, true});
    return cols;
}

int rank_of(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::FullPivLU<Mat> lu(m);
    return static_cast<int>(lu.rank());
}

}  // namespace

const char* role_name(GradientRole r) {
    switch (r) {
        case GradientRole::TPlus: return "Tplus";
        case GradientRole::U: return "U";
        case GradientRole::D: return "D";
        case GradientRole::TMinus: return "Tminus";
    }
    return "?";
}

const char* system_name(SystemKind k) {
    switch (k) {
        case SystemKind::Spinor: return "spinor";
        case SystemKind::Sym: return "sym";
        case SystemKind::SpinorForm: return "spinor-form";
    }
    return "?";
}

const GradientTarget* WeitzenboeckSystem::find(GradientRole r) const {
    for (const auto& t : targets)
        if (t.role == r) return &t;
    return nullptr;
}

std::vector<IrrepLabel> tensor_targets(const IrrepLabel& source) {
    const auto& alg = source.algebra;
    const auto& w = source.weight;
    std::vector<IrrepLabel> out;
    for (int i = 0; i < alg.rank(); ++i) {
        for (int sign : {1, -1}) {
            WeightVector v = w;
            v(i) += sign;
            if (is_dominant(alg, v)) out.push_back(IrrepLabel{alg, v});
        }
    }
    if (alg.series() == Series::B && w(alg.rank() - 1) > 0) out.push_back(source);
    return out;
}

Rational conformal_weight(const IrrepLabel& source, const IrrepLabel& target) {
    bool found = false;
    for (const auto& t : tensor_targets(source)) found = found || t == target;
    if (!found)
        throw Error(ErrorKind::NotASummand, "(" + weight_to_string(target.weight) + ") in (" +
                                                weight_to_string(source.weight) + ") x standard");
    return (casimir(target) - casimir(source) - (source.algebra.dim_n - 1)) / 2;
}

Rational relative_dim(const IrrepLabel& source, const IrrepLabel& target) {
    return weyl_product(target.algebra, target.weight) / weyl_product(source.algebra, source.weight);
}

WeitzenboeckSystem spinor_system(int n, int j) {
    return build(SystemKind::Spinor, n, spinor_bundle(n, j).fiber.front().label, j);
}

WeitzenboeckSystem sym_system(int n, int j) {
    return build(SystemKind::Sym, n, sym_bundle(n, j).fiber.front().label, j);
}

WeitzenboeckSystem spinor_form_system(int n, int j) {
    return build(SystemKind::SpinorForm, n, spinor_form_bundle(n, j).fiber.front().label, j);
}

WeitzenboeckSystem make_system(SystemKind kind, int n, int j) {
    switch (kind) {
        case SystemKind::Spinor: return spinor_system(n, j);
        case SystemKind::Sym: return sym_system(n, j);
        case SystemKind::SpinorForm: return spinor_form_system(n, j);
    }
    throw Error(ErrorKind::NotApplicable, "unknown system");
}

Rational shifted_casimir(const WeitzenboeckSystem& sys, int order) {
    R total(0), dims(0);
    for (const auto& t : sys.targets) {
        R p(1);
        for (int i = 0; i < order; ++i) p *= t.shifted_weight;
        total += p * t.relative_dim;
        dims += t.relative_dim;
    }
    if (dims != sys.n)
        throw Error(ErrorKind::IncompleteTargets,
                    "relative dimensions sum to " + to_string(dims) + ", expected " + std::to_string(sys.n));
    return total;
}

Rational relation_b_coefficient(const WeitzenboeckSystem& sys, const GradientTarget& t) {
    R a(0), p(1);
    const R x = -t.shifted_weight;
    for (int q = 0; q <= 3; ++q) {
        a += sys.chat[3 - q] * p;
        p *= x;
    }
    return a;
}

int independent_relation_count(const WeitzenboeckSystem& sys) {
    const auto cols = columns(sys, false);
    Mat m(2, static_cast<Eigen::Index>(cols.size()) + 1);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        m(0, static_cast<Eigen::Index>(c)) = cols[c].w;
        m(1, static_cast<Eigen::Index>(c)) = cols[c].a;
    }
    m(0, m.cols() - 1) = sys.half_r1;
    m(1, m.cols() - 1) = -sys.r_hat4;
    return rank_of(m);
}

IdentityCoefficients derive_identities(const WeitzenboeckSystem& sys, GradientRole keep_a,
                                       GradientRole keep_b) {
    const auto cols = columns(sys, true);
    auto kept = [&](const Column& c) { return c.role == keep_a || c.role == keep_b; };

    std::vector<const Column*> dropped;
    for (const auto& c : cols)
        if (!kept(c)) dropped.push_back(&c);
    if (dropped.size() > 2)
        throw Error(ErrorKind::SingularElimination,
                    std::to_string(dropped.size()) + " gradients to eliminate with two relations");

    Vec mu = Vec::Zero(2);
    const auto r = static_cast<Eigen::Index>(dropped.size());
    Mat c(r, 2);
    Vec rhs(r);
    for (Eigen::Index i = 0; i < r; ++i) {
        c(i, 0) = dropped[i]->w;
        c(i, 1) = dropped[i]->a;
        rhs(i) = -1;
    }
    if (r > 0) {
        // one gradient to drop: use the first relation alone when it can do the job
        if (r == 1 && c(0, 0) != 0) {
            mu(0) = rhs(0) / c(0, 0);
        } else {
            Eigen::FullPivLU<Mat> lu(c);
            mu = lu.solve(rhs);
        }
        if (c * mu != rhs) {
            std::string which;
            for (const auto* d : dropped) which += std::string(" ") + role_name(d->role);
            throw Error(ErrorKind::SingularElimination, "cannot eliminate" + which);
        }
    }

    IdentityCoefficients out;
    out.relations_used = static_cast<int>(r);
    for (const auto& col : cols) {
        if (col.formal || !kept(col)) continue;
        const R coef = 1 + mu(0) * col.w + mu(1) * col.a;
        auto [it, inserted] = out.coefficients.emplace(col.role, coef);
        if (!inserted && it->second != coef)
            throw Error(ErrorKind::SingularElimination,
                        std::string("split gradient ") + role_name(col.role) + " gets two coefficients");
    }
    out.constant = sys.half_r1 + mu(0) * sys.half_r1 - mu(1) * sys.r_hat4;

    // another solution of the elimination that changes the kept part means the identity is not unique
    if (r < 2 && rank_of(c) < 2) {
        Mat kernel;
        if (r == 0) {
            kernel = Mat::Identity(2, 2);
        } else {
            Eigen::FullPivLU<Mat> lu(c);
            kernel = lu.kernel();
        }
        for (Eigen::Index v = 0; v < kernel.cols(); ++v) {
            const R nu_a = kernel(0, v), nu_b = kernel(1, v);
            bool changes = nu_a * sys.half_r1 - nu_b * sys.r_hat4 != 0;
            for (const auto& col : cols)
                if (!col.formal && kept(col)) changes = changes || nu_a * col.w + nu_b * col.a != 0;
            if (changes) out.unique = false;
        }
    }
    return out;
}

bool relation_holds(const WeitzenboeckSystem& sys, const std::map<GradientRole, Rational>& coefficients,
                    const Rational& constant) {
    const auto cols = columns(sys, false);
    const auto nc = static_cast<Eigen::Index>(cols.size()) + 1;
    Mat rel(2, nc), aug(3, nc);
    for (Eigen::Index i = 0; i + 1 < nc; ++i) {
        const auto& col = cols[static_cast<std::size_t>(i)];
        rel(0, i) = col.w;
        rel(1, i) = col.a;
        const auto it = coefficients.find(col.role);
        aug(2, i) = it == coefficients.end() ? R(0) : it->second;
    }
    rel(0, nc - 1) = sys.half_r1;
    rel(1, nc - 1) = -sys.r_hat4;
    aug(2, nc - 1) = constant;
    aug.topRows(2) = rel;
    return rank_of(aug) == rank_of(rel);
}

bool identity_holds(const WeitzenboeckSystem& sys, const std::map<GradientRole, Rational>& coefficients,
                    const Rational& constant) {
    std::map<GradientRole, Rational> rest;
    for (GradientRole r : {GradientRole::TPlus, GradientRole::U, GradientRole::D, GradientRole::TMinus}) {
        const auto it = coefficients.find(r);
        rest[r] = 1 - (it == coefficients.end() ? R(0) : it->second);
    }
    return relation_holds(sys, rest, sys.half_r1 - constant);
}

NormalizationConstant normalization_sq(GradientRole op, SystemKind family, int n_, int j_) {
    const R n(n_), j(j_);
    auto absent = [&] {
        return Error(ErrorKind::AbsentOperator, std::string(role_name(op)) + " on " + system_name(family) +
                                                    " n=" + std::to_string(n_) + " j=" + std::to_string(j_));
    };
    switch (family) {
        case SystemKind::Spinor:
            switch (op) {
                case GradientRole::D: return {(n + 2 * j) * (n - 2) / (n + 2 * j - 2)};
                case GradientRole::TPlus: return {4 * (j + 1) / (n + 2 * j)};
                case GradientRole::TMinus:
                    if (j_ == 0) throw absent();
                    return {4 * (n + j - 2) / (n + 2 * j - 2)};
                case GradientRole::U:
                    if (j_ == 0 || n_ == 3) throw absent();
                    return {R(1)};
            }
            break;
        case SystemKind::Sym:
            if (op == GradientRole::D) throw absent();
            if ((op == GradientRole::TMinus || op == GradientRole::U) && j_ == 0) throw absent();
            return {R(1)};
        case SystemKind::SpinorForm:
            switch (op) {
                case GradientRole::D:
                    if (2 * j_ == n_) throw absent();
                    return {(n + 2) * (n - 2 * j) / (n - 2 * j + 2)};
                case GradientRole::TMinus:
                    if (j_ == 0) throw absent();
                    return {4 * (n - 2 * j + 1) * (n - j + 2) / ((n - 2 * j + 3) * (n - 2 * j + 2))};
                case GradientRole::TPlus:
                    if (j_ == n_ / 2) throw absent();
                    return {4 * (j + 1) / (n - 2 * j)};
                case GradientRole::U:
                    if (j_ == 0) throw absent();
                    return {R(1)};
            }
            break;
    }
    throw absent();
}

NormalizationConstant primed_dirac_normalization(int n_, int j_) {
    const R n(n_), j(j_);
    return {(n + 2 * j - 2) * (n - 2) / (n + 2 * j), -1};
}

}  // namespace hspin
