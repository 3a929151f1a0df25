#include "hspin/branching.hpp"

#include <algorithm>
#include <functional>

namespace hspin {

namespace {

// weights are handled as doubled integers inside the enumerations
long twice(const Rational& q) {
    const Rational t = q * 2;
    return static_cast<long>(to_int64(t));
}

WeightVector from_twice(const std::vector<long>& v) {
    WeightVector w(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) w(static_cast<Eigen::Index>(i)) = Rational(v[i], 2);
    return w;
}

WeightVector constant_weight(int len, const Rational& value) {
    WeightVector w(len);
    for (int i = 0; i < len; ++i) w(i) = value;
    return w;
}

std::string key(const WeightVector& w) { return weight_to_string(w); }

Integer floor_int(const Rational& q) {
    Integer p = numer(q), d = denom(q);
    Integer f = p / d;
    if (p < 0 && f * d != p) f -= 1;
    return f;
}

}  // namespace

BranchingList branch(const IrrepLabel& parent) {
    const int N = parent.algebra.dim_n;
    if (N < 4) throw Error(ErrorKind::RankMismatch, "branching needs so(n+1) with n >= 3");
    const AlgebraDescriptor child_alg(N - 1);
    const int M = parent.algebra.rank();
    const int c = child_alg.rank();
    std::vector<long> rho(M);
    for (int i = 0; i < M; ++i) rho[i] = twice(parent.weight(i));
    const long parity = ((rho[0] % 2) + 2) % 2;

    BranchingList out{parent, {}};
    std::vector<long> lam(c);
    std::function<void(int)> rec = [&](int i) {
        if (i == c) {
            out.children.push_back(IrrepLabel{child_alg, from_twice(lam)});
            return;
        }
        long hi = rho[i];
        long lo;
        if (parent.algebra.series() == Series::B) {
            // so(2M+1) -> so(2M): last child entry between -rho_M and rho_M
            lo = (i + 1 < M) ? rho[i + 1] : -rho[M - 1];
        } else {
            // so(2M) -> so(2M-1): last child entry at least |rho_M|
            lo = (i + 1 < M - 1) ? rho[i + 1] : std::abs(rho[M - 1]);
        }
        for (long v = hi; v >= lo; v -= 2) {
            if (((v % 2) + 2) % 2 != parity) continue;
            lam[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

int contains(const IrrepLabel& parent, const IrrepLabel& fiber) {
    if (parent.algebra.dim_n != fiber.algebra.dim_n + 1)
        throw Error(ErrorKind::RankMismatch, "parent so(" + std::to_string(parent.algebra.dim_n) +
                                                 ") over fiber so(" +
                                                 std::to_string(fiber.algebra.dim_n) + ")");
    const int M = parent.algebra.rank();
    const int c = fiber.algebra.rank();
    const auto& r = parent.weight;
    const auto& l = fiber.weight;
    if (!is_integer(r(0) - l(0))) return 0;
    for (int i = 0; i < c; ++i) {
        if (l(i) > r(i)) return 0;
        if (parent.algebra.series() == Series::B) {
            const Rational lo = (i + 1 < M) ? r(i + 1) : Rational(-r(M - 1));
            if (l(i) < lo) return 0;
        } else {
            const Rational lo = (i + 1 < M - 1) ? r(i + 1) : Rational(abs(r(M - 1)));
            if (l(i) < lo) return 0;
        }
    }
    return 1;
}

BundleDescriptor spinor_bundle(int n, int j) {
    const AlgebraDescriptor alg(n);
    const int m = alg.rank();
    WeightVector w = constant_weight(m, half(1));
    w(0) = Rational(j) + half(1);
    BundleDescriptor b{n, FiberKind::Spinor, j, {}};
    b.fiber.push_back({validate_weight(alg, w), 1});
    if (alg.series() == Series::D) {
        w(m - 1) = -w(m - 1);
        b.fiber.push_back({validate_weight(alg, w), 1});
    }
    return b;
}

BundleDescriptor sym_bundle(int n, int j) {
    const AlgebraDescriptor alg(n);
    WeightVector w = constant_weight(alg.rank(), Rational(0));
    w(0) = j;
    return BundleDescriptor{n, FiberKind::Sym, j, {{validate_weight(alg, w), 1}}};
}

BundleDescriptor form_bundle(int n, int j) {
    const AlgebraDescriptor alg(n);
    const int m = alg.rank();
    if (j < 0 || j > m) throw Error(ErrorKind::UnsupportedFiber, "form degree out of range");
    WeightVector w = constant_weight(m, Rational(0));
    for (int i = 0; i < j; ++i) w(i) = 1;
    BundleDescriptor b{n, FiberKind::Form, j, {{validate_weight(alg, w), 1}}};
    if (alg.series() == Series::D && j == m) {
        w(m - 1) = -1;
        b.fiber.push_back({validate_weight(alg, w), 1});
    }
    return b;
}

BundleDescriptor spinor_form_bundle(int n, int j) {
    const AlgebraDescriptor alg(n);
    const int m = alg.rank();
    if (j < 0 || j > m) throw Error(ErrorKind::UnsupportedFiber, "spinor-form degree out of range");
    WeightVector w = constant_weight(m, half(1));
    for (int i = 0; i < j; ++i) w(i) = half(3);
    BundleDescriptor b{n, FiberKind::SpinorForm, j, {{validate_weight(alg, w), 1}}};
    if (alg.series() == Series::D) {
        w(m - 1) = -w(m - 1);
        b.fiber.push_back({validate_weight(alg, w), 1});
    }
    return b;
}

BundleDescriptor generic_bundle(const IrrepLabel& fiber) {
    return BundleDescriptor{fiber.algebra.dim_n, FiberKind::Generic, 0, {{fiber, 1}}};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::SpinorSphere: return "spinor";
        case Family::SymSphere: return "sym";
        case Family::FormUp: return "form-up";
        case Family::FormDown: return "form-down";
        case Family::SpinorFormUp: return "spinor-form-up";
        case Family::SpinorFormDown: return "spinor-form-down";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::SpinorSphere, Family::SymSphere, Family::FormUp, Family::FormDown,
                     Family::SpinorFormUp, Family::SpinorFormDown})
        if (name == family_name(f)) return f;
    throw Error(ErrorKind::ParseError, "unknown family '" + name + "'");
}

bool has_s(Family f) { return f == Family::SpinorSphere || f == Family::SymSphere; }

namespace {

WeightVector family_weight(Family family, int n, int j, int k, int s) {
    const int M = (n + 1) / 2;
    WeightVector w(M);
    switch (family) {
        case Family::SpinorSphere:
            w = constant_weight(M, half(1));
            w(0) = Rational(k + j) + half(1);
            w(1) = Rational(s) + half(1);
            break;
        case Family::SymSphere:
            w = constant_weight(M, Rational(0));
            w(0) = k + j;
            w(1) = s;
            break;
        case Family::FormUp:
        case Family::FormDown: {
            // V_J(k) = (k+1, 1_{J-1}, 0, ...); the middle degree on S^{2m} has J = m in both copies
            int J = j;
            if (family == Family::FormUp && !(n % 2 == 0 && j == n / 2)) J = j + 1;
            w = constant_weight(M, Rational(0));
            for (int i = 0; i < J; ++i) w(i) = 1;
            if (J > 0) w(0) = k + 1;
            break;
        }
        case Family::SpinorFormUp:
        case Family::SpinorFormDown: {
            const int J = family == Family::SpinorFormUp ? j + 1 : j;
            w = constant_weight(M, half(1));
            for (int i = 0; i < J; ++i) w(i) += 1;
            w(0) += k;
            break;
        }
    }
    return w;
}

}  // namespace

bool member_exists(Family family, int n, int j, int k, int s) {
    if (n < 3 || j < 0 || k < 0) return false;
    if (has_s(family)) return s >= 0 && s <= j;
    if (s != 0) return false;
    const int half_n = n / 2;
    if (j > half_n) return false;
    switch (family) {
        case Family::FormDown:
        case Family::SpinorFormDown: return j > 0 || k == 0;
        case Family::FormUp: return true;
        case Family::SpinorFormUp: return !(n % 2 == 0 && j == half_n);
        default: return false;
    }
}

FamilyMember make_member(Family family, int n, int j, int k, int s) {
    if (!member_exists(family, n, j, k, s))
        throw Error(ErrorKind::NotApplicable,
                    std::string(family_name(family)) + " member n=" + std::to_string(n) +
                        " j=" + std::to_string(j) + " k=" + std::to_string(k) +
                        " s=" + std::to_string(s) + " does not exist");
    FamilyMember m;
    m.family = family;
    m.n = n;
    m.j = j;
    m.k = k;
    m.s = s;
    m.parent_weight = family_weight(family, n, j, k, s);
    const bool spinorial = family == Family::SpinorSphere || family == Family::SpinorFormUp ||
                           family == Family::SpinorFormDown;
    m.multiplicity = (spinorial && n % 2 == 0) ? 2 : 1;
    return m;
}

std::vector<IrrepLabel> member_labels(const FamilyMember& m) {
    const AlgebraDescriptor alg(m.n + 1);
    std::vector<IrrepLabel> out{validate_weight(alg, m.parent_weight)};
    const auto last = m.parent_weight.size() - 1;
    if (alg.series() == Series::D && m.parent_weight(last) != 0) {
        WeightVector w = m.parent_weight;
        w(last) = -w(last);
        out.push_back(validate_weight(alg, w));
    }
    return out;
}

std::int64_t member_dim(const FamilyMember& m) {
    std::int64_t d = 0;
    for (const auto& l : member_labels(m)) d += weyl_dim(l);
    return d;
}

std::vector<FamilyMember> frobenius_decompose(const BundleDescriptor& bundle, int k_max) {
    const int n = bundle.base_n;
    const int j = bundle.j;
    std::vector<FamilyMember> out;
    auto push = [&](Family f, int k, int s) {
        if (member_exists(f, n, j, k, s)) out.push_back(make_member(f, n, j, k, s));
    };
    for (int k = 0; k <= k_max; ++k) {
        switch (bundle.kind) {
            case FiberKind::Spinor:
                for (int s = 0; s <= j; ++s) push(Family::SpinorSphere, k, s);
                break;
            case FiberKind::Sym:
                for (int s = 0; s <= j; ++s) push(Family::SymSphere, k, s);
                break;
            case FiberKind::Form:
                push(Family::FormUp, k, 0);
                push(Family::FormDown, k, 0);
                break;
            case FiberKind::SpinorForm:
                push(Family::SpinorFormUp, k, 0);
                push(Family::SpinorFormDown, k, 0);
                break;
            case FiberKind::Generic:
                throw Error(ErrorKind::UnsupportedFiber, "family mode needs S_j, Sym_0^j, Lambda^j or E_j");
        }
    }
    return out;
}

std::vector<WeightVector> dominant_weights(const AlgebraDescriptor& algebra, const Rational& bound,
                                           bool half_odd) {
    const int M = algebra.rank();
    const long parity = half_odd ? 1 : 0;
    long top = static_cast<long>(to_int64(Rational(floor_int(bound * 2))));
    if (((top % 2) + 2) % 2 != parity) --top;
    std::vector<WeightVector> out;
    if (top < parity) return out;
    std::vector<long> v(M);
    std::function<void(int, long)> rec = [&](int i, long hi) {
        if (i == M) {
            out.push_back(from_twice(v));
            return;
        }
        const long lo = (i == M - 1 && algebra.series() == Series::D) ? -hi : parity;
        for (long x = hi; x >= lo; x -= 2) {
            v[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, top);
    return out;
}

Rational generic_first_entry_bound(const BundleDescriptor& bundle, int k_max) {
    Rational first = bundle.fiber.front().label.weight(0);
    for (const auto& c : bundle.fiber) first = std::max(first, Rational(c.label.weight(0)));
    return first + k_max + 1;
}

std::vector<ParentMultiplicity> frobenius_generic(const BundleDescriptor& bundle, int k_max) {
    const AlgebraDescriptor parent_alg(bundle.base_n + 1);
    const bool half_odd = is_half_odd(bundle.fiber.front().label.weight(0));
    std::vector<ParentMultiplicity> out;
    for (const auto& w : dominant_weights(parent_alg, generic_first_entry_bound(bundle, k_max), half_odd)) {
        const IrrepLabel parent{parent_alg, w};
        int mult = 0;
        for (const auto& c : bundle.fiber) mult += c.multiplicity * contains(parent, c.label);
        if (mult > 0) out.push_back({parent, mult});
    }
    return out;
}

WeightMultiset to_multiset(const std::vector<FamilyMember>& members) {
    WeightMultiset out;
    for (const auto& m : members)
        for (const auto& l : member_labels(m)) out[key(l.weight)] += m.multiplicity;
    return out;
}

WeightMultiset to_multiset(const std::vector<ParentMultiplicity>& parents) {
    WeightMultiset out;
    for (const auto& p : parents) out[key(p.parent.weight)] += p.multiplicity;
    return out;
}

}  // namespace hspin
