#include "hspin/killing.hpp"

namespace hspin {

namespace {

WeightVector padded(int len, std::initializer_list<int> head) {
    WeightVector w = WeightVector::Constant(len, Rational(0));
    int i = 0;
    for (int v : head) {
        if (i < len) w(i) = v;
        ++i;
    }
    return w;
}

std::vector<IrrepLabel> with_pair(const AlgebraDescriptor& alg, const WeightVector& w) {
    std::vector<IrrepLabel> out{validate_weight(alg, w)};
    const auto last = w.size() - 1;
    if (alg.series() == Series::D && w(last) != 0) {
        WeightVector v = w;
        v(last) = -v(last);
        out.push_back(validate_weight(alg, v));
    }
    return out;
}

std::int64_t total(const std::vector<IrrepLabel>& labels) {
    std::int64_t d = 0;
    for (const auto& l : labels) d += weyl_dim(l);
    return d;
}

FormPiece form_piece(Family f, int n, int j) {
    FormPiece p;
    p.member = make_member(f, n, j, 0);
    p.labels = member_labels(p.member);
    p.dim = total(p.labels);
    return p;
}

}  // namespace

KillingDecomposition primitive_killing(int n, int j) {
    if (j < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
    const AlgebraDescriptor alg(n + 1);
    KillingDecomposition d;
    d.n = n;
    d.j = j;
    for (int i = 0; 2 * i <= j; ++i) {
        KillingPiece p;
        p.i = i;
        p.labels = with_pair(alg, padded(alg.rank(), {j, j - 2 * i}));
        p.dim = total(p.labels);
        d.total_dim += p.dim;
        d.primitive_pieces.push_back(std::move(p));
    }
    d.graded_pieces[0] = d.total_dim;
    return d;
}

KillingDecomposition killing_space_dim(int n, int j) {
    KillingDecomposition d = primitive_killing(n, j);
    d.graded_pieces.clear();
    d.total_dim = 0;
    for (int i = 0; 2 * i <= j; ++i) {
        const auto p = primitive_killing(n, j - 2 * i);
        d.graded_pieces[i] = p.total_dim;
        d.total_dim += p.total_dim;
    }
    return d;
}

KillingForms killing_forms(int n, int j) {
    if (j < 0 || j > n / 2)
        throw Error(ErrorKind::DegreeOutOfRange,
                    "form degree " + std::to_string(j) + " outside 0.." + std::to_string(n / 2));
    return KillingForms{form_piece(Family::FormUp, n, j), form_piece(Family::FormDown, n, j)};
}

KillingChainCheck killing_chain_check(int n, int j) {
    const AlgebraDescriptor parent_alg(n + 1);
    const AlgebraDescriptor fiber_alg(n);
    KillingChainCheck out;
    auto fiber = [&](int deg) { return validate_weight(fiber_alg, padded(fiber_alg.rank(), {deg})); };
    auto parent = [&](int s) { return validate_weight(parent_alg, padded(parent_alg.rank(), {j, s})); };
    auto fail = [&](const std::string& what) { out.failures.push_back(what); };
    for (int i = 0; 2 * i <= j; ++i) {
        const int s = j - 2 * i;
        for (int sp = 0; sp <= i; ++sp) {
            ++out.checks;
            // V_{j-2s'}(2s', s) has weight (j, s, 0, ...) and must sit over Sym_0^{j-2s'}
            if (contains(parent(s), fiber(j - 2 * sp)) != 1)
                fail("chain link s'=" + std::to_string(sp) + " of piece s=" + std::to_string(s));
        }
        if (i >= 1) {
            const int odd = j - 2 * i + 1;
            ++out.checks;
            if (contains(parent(odd), fiber(j - 2 * i)) != 0)
                fail("offset s=" + std::to_string(odd) + " reaches Sym_0^" + std::to_string(j - 2 * i));
            ++out.checks;
            if (contains(parent(odd), fiber(j - 2 * i + 2)) != 1)
                fail("offset s=" + std::to_string(odd) + " misses Sym_0^" + std::to_string(j - 2 * i + 2));
        }
    }
    return out;
}

}  // namespace hspin
