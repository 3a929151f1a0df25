#include "hspin/rep_core.hpp"

namespace hspin {

AlgebraDescriptor::AlgebraDescriptor(int n) : dim_n(n) {
    if (n < 3) throw Error(ErrorKind::WrongLength, "so(n) needs n >= 3, got " + std::to_string(n));
}

std::vector<PositiveRoot> positive_roots(const AlgebraDescriptor& algebra) {
    const int m = algebra.rank();
    std::vector<PositiveRoot> roots;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            roots.push_back({i, j, -1});
            roots.push_back({i, j, +1});
        }
        if (algebra.series() == Series::B) roots.push_back({i, -1, 0});
    }
    return roots;
}

WeightVector make_weight(std::initializer_list<Rational> entries) {
    WeightVector w(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto& e : entries) w(i++) = e;
    return w;
}

bool is_dominant(const AlgebraDescriptor& algebra, const WeightVector& w) {
    const int m = algebra.rank();
    if (w.size() != m) return false;
    for (int i = 0; i + 1 < m; ++i)
        if (w(i) < w(i + 1)) return false;
    if (algebra.series() == Series::B) return w(m - 1) >= 0;
    if (m >= 2) return w(m - 2) >= abs(w(m - 1));
    return true;
}

IrrepLabel validate_weight(const AlgebraDescriptor& algebra, const WeightVector& entries) {
    if (entries.size() != algebra.rank())
        throw Error(ErrorKind::WrongLength, "expected " + std::to_string(algebra.rank()) +
                                                " entries for so(" + std::to_string(algebra.dim_n) +
                                                "), got " + std::to_string(entries.size()));
    bool all_int = true, all_half = true;
    for (Eigen::Index i = 0; i < entries.size(); ++i) {
        all_int = all_int && is_integer(entries(i));
        all_half = all_half && is_half_odd(entries(i));
    }
    if (!all_int && !all_half)
        throw Error(ErrorKind::MixedParity, "(" + weight_to_string(entries) + ")");
    if (!is_dominant(algebra, entries))
        throw Error(ErrorKind::NotDominant, "(" + weight_to_string(entries) + ") over so(" +
                                                std::to_string(algebra.dim_n) + ")");
    return IrrepLabel{algebra, entries};
}

IrrepLabel validate_weight(const AlgebraDescriptor& algebra, std::initializer_list<Rational> entries) {
    return validate_weight(algebra, make_weight(entries));
}

std::int64_t weyl_dim(const IrrepLabel& label) {
    const Rational d = weyl_product(label.algebra, label.weight);
    if (!is_integer(d) || d < 1)
        throw Error(ErrorKind::InternalNonInteger,
                    "Weyl product " + to_string(d) + " at (" + weight_to_string(label.weight) + ")");
    return to_int64(d);
}

Rational casimir(const IrrepLabel& label) { return casimir_of(label.algebra, label.weight); }

}  // namespace hspin
