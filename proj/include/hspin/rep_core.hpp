#pragma once

#include "hspin/error.hpp"
#include "hspin/rational.hpp"

#include <cstdint>
#include <vector>

namespace hspin {

enum class Series { B, D };

struct AlgebraDescriptor {
    int dim_n = 3;

    AlgebraDescriptor() = default;
    explicit AlgebraDescriptor(int n);

    int rank() const { return dim_n / 2; }
    Series series() const { return dim_n % 2 ? Series::B : Series::D; }

    friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

inline AlgebraDescriptor so(int n) { return AlgebraDescriptor(n); }

struct IrrepLabel {
    AlgebraDescriptor algebra;
    WeightVector weight;

    bool operator==(const IrrepLabel& other) const {
        return algebra == other.algebra && weight == other.weight;
    }
};

// Positive roots as (i, j, sign): e_i + sign*e_j for j >= 0, e_i alone for j < 0.
struct PositiveRoot {
    int i;
    int j;
    int sign;
};

std::vector<PositiveRoot> positive_roots(const AlgebraDescriptor& algebra);

template <typename Derived>
typename Derived::Scalar pair_root(const Eigen::MatrixBase<Derived>& v, const PositiveRoot& a) {
    if (a.j < 0) return v(a.i);
    return a.sign > 0 ? typename Derived::Scalar(v(a.i) + v(a.j))
                      : typename Derived::Scalar(v(a.i) - v(a.j));
}

template <typename Scalar = Rational>
WeightOf<Scalar> delta_vector(const AlgebraDescriptor& algebra) {
    const int m = algebra.rank();
    WeightOf<Scalar> d(m);
    for (int i = 0; i < m; ++i) {
        if (algebra.series() == Series::B)
            d(i) = Scalar(2 * (m - i) - 1) / Scalar(2);
        else
            d(i) = Scalar(m - 1 - i);
    }
    return d;
}

// <mu, mu> + 2 <mu, delta>; no dominance check, so formal weights are allowed
template <typename Derived>
typename Derived::Scalar casimir_of(const AlgebraDescriptor& algebra,
                                    const Eigen::MatrixBase<Derived>& mu) {
    using Scalar = typename Derived::Scalar;
    const WeightOf<Scalar> d = delta_vector<Scalar>(algebra);
    return mu.dot(mu) + Scalar(2) * mu.dot(d);
}

// Weyl product for any weight of the right length; zero or negative off the dominant chamber
template <typename Derived>
typename Derived::Scalar weyl_product(const AlgebraDescriptor& algebra,
                                      const Eigen::MatrixBase<Derived>& mu) {
    using Scalar = typename Derived::Scalar;
    const WeightOf<Scalar> d = delta_vector<Scalar>(algebra);
    const WeightOf<Scalar> shifted = mu + d;
    Scalar num(1), den(1);
    for (const auto& a : positive_roots(algebra)) {
        num *= pair_root(shifted, a);
        den *= pair_root(d, a);
    }
    return num / den;
}

IrrepLabel validate_weight(const AlgebraDescriptor& algebra, const WeightVector& entries);
IrrepLabel validate_weight(const AlgebraDescriptor& algebra, std::initializer_list<Rational> entries);

bool is_dominant(const AlgebraDescriptor& algebra, const WeightVector& entries);

std::int64_t weyl_dim(const IrrepLabel& label);
Rational casimir(const IrrepLabel& label);

WeightVector make_weight(std::initializer_list<Rational> entries);

}  // namespace hspin
