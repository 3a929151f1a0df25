#pragma once

#include "hspin/branching.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace hspin {

enum class GradientRole { TPlus, U, D, TMinus };

const char* role_name(GradientRole r);

enum class SystemKind { Spinor, Sym, SpinorForm };

const char* system_name(SystemKind k);

struct GradientTarget {
    GradientRole role = GradientRole::D;
    IrrepLabel source;
    // for formal targets the weight is not dominant and the Weyl product vanishes
    IrrepLabel target;
    Rational conformal_weight;
    Rational shifted_weight;
    Rational relative_dim;
    bool formal = false;
};

struct WeitzenboeckSystem {
    SystemKind kind = SystemKind::Spinor;
    int n = 3;
    int j = 0;
    IrrepLabel source;
    std::vector<GradientTarget> targets;  // the gradients that exist, in role order
    std::vector<GradientTarget> formal;   // zero-dimensional continuations of the missing ones
    std::array<Rational, 6> chat;         // shifted Casimir eigenvalues of order 0..5
    Rational half_r1;                     // curvature constant on the unit sphere (= Casimir of the fiber)
    Rational r_hat4;                      // chat5 - (n-1)/2 chat4

    const GradientTarget* find(GradientRole r) const;
    bool has(GradientRole r) const { return find(r) != nullptr; }
};

// the irreducible summands of source (x) standard
std::vector<IrrepLabel> tensor_targets(const IrrepLabel& source);

Rational conformal_weight(const IrrepLabel& source, const IrrepLabel& target);
Rational relative_dim(const IrrepLabel& source, const IrrepLabel& target);

WeitzenboeckSystem spinor_system(int n, int j);
WeitzenboeckSystem sym_system(int n, int j);
WeitzenboeckSystem spinor_form_system(int n, int j);
WeitzenboeckSystem make_system(SystemKind kind, int n, int j);

Rational shifted_casimir(const WeitzenboeckSystem& sys, int order);

// a(lambda) = sum_{p=0}^{3} chat_{3-p} (-what(lambda))^p
Rational relation_b_coefficient(const WeitzenboeckSystem& sys, const GradientTarget& t);

// rank of the two relations restricted to the existing gradients
int independent_relation_count(const WeitzenboeckSystem& sys);

struct IdentityCoefficients {
    std::map<GradientRole, Rational> coefficients;  // kept roles that exist
    Rational constant;                              // at unit curvature
    int relations_used = 0;
    bool unique = true;
};

// Laplacian = sum over kept roles of coefficient * T*T + constant
IdentityCoefficients derive_identities(const WeitzenboeckSystem& sys, GradientRole keep_a, GradientRole keep_b);

// is Laplacian = sum coeff * T*T + constant implied by the two relations?
bool identity_holds(const WeitzenboeckSystem& sys, const std::map<GradientRole, Rational>& coefficients,
                    const Rational& constant);

// is sum coeff * T*T + constant = 0 implied by the two relations?
bool relation_holds(const WeitzenboeckSystem& sys, const std::map<GradientRole, Rational>& coefficients,
                    const Rational& constant);

struct NormalizationConstant {
    Rational square;
    int sign = 1;
};

NormalizationConstant normalization_sq(GradientRole op, SystemKind family, int n, int j);

// D'_j = -(n+2j-2)/(n+2j) D_j, relative to the normalized operator
NormalizationConstant primed_dirac_normalization(int n, int j);

}  // namespace hspin
