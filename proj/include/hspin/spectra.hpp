#pragma once

#include "hspin/branching.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hspin {

enum class OperatorKind {
    Laplacian,
    DiracSq,
    TPlusAdjTPlus,
    TMinusAdjTMinus,
    UAdjU,
    DStarD,
    DDStar,
    CAdjC,
};

// short names used on the command line and in output: lap, D2, Tplus, Tminus, U, dstar_d, d_dstar, C
const char* op_name(OperatorKind op);
OperatorKind parse_op(const std::string& name);

struct EvalOptions {
    Rational curvature{1};
    // U*U on the symmetric-tensor family at n = 3, where the closed form is not known to hold
    bool extrapolate_sym_u_n3 = false;
};

bool applicable(OperatorKind op, Family family);

// operators set to zero (U_0, T_0^-, T^+ in top degree, D on E_m for n = 2m)
bool operator_absent(OperatorKind op, const FamilyMember& m);

std::vector<OperatorKind> operators_for(Family family);

Rational laplacian_ev(const FamilyMember& m, const EvalOptions& opt = {});
Rational operator_ev(OperatorKind op, const FamilyMember& m, const EvalOptions& opt = {});

struct SpectrumLine {
    FamilyMember member;
    OperatorKind op = OperatorKind::Laplacian;
    Rational eigenvalue;
    std::int64_t dim = 0;
    int multiplicity = 1;
};

std::vector<SpectrumLine> spectrum_table(const BundleDescriptor& bundle, OperatorKind op, int k_max,
                                         const EvalOptions& opt = {});

struct KernelFilter {
    std::string description;
    std::function<bool(const FamilyMember&)> contains;
};

KernelFilter kernel_family(OperatorKind op, const BundleDescriptor& bundle);

}  // namespace hspin
