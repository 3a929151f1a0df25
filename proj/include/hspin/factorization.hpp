#pragma once

#include "hspin/spectra.hpp"

#include <map>
#include <vector>

namespace hspin {

enum class FactorFamily { SpinorSphere, SymSphere, SpinorFormSphere };

struct FactorReport {
    FamilyMember member;
    std::vector<Rational> factor_evs;
    int vanishing_index = -1;  // -1 when no factor or more than one factor vanishes
    Rational product;
};

// B(s';j) = D^2 - ((n+2s'-2)^2/(n+2j-2)^2)(Lap - (s'(n+s'-2) - n(n-1)/8))
Rational b_factor_ev(int s_prime, const FamilyMember& m);

// (T+)*T+ - a(s';j)(Lap - b(s';j)) on symmetric tensors
Rational sym_factor_ev(int s_prime, const FamilyMember& m);

// (T+)*T+ - a'(s';j)(Lap - b'(s';j)) on spinors
Rational tplus_factor_ev(int s_prime, const FamilyMember& m);

// the two factors on E_j; a single Laplacian-only factor when D is absent (n = 2j)
std::vector<Rational> spinor_form_factor_evs(const FamilyMember& m);

FactorReport factor_report(FactorFamily family, const FamilyMember& m);

// throws FactorizationViolated on the first bad member
std::vector<FactorReport> verify_factorization(FactorFamily family, int n, int j, int k_max);

std::vector<FactorReport> tplus_factorization_check(int n, int j, int k_max);

struct GradingReport {
    std::map<int, std::vector<FamilyMember>> slices;  // s -> W_s
    bool filtration_consistent = true;
    bool kernel_equals_slice = true;  // every member killed by the s-th factor has that s
};

GradingReport grading_decomposition(FactorFamily family, int n, int j, int k_max);

}  // namespace hspin
