#pragma once

#include "hspin/rep_core.hpp"

#include <map>
#include <string>
#include <vector>

namespace hspin {

struct BranchingList {
    IrrepLabel parent;
    std::vector<IrrepLabel> children;
};

// Spin(n+1) -> Spin(n) by interlacing
BranchingList branch(const IrrepLabel& parent);

int contains(const IrrepLabel& parent, const IrrepLabel& fiber);

enum class FiberKind { Spinor, Sym, Form, SpinorForm, Generic };

struct FiberComponent {
    IrrepLabel label;
    int multiplicity = 1;
};

struct BundleDescriptor {
    int base_n = 3;
    FiberKind kind = FiberKind::Generic;
    int j = 0;
    std::vector<FiberComponent> fiber;
};

// S_j, Sym_0^j, Lambda^j, E_j over S^n
BundleDescriptor spinor_bundle(int n, int j);
BundleDescriptor sym_bundle(int n, int j);
BundleDescriptor form_bundle(int n, int j);
BundleDescriptor spinor_form_bundle(int n, int j);
BundleDescriptor generic_bundle(const IrrepLabel& fiber);

enum class Family { SpinorSphere, SymSphere, FormUp, FormDown, SpinorFormUp, SpinorFormDown };

const char* family_name(Family f);
Family parse_family(const std::string& name);
bool has_s(Family f);

struct FamilyMember {
    Family family = Family::SpinorSphere;
    int n = 3;
    int j = 0;
    int k = 0;
    int s = 0;
    WeightVector parent_weight;
    int multiplicity = 1;
};

// Builds the parent weight and multiplicity; throws NotApplicable outside the family's range.
FamilyMember make_member(Family family, int n, int j, int k, int s = 0);

bool member_exists(Family family, int n, int j, int k, int s = 0);

// the so(n+1) labels a member stands for: one, or the +/- pair
std::vector<IrrepLabel> member_labels(const FamilyMember& m);

// summed over the +/- pair, without the multiplicity
std::int64_t member_dim(const FamilyMember& m);

// family mode, k <= k_max
std::vector<FamilyMember> frobenius_decompose(const BundleDescriptor& bundle, int k_max);

struct ParentMultiplicity {
    IrrepLabel parent;
    int multiplicity = 0;
};

// generic mode: all parents with first entry <= fiber first entry + k_max + 1
std::vector<ParentMultiplicity> frobenius_generic(const BundleDescriptor& bundle, int k_max);

Rational generic_first_entry_bound(const BundleDescriptor& bundle, int k_max);

// dominant weights of so(N) with first entry <= bound, integral or half-odd class
std::vector<WeightVector> dominant_weights(const AlgebraDescriptor& algebra, const Rational& bound,
                                           bool half_odd);

// weight -> total multiplicity, expanding +/- pairs
using WeightMultiset = std::map<std::string, int>;

WeightMultiset to_multiset(const std::vector<FamilyMember>& members);
WeightMultiset to_multiset(const std::vector<ParentMultiplicity>& parents);

}  // namespace hspin
