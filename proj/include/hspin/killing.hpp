#pragma once

#include "hspin/branching.hpp"

#include <map>
#include <vector>

namespace hspin {

struct KillingPiece {
    int i = 0;                        // the piece (j, j-2i, 0, ...)
    std::vector<IrrepLabel> labels;   // one label, or the +/- pair on S^3
    std::int64_t dim = 0;
};

struct KillingDecomposition {
    int n = 3;
    int j = 0;
    std::vector<KillingPiece> primitive_pieces;     // P^j
    std::map<int, std::int64_t> graded_pieces;      // i -> dim P^{j-2i}
    std::int64_t total_dim = 0;
};

KillingDecomposition primitive_killing(int n, int j);
KillingDecomposition killing_space_dim(int n, int j);

struct FormPiece {
    FamilyMember member;
    std::vector<IrrepLabel> labels;
    std::int64_t dim = 0;
};

struct KillingForms {
    FormPiece killing;     // ker C and ker d*
    FormPiece co_killing;  // ker C and ker d
};

KillingForms killing_forms(int n, int j);

struct KillingChainCheck {
    int checks = 0;
    std::vector<std::string> failures;
};

// component chains K_{s'} in V_{j-2s'}(2s', j-2i), and the absent odd offsets
KillingChainCheck killing_chain_check(int n, int j);

}  // namespace hspin
