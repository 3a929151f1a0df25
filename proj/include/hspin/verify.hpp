#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hspin {

struct VerifyGrid {
    int n_min = 3;
    int n_max = 10;
    int j_max = 4;
    int k_max = 15;
    std::uint64_t seed = 0;
};

struct VerifyReport {
    std::string suite;
    std::int64_t checks = 0;
    std::int64_t failed = 0;
    std::vector<std::string> violations;  // first few failures, in order

    void merge(const VerifyReport& other);
};

const std::vector<std::string>& suite_names();

// one of suite_names() or "all"
VerifyReport run_suite(const std::string& name, const VerifyGrid& grid);

VerifyReport verify_branching(const VerifyGrid& grid);
VerifyReport verify_weitzenboeck(const VerifyGrid& grid);
VerifyReport verify_factorization_suite(const VerifyGrid& grid);
VerifyReport verify_crosscheck(const VerifyGrid& grid);
VerifyReport verify_killing(const VerifyGrid& grid);

}  // namespace hspin
