#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tcc {

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;  // expected/got text when failing
};

// The built-in expectation suite: every published table and theorem this
// library reproduces, plus seeded random identity spot checks. When
// corrupt_one is set, one expectation is deliberately broken to exercise
// the failure path.
std::vector<VerifyItem> run_paper_verification(uint64_t seed, bool corrupt_one = false);

}  // namespace tcc
