#pragma once

#include <string>
#include <vector>

#include "qdot/numerics.hpp"
#include "qdot/params.hpp"

// Runtime invariant suite: the structural identities every build must
// satisfy, runnable from the CLI (selfcheck command). Each check returns the
// measured number alongside its bound so failures are diagnosable.

namespace qdot {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<CheckResult> run_invariant_suite(const TripletParams& params, const QuadSpec& spec);

}  // namespace qdot
