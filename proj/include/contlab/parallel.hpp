#pragma once

#include "contlab/report.hpp"

#include <functional>

namespace contlab {

// Execution policy for instance sweeps. Checks enumerate a canonical list of
// instance blocks; blocks are independent, so they may be processed in
// parallel. Results are merged in block order, keeping the first failure in
// canonical order, so the outcome does not depend on the schedule.
struct ExecPolicy {
    bool parallel = false;
    int jobs = 0;  // 0 = runtime default

    static ExecPolicy serial() { return {false, 0}; }
    static ExecPolicy with_jobs(int n) { return {n != 1, n}; }
};

struct BlockOutcome {
    Nat checked = 0;
    Nat deferred = 0;
    Nat blocked = 0;
    std::optional<Counterexample> failure;  // block field filled in by the driver
};

// Runs fn over block indices [0, nblocks), serially or OpenMP-parallel, and
// merges outcomes deterministically.
EquationResult sweep_blocks(std::string tag, Nat nblocks,
                            const std::function<BlockOutcome(Nat)>& fn,
                            const ExecPolicy& policy, std::string note = "");

int effective_jobs(const ExecPolicy& policy);

} // namespace contlab
