#include "contlab/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace contlab {

int effective_jobs(const ExecPolicy& policy) {
    if (!policy.parallel) return 1;
#ifdef _OPENMP
    return policy.jobs > 0 ? policy.jobs : omp_get_max_threads();
#else
    return 1;
#endif
}

EquationResult sweep_blocks(std::string tag, Nat nblocks,
                            const std::function<BlockOutcome(Nat)>& fn,
                            const ExecPolicy& policy, std::string note) {
    EquationResult res;
    res.tag = std::move(tag);
    res.note = std::move(note);

    std::vector<BlockOutcome> outcomes(static_cast<std::size_t>(nblocks));

#ifdef _OPENMP
    if (policy.parallel && nblocks > 1) {
        int jobs = effective_jobs(policy);
        std::int64_t n = static_cast<std::int64_t>(nblocks);
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
        for (std::int64_t b = 0; b < n; ++b)
            outcomes[static_cast<std::size_t>(b)] = fn(static_cast<Nat>(b));
    } else
#endif
    {
        for (Nat b = 0; b < nblocks; ++b)
            outcomes[static_cast<std::size_t>(b)] = fn(b);
    }

    for (Nat b = 0; b < nblocks; ++b) {
        BlockOutcome& o = outcomes[static_cast<std::size_t>(b)];
        res.checked = sat_add(res.checked, o.checked);
        res.deferred = sat_add(res.deferred, o.deferred);
        res.blocked = sat_add(res.blocked, o.blocked);
        if (!res.failure && o.failure) {
            o.failure->block = b;
            res.failure = std::move(o.failure);
        }
    }
    return res;
}

} // namespace contlab
