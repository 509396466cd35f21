// Compares the serial reference sweep against the OpenMP-parallel one on the
// heavier checking workloads.

#include "contlab/laws.hpp"
#include "contlab/search.hpp"
#include "contlab/zoo.hpp"

#include <chrono>
#include <iostream>

using namespace contlab;

namespace {

template <class F>
double time_of(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-38s %9.3fs %9.3fs %6.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
    std::printf("%-38s %10s %10s %7s\n", "workload", "serial", "parallel", "speedup");

    {
        MonadicContainer li = mk_list(5);
        double s = time_of([&] { check_monadic(li, ExecPolicy::serial()); });
        double p = time_of([&] { check_monadic(li, ExecPolicy::with_jobs(jobs)); });
        row("axioms: list at fuel 5", s, p);
    }
    {
        MonadicContainer st = mk_state(2);
        std::vector<Idx> sizes{0, 1, 2};
        double s = time_of([&] { monad_laws_oracle(st, sizes, ExecPolicy::serial()); });
        double p = time_of([&] { monad_laws_oracle(st, sizes, ExecPolicy::with_jobs(jobs)); });
        row("interpreted monad: state, sizes 0..2", s, p);
    }
    {
        Slot s1 = monadic_slot(mk_writer(cyclic_monoid(2)));
        Slot s2 = monadic_slot(mk_writer(cyclic_monoid(2)));
        std::vector<DistLawData> all = enumerate_all_law_tables(s1, s2, LawKind::MndMnd);
        std::vector<Idx> sizes{0, 1, 2, 3};
        auto sweep = [&](const ExecPolicy& pol) {
            std::size_t hits = 0;
            for (const DistLawData& cand : all) {
                bool a = !check_mnd_mnd(cand, pol).refuted();
                bool b = !beck_oracle(cand, sizes, pol).refuted();
                hits += (a && b);
            }
            return hits;
        };
        double s = time_of([&] { sweep(ExecPolicy::serial()); });
        double p = time_of([&] { sweep(ExecPolicy::with_jobs(jobs)); });
        row("law tables vs oracle: writer/writer", s, p);
    }
    return 0;
}
