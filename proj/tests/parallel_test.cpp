#include <doctest.h>

#include "contlab/compose.hpp"
#include "contlab/search.hpp"
#include "contlab/zoo.hpp"

using namespace contlab;

namespace {

void same_report(const EquationReport& a, const EquationReport& b) {
    REQUIRE(a.equations.size() == b.equations.size());
    for (std::size_t i = 0; i < a.equations.size(); ++i) {
        CHECK(a.equations[i].tag == b.equations[i].tag);
        CHECK(a.equations[i].checked == b.equations[i].checked);
        CHECK(a.equations[i].deferred == b.equations[i].deferred);
        CHECK(a.equations[i].blocked == b.equations[i].blocked);
        CHECK(a.equations[i].failure.has_value() == b.equations[i].failure.has_value());
        if (a.equations[i].failure) {
            CHECK(a.equations[i].failure->bindings == b.equations[i].failure->bindings);
            CHECK(a.equations[i].failure->block == b.equations[i].failure->block);
        }
    }
}

} // namespace

TEST_CASE("the parallel sweep reproduces the serial reference, law suites") {
    for (int jobs : {2, 3, 8}) {
        ExecPolicy par = ExecPolicy::with_jobs(jobs);
        same_report(check_mnd_mnd(exception_law(2, mk_writer(cyclic_monoid(2)))),
                    check_mnd_mnd(exception_law(2, mk_writer(cyclic_monoid(2))), par));
        same_report(check_mnd_dir(reader_writer_mixed_law(2, 2)),
                    check_mnd_dir(reader_writer_mixed_law(2, 2), par));
    }
}

TEST_CASE("the parallel sweep reproduces the serial reference, oracle and composite") {
    ExecPolicy par = ExecPolicy::with_jobs(4);
    DistLawData law = reader_law(mk_writer(cyclic_monoid(2)), 2);
    std::vector<Idx> sizes{0, 1, 2, 3};
    same_report(beck_oracle(law, sizes), beck_oracle(law, sizes, par));

    CompatibleComposite comp = composite_from_law(law);
    same_report(check_compatible(comp, law.slot2.mnd, law.slot1.mnd),
                check_compatible(comp, law.slot2.mnd, law.slot1.mnd, par));

    std::vector<Idx> small{0, 1, 2};
    same_report(monad_laws_oracle(mk_state(2), small),
                monad_laws_oracle(mk_state(2), small, par));
}

TEST_CASE("a refuted structure reports the same first counterexample either way") {
    MonadicContainer broken = mk_reader(2);
    broken.pr[0][0] = {{0, 1}, {1, 0}};
    same_report(check_monadic(broken), check_monadic(broken, ExecPolicy::with_jobs(5)));
}
