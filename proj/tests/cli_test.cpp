#include <doctest.h>

#include "contlab/cli.hpp"
#include "contlab/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace contlab;

namespace {

struct Run {
    int exit;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("printing then parsing a document is the identity") {
    for (const char* ref : {"exception:2", "writer:z3", "reader:2", "state:2", "list:3",
                            "writer-dir:2", "reader-dir:z2", "exception-law:1/writer:z2",
                            "reader-law:2/writer:z2", "reader-writer-law:2:2"}) {
        Document doc = resolve_ref(ref);
        std::string once = print_document(doc);
        Document back = parse_document(once);
        CHECK(print_document(back) == once);
    }
}

TEST_CASE("an explicit absorbing-shape document parses and verifies") {
    // the two-shape structure with one value position and one absorbing shape
    const char* text = R"({
      "kind": "monadic",
      "shapes": ["ok", "err"],
      "positions": [1, 0],
      "iota": 0,
      "sigma": [
        {"s": 0, "f": [0], "out": 0},
        {"s": 0, "f": [1], "out": 1},
        {"s": 1, "f": [], "out": 1}
      ],
      "pr": [
        {"s": 0, "f": [0], "p": 0, "out": [0, 0]}
      ]
    })";
    Document doc = parse_document(text);
    REQUIRE(doc.kind == Document::Kind::Monadic);
    CHECK(!check_monadic(doc.monadic).refuted());
}

TEST_CASE("schema violations name the offending path") {
    const char* text = R"({
      "kind": "monadic",
      "shapes": ["ok", "err"],
      "positions": [1, 0],
      "iota": 0,
      "sigma": [
        {"s": 0, "f": [0], "out": 0},
        {"s": 0, "f": [1], "out": 1},
        {"s": 1, "f": [], "out": 1}
      ],
      "pr": [
        {"s": 0, "f": [0], "p": 0, "out": [0, 5]}
      ]
    })";
    try {
        parse_document(text);
        FAIL("expected a diagnostic");
    } catch (const Error& e) {
        std::string what = e.what();
        CHECK(what.find("$.pr[0].out[1]") != std::string::npos);
        CHECK(what.find("out of range") != std::string::npos);
    }

    CHECK_THROWS_WITH_AS(parse_document("{\"kind\":\"nonsense\"}"),
                         doctest::Contains("$.kind"), Error);
    CHECK_THROWS_AS(parse_document("not json at all"), Error);
}

TEST_CASE("check exits 0 on verified structures and 1 on refuted ones") {
    Run ok = run({"check", "--monadic", "writer:z2"});
    CHECK(ok.exit == 0);
    CHECK(ok.out.find("verdict: Verified (8/8)") != std::string::npos);

    Run bounded = run({"check", "--monadic", "list:4"});
    CHECK(bounded.exit == 0);
    CHECK(bounded.out.find("BoundedVerified") != std::string::npos);

    Run bad = run({"check", "--monadic", "{\"kind\":\"monadic\",\"shapes\":[\"a\",\"b\"],"
                                         "\"positions\":[1,1],\"iota\":0,"
                                         "\"sigma\":[{\"s\":0,\"f\":[0],\"out\":1},{\"s\":0,\"f\":[1],\"out\":1},"
                                         "{\"s\":1,\"f\":[0],\"out\":1},{\"s\":1,\"f\":[1],\"out\":1}],"
                                         "\"pr\":[{\"s\":0,\"f\":[0],\"p\":0,\"out\":[0,0]},"
                                         "{\"s\":0,\"f\":[1],\"p\":0,\"out\":[0,0]},"
                                         "{\"s\":1,\"f\":[0],\"p\":0,\"out\":[0,0]},"
                                         "{\"s\":1,\"f\":[1],\"p\":0,\"out\":[0,0]}]}"});
    CHECK(bad.exit == 1);
    CHECK(bad.out.find("Refuted") != std::string::npos);
    CHECK(bad.out.find("s=0") != std::string::npos);
}

TEST_CASE("law checks report the named tags") {
    Run r = run({"check", "--law", "exception-law:1/writer:z2"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("unit-\xCE\xB9S-s1") != std::string::npos);
    CHECK(r.out.find("mul-T-p22") != std::string::npos);
    CHECK(r.out.find("(18/18)") != std::string::npos);

    Run mixed = run({"check", "--law", "reader-writer-law:2:2"});
    CHECK(mixed.exit == 0);
    CHECK(mixed.out.find("unit-oS-s") != std::string::npos);
    CHECK(mixed.out.find("(13/13)") != std::string::npos);
}

TEST_CASE("search reports the unique laws with expected counts") {
    Run r = run({"search", "--kind", "mnd-mnd", "--inner", "exception:1", "--outer", "writer:z2",
                 "--expect-count", "1"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("laws=1") != std::string::npos);

    Run wrong = run({"search", "--kind", "mnd-mnd", "--inner", "exception:1", "--outer",
                     "writer:z2", "--expect-count", "2"});
    CHECK(wrong.exit == 1);
}

TEST_CASE("refute distinguishes refutation from finding a fragment") {
    Run unsat = run({"refute", "--inner", "list:3", "--outer", "exception:2"});
    CHECK(unsat.exit == 1);
    CHECK(unsat.out.find("BoundedUnsat") != std::string::npos);

    Run sat = run({"refute", "--inner", "list:3", "--outer", "exception:1"});
    CHECK(sat.exit == 0);
    CHECK(sat.out.find("PartialFound") != std::string::npos);
}

TEST_CASE("oracle runs the interpreted-monad checks") {
    Run r = run({"oracle", "--law", "exception-law:1/writer:z2", "--sizes", "0..3"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("naturality") != std::string::npos);

    Run m = run({"oracle", "--monadic", "writer:z2", "--sizes", "0..3"});
    CHECK(m.exit == 0);
}

TEST_CASE("compose and extract-law round-trip through documents") {
    Run c = run({"compose", "--law", "exception-law:1/writer:z2", "--format", "json"});
    REQUIRE(c.exit == 0);
    auto split = c.out.find("}\n{");
    REQUIRE(split != std::string::npos);
    std::string comp_doc = c.out.substr(split + 2);
    Document doc = parse_document(comp_doc);
    REQUIRE(doc.kind == Document::Kind::Composite);

    Run x = run({"extract-law", "--composite", comp_doc});
    REQUIRE(x.exit == 0);
    Document law = parse_document(x.out);
    REQUIRE(law.kind == Document::Kind::Law);
    CHECK(law.law.same_tables(resolve_ref("exception-law:1/writer:z2").law));
}

TEST_CASE("unknown flags and missing inputs are usage errors") {
    CHECK(run({"check"}).exit == 2);
    CHECK(run({"check", "--monadic", "no-such-thing:9"}).exit == 2);
    CHECK(run({"bogus-command"}).exit == 2);
    CHECK(run({"search", "--inner", "exception:1"}).exit == 2);
}

TEST_CASE("reports are byte-identical across worker counts") {
    for (const char* jobs : {"1", "2", "7"}) {
        Run a = run({"check", "--law", "exception-law:2/writer:z2", "--format", "json", "--jobs",
                     jobs});
        Run b = run({"check", "--law", "exception-law:2/writer:z2", "--format", "json", "--jobs",
                     "1"});
        CHECK(a.exit == b.exit);
        CHECK(a.out == b.out);
    }
    Run s1 = run({"search", "--kind", "mnd-mnd", "--inner", "writer:z2", "--outer", "writer:z2",
                  "--format", "json"});
    Run s2 = run({"search", "--kind", "mnd-mnd", "--inner", "writer:z2", "--outer", "writer:z2",
                  "--format", "json"});
    CHECK(s1.out == s2.out);
}

TEST_CASE("zoo emits documents and the catalogue") {
    Run list = run({"zoo", "--list"});
    CHECK(list.exit == 0);
    CHECK(list.out.find("exception:<k>") != std::string::npos);

    Run doc = run({"zoo", "state:2"});
    CHECK(doc.exit == 0);
    Document parsed = parse_document(doc.out);
    CHECK(parsed.kind == Document::Kind::Monadic);
    CHECK(parsed.monadic.shape_count() == 4);
}

TEST_CASE("an exhausted budget exits with its own code") {
    Run r = run({"refute", "--inner", "list:3", "--outer", "exception:2", "--budget", "1"});
    CHECK(r.exit == 3);
    CHECK(r.out.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("writer carriers load monoids from files") {
    std::string path = "or_monoid_tmp.json";
    {
        std::ofstream f(path);
        f << R"({"size": 2, "unit": 0, "mult": [[0, 1], [1, 1]]})";
    }
    Run r = run({"check", "--monadic", "writer:" + path});
    CHECK(r.exit == 0);
    CHECK(r.out.find("Verified (8/8)") != std::string::npos);

    Run d = run({"check", "--directed", "reader-dir:" + path});
    CHECK(d.exit == 0);

    {
        std::ofstream f(path);
        f << R"({"size": 2, "unit": 0, "mult": [[1, 1], [1, 1]]})";
    }
    Run bad = run({"check", "--monadic", "writer:" + path});
    CHECK(bad.exit == 2);
    CHECK(bad.err.find("monoid") != std::string::npos);
    std::remove(path.c_str());
}
