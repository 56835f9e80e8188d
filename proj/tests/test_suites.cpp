#include <doctest.h>

#include <algorithm>
#include <set>

#include "bracekit/suites.hpp"
#include "fixtures.hpp"

using namespace bracekit;
using namespace fixtures;

TEST_CASE("suite dispatch and guards") {
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK(names.size() == 7);

    SuiteOptions opt;
    CHECK_THROWS_AS(run_suite("nope", opt), InvalidArgumentError);

    SuiteOptions zero;
    zero.max_order = 0;
    CHECK_THROWS_AS(run_suite("axioms", zero), InvalidArgumentError);

    SuiteOptions huge;
    huge.max_order = 1000;
    CHECK_THROWS_AS(run_suite("axioms", huge), BoundExceededError);
}

TEST_CASE("every suite passes on the order <= 4 corpus") {
    SuiteOptions opt;
    opt.max_order = 4;
    for (const std::string& name : suite_names()) {
        if (name == "all") continue;
        auto records = run_suite(name, opt);
        CHECK(!records.empty());
        for (const ResultRecord& r : records) {
            INFO(to_line(r));
            CHECK(r.verdict != Verdict::Fail);
        }
    }
}

TEST_CASE("suite output is deterministic") {
    SuiteOptions opt;
    opt.max_order = 4;
    auto a = run_suite("huq", opt);
    auto b = run_suite("huq", opt);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].subject == b[i].subject);
        CHECK(a[i].check == b[i].check);
        CHECK(verdict_name(a[i].verdict) == verdict_name(b[i].verdict));
        CHECK(a[i].witness == b[i].witness);
    }
}

TEST_CASE("a database corpus replaces enumeration for per-brace checks") {
    SuiteOptions opt;
    opt.max_order = 6;
    opt.corpus = {b4(), trivial_s3(), trivial_cyclic(2)};
    auto records = run_suite("huq", opt);
    CHECK(all_passed(records));
    std::set<std::string> subjects;
    for (const ResultRecord& r : records) subjects.insert(r.subject);
    CHECK(subjects.size() == 3);

    opt.max_order = 4;  // drops the s3 entry
    subjects.clear();
    for (const ResultRecord& r : run_suite("huq", opt)) subjects.insert(r.subject);
    CHECK(subjects.size() == 2);
}
