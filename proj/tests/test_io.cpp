#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bracekit/errors.hpp"
#include "bracekit/io.hpp"
#include "fixtures.hpp"

using namespace bracekit;
using namespace fixtures;

TEST_CASE("order-1 file parses to the zero brace") {
    std::istringstream in("1\n0\n0\n");
    auto recs = parse_sbrace(in);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].name.empty());
    BracePtr b = SkewBrace::validate(recs[0].tables);
    CHECK(b->order() == 1);
}

TEST_CASE("comments, blank lines and names are accepted") {
    std::istringstream in(
        "# two records\n"
        "2 pair\n"
        "0 1\n"
        "1 0\n"
        "\n"
        "0 1\n"
        "1 0\n"
        "---\n"
        "1 dot\n"
        "0\n"
        "0\n");
    auto recs = parse_sbrace(in);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].name == "pair");
    CHECK(recs[1].name == "dot");
    CHECK(recs[0].tables.add.n() == 2);
}

TEST_CASE("short rows and bad headers raise ParseError") {
    std::istringstream short_row("2\n0 1\n1\n0 1\n1 0\n");
    CHECK_THROWS_AS(parse_sbrace(short_row), ParseError);

    std::istringstream long_row("2\n0 1 1\n1 0\n0 1\n1 0\n");
    CHECK_THROWS_AS(parse_sbrace(long_row), ParseError);

    std::istringstream out_of_range("2\n0 2\n1 0\n0 1\n1 0\n");
    CHECK_THROWS_AS(parse_sbrace(out_of_range), ParseError);

    std::istringstream bad_header("zero\n0\n0\n");
    CHECK_THROWS_AS(parse_sbrace(bad_header), ParseError);

    std::istringstream truncated("2\n0 1\n1 0\n0 1\n");
    CHECK_THROWS_AS(parse_sbrace(truncated), ParseError);
}

TEST_CASE("round trip preserves tables and names") {
    std::vector<BraceFile> recs;
    recs.push_back(BraceFile{"b4", b4()->tables()});
    recs.push_back(BraceFile{"", trivial_s3()->tables()});
    std::ostringstream out;
    write_sbrace(out, recs);
    std::istringstream in(out.str());
    auto back = parse_sbrace(in);
    REQUIRE(back.size() == 2);
    CHECK(back[0].name == "b4");
    CHECK(back[0].tables == recs[0].tables);
    CHECK(back[1].name.empty());
    CHECK(back[1].tables == recs[1].tables);
}

TEST_CASE("file round trip") {
    std::string path = "io_roundtrip_tmp.sbrace";
    std::vector<BraceFile> recs{BraceFile{"k", trivial_klein()->tables()}};
    write_sbrace_file(path, recs);
    auto back = read_sbrace_file(path);
    std::remove(path.c_str());
    REQUIRE(back.size() == 1);
    CHECK(back[0].tables == recs[0].tables);
    CHECK_THROWS_AS(read_sbrace_file("does_not_exist.sbrace"), InvalidArgumentError);
}

TEST_CASE("result records render as tab separated key=value lines") {
    ResultRecord r{"4:deadbeef", "axioms.revalidate", Verdict::Pass, "", 12};
    CHECK(to_line(r) ==
          "subject=4:deadbeef\tcheck=axioms.revalidate\tverdict=PASS\twitness=\tms=12");

    ResultRecord f{"order-6", "x", Verdict::Fail, "bad\tthing", 0};
    CHECK(to_line(f) == "subject=order-6\tcheck=x\tverdict=FAIL\twitness=bad thing\tms=0");

    CHECK(verdict_name(Verdict::Info) == "INFO");
}
