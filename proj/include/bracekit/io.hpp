#pragma once

// Reading and writing the .sbrace table format and the one-line result
// records emitted by the verification suites.
//
// An .sbrace file holds one or more records separated by a line containing
// only "---".  A record is a header line "n" or "n name", followed by the
// n rows of the addition table and then the n rows of the circle table,
// each row n space-separated indices.  Blank lines and '#' comments are
// ignored everywhere (the writer puts one blank line between the tables).
// Parsing checks shape only; validating the group laws is the caller's job.

#include <iosfwd>
#include <string>
#include <vector>

#include "bracekit/core.hpp"

namespace bracekit {

struct BraceFile {
    std::string name;  // empty when the header had no name
    CayleyTablePair tables;
};

std::vector<BraceFile> parse_sbrace(std::istream& in);
std::vector<BraceFile> read_sbrace_file(const std::string& path);

void write_sbrace(std::ostream& out, const std::vector<BraceFile>& records);
void write_sbrace_file(const std::string& path, const std::vector<BraceFile>& records);

// One suite observation.  PASS and FAIL gate the run; INFO lines report
// measurements that are interesting but not contractual.
enum class Verdict { Pass, Fail, Info };

std::string verdict_name(Verdict v);

struct ResultRecord {
    std::string subject;  // which brace or family, e.g. "8:1a2b..." or "order-6"
    std::string check;    // dotted check identifier, e.g. "axioms.lambda-automorphism"
    Verdict verdict = Verdict::Pass;
    std::string witness;  // empty, or the counterexample / measured value
    long long ms = 0;
};

// Tab-separated key=value line, keys in fixed order subject, check,
// verdict, witness, ms.  Tabs and newlines inside values become spaces.
std::string to_line(const ResultRecord& r);

}  // namespace bracekit
