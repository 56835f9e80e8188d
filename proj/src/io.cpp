#include "bracekit/io.hpp"

#include <fstream>
#include <sstream>

namespace bracekit {

namespace {

struct Line {
    std::string text;
    int number;
};

// All meaningful lines, trimmed, with comments and blanks dropped.
std::vector<Line> meaningful_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        std::string t = raw.substr(b, e - b + 1);
        if (t[0] == '#') continue;
        out.push_back({std::move(t), number});
    }
    return out;
}

OpTable parse_table(const std::vector<Line>& lines, size_t& pos, int n,
                    const std::string& label, int header_line) {
    OpTable t(n);
    for (int i = 0; i < n; ++i) {
        if (pos >= lines.size())
            throw ParseError(lines.empty() ? header_line : lines.back().number,
                             "unexpected end of input inside the " + label + " table");
        const Line& ln = lines[pos++];
        std::istringstream row(ln.text);
        for (int j = 0; j < n; ++j) {
            int v;
            if (!(row >> v))
                throw ParseError(ln.number, label + " row has fewer than " +
                                                std::to_string(n) + " entries");
            if (v < 0 || v >= n)
                throw ParseError(ln.number, label + " entry " + std::to_string(v) +
                                                " out of range 0.." + std::to_string(n - 1));
            t.set(i, j, v);
        }
        int extra;
        if (row >> extra)
            throw ParseError(ln.number, label + " row has more than " +
                                            std::to_string(n) + " entries");
    }
    return t;
}

}  // namespace

std::vector<BraceFile> parse_sbrace(std::istream& in) {
    auto lines = meaningful_lines(in);
    std::vector<BraceFile> out;
    size_t pos = 0;
    while (pos < lines.size()) {
        if (lines[pos].text == "---") {
            ++pos;
            continue;
        }
        const Line& header = lines[pos];
        std::istringstream h(header.text);
        int n = 0;
        if (!(h >> n) || n < 1 || n > 255)
            throw ParseError(header.number, "header must start with an order in 1..255");
        std::string rest;
        std::getline(h, rest);
        size_t b = rest.find_first_not_of(" \t");
        BraceFile rec;
        rec.name = b == std::string::npos ? "" : rest.substr(b);
        ++pos;
        rec.tables.add = parse_table(lines, pos, n, "add", header.number);
        rec.tables.circ = parse_table(lines, pos, n, "circ", header.number);
        out.push_back(std::move(rec));
        if (pos < lines.size() && lines[pos].text != "---")
            throw ParseError(lines[pos].number, "expected '---' between records");
    }
    return out;
}

std::vector<BraceFile> read_sbrace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot open " + path);
    return parse_sbrace(in);
}

void write_sbrace(std::ostream& out, const std::vector<BraceFile>& records) {
    for (size_t r = 0; r < records.size(); ++r) {
        if (r > 0) out << "---\n";
        const BraceFile& rec = records[r];
        const int n = rec.tables.add.n();
        out << n;
        if (!rec.name.empty()) out << ' ' << rec.name;
        out << "\n";
        for (const auto* t : {&rec.tables.add, &rec.tables.circ}) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (j) out << ' ';
                    out << t->at(i, j);
                }
                out << "\n";
            }
            if (t == &rec.tables.add) out << "\n";
        }
    }
}

void write_sbrace_file(const std::string& path, const std::vector<BraceFile>& records) {
    std::ofstream out(path);
    if (!out) throw InvalidArgumentError("cannot open " + path + " for writing");
    write_sbrace(out, records);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Info: return "INFO";
    }
    return "?";
}

namespace {
std::string sanitized(std::string s) {
    for (char& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return s;
}
}  // namespace

std::string to_line(const ResultRecord& r) {
    std::ostringstream out;
    out << "subject=" << sanitized(r.subject) << "\tcheck=" << sanitized(r.check)
        << "\tverdict=" << verdict_name(r.verdict) << "\twitness=" << sanitized(r.witness)
        << "\tms=" << r.ms;
    return out.str();
}

}  // namespace bracekit
