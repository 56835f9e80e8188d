// Command line front end: validate and inspect .sbrace files, compute
// commutators and series, enumerate classes, and run the verification
// suites.  Exit codes: 0 all pass, 1 failures, 2 usage or parse errors.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracekit/enumerate.hpp"
#include "bracekit/extensions.hpp"
#include "bracekit/homology.hpp"
#include "bracekit/io.hpp"
#include "bracekit/quotients.hpp"
#include "bracekit/subobjects.hpp"
#include "bracekit/suites.hpp"

using namespace bracekit;

namespace {

std::string set_str(const ElementSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int m : s.members()) {
        if (!first) out << ',';
        out << m;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string label_of(const BraceFile& bf, size_t idx, const BracePtr& b) {
    if (!bf.name.empty()) return bf.name;
    if (b) return std::to_string(b->order()) + ":" + canonical_form(b).digest();
    return "record-" + std::to_string(idx);
}

void emit(const ResultRecord& r) { std::cout << to_line(r) << "\n"; }

std::vector<Variety> chosen_varieties(const std::string& arg) {
    if (arg.empty() || arg == "all")
        return {Variety::Grp, Variety::RadRng, Variety::BR, Variety::Ab};
    if (auto x = parse_variety(arg)) return {*x};
    throw InvalidArgumentError("unknown variety: " + arg +
                               " (expected Grp, RadRng, BR, Ab or all)");
}

ElementSet parse_ideal_arg(const BracePtr& b, const std::string& arg) {
    if (arg.empty()) return ElementSet::full(b);
    std::vector<int> members;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            members.push_back(v);
        } catch (const std::exception&) {
            throw InvalidArgumentError("bad element index in --ideal: '" + tok + "'");
        }
    }
    ElementSet s = ElementSet::of(b, members);
    s.insert(0);
    return s;
}

int run_validate(const std::string& path) {
    int rc = 0;
    auto files = read_sbrace_file(path);
    for (size_t i = 0; i < files.size(); ++i) {
        ResultRecord r;
        r.check = "validate";
        try {
            BracePtr b = SkewBrace::validate(files[i].tables);
            r.subject = label_of(files[i], i, b);
            r.witness = "order=" + std::to_string(b->order());
        } catch (const BraceError& e) {
            r.subject = label_of(files[i], i, nullptr);
            r.verdict = Verdict::Fail;
            r.witness = e.what();
            rc = 1;
        }
        emit(r);
    }
    return rc;
}

int run_invariants(const std::string& path, const std::string& variety_arg) {
    int rc = 0;
    auto files = read_sbrace_file(path);
    auto vars = chosen_varieties(variety_arg);
    for (size_t i = 0; i < files.size(); ++i) {
        BracePtr b;
        try {
            b = SkewBrace::validate(files[i].tables);
        } catch (const BraceError& e) {
            emit({label_of(files[i], i, nullptr), "validate", Verdict::Fail, e.what(), 0});
            rc = 1;
            continue;
        }
        std::string subj = label_of(files[i], i, b);
        emit({subj, "invariants.order", Verdict::Info, std::to_string(b->order()), 0});
        auto ideals = all_ideals(b);
        emit({subj, "invariants.ideal-count", Verdict::Info, std::to_string(ideals.size()), 0});
        emit({subj, "invariants.additive-center", Verdict::Info, set_str(additive_center(b)), 0});
        emit({subj, "invariants.radical-center", Verdict::Info, set_str(radical_center(b)), 0});
        for (Variety x : vars) {
            ElementSet c = rel_commutator(b, ElementSet::full(b), x);
            emit({subj, "invariants." + variety_name(x) + ".in-variety", Verdict::Info,
                  in_variety(b, x) ? "yes" : "no", 0});
            emit({subj, "invariants." + variety_name(x) + ".full-commutator", Verdict::Info,
                  set_str(c), 0});
        }
    }
    return rc;
}

int run_commutator(const std::string& path, const std::string& ideal_arg,
                   const std::string& variety_arg) {
    int rc = 0;
    auto files = read_sbrace_file(path);
    auto vars = chosen_varieties(variety_arg);
    for (size_t i = 0; i < files.size(); ++i) {
        BracePtr b = SkewBrace::validate(files[i].tables);
        std::string subj = label_of(files[i], i, b);
        ElementSet s = parse_ideal_arg(b, ideal_arg);
        if (!is_ideal(s)) {
            emit({subj, "commutator.ideal-check", Verdict::Fail,
                  set_str(s) + " is not an ideal; its ideal closure is " +
                      set_str(ideal_closure(s)),
                  0});
            rc = 1;
            continue;
        }
        for (Variety x : vars)
            emit({subj, "commutator." + variety_name(x), Verdict::Info,
                  set_str(rel_commutator(b, s, x)), 0});
    }
    return rc;
}

int run_central(const std::string& path, const std::string& ideal_arg,
                const std::string& variety_arg) {
    int rc = 0;
    auto files = read_sbrace_file(path);
    auto vars = chosen_varieties(variety_arg);
    for (size_t i = 0; i < files.size(); ++i) {
        BracePtr b = SkewBrace::validate(files[i].tables);
        std::string subj = label_of(files[i], i, b);
        ElementSet s = parse_ideal_arg(b, ideal_arg);
        if (!is_ideal(s)) {
            emit({subj, "central.ideal-check", Verdict::Fail,
                  set_str(s) + " is not an ideal; its ideal closure is " +
                      set_str(ideal_closure(s)),
                  0});
            rc = 1;
            continue;
        }
        Extension e = make_extension(quotient(b, s).projection);
        for (Variety x : vars) {
            bool alg = is_central_algebraic(e, x);
            bool cat = is_central_categorical(e, x);
            emit({subj, "central." + variety_name(x) + ".algebraic", Verdict::Info,
                  alg ? "yes" : "no", 0});
            emit({subj, "central." + variety_name(x) + ".categorical", Verdict::Info,
                  cat ? "yes" : "no", 0});
            ResultRecord agree{subj, "central." + variety_name(x) + ".oracles-agree",
                               Verdict::Pass, "", 0};
            if (alg != cat) {
                agree.verdict = Verdict::Fail;
                agree.witness = "algebraic and categorical answers differ";
                rc = 1;
            }
            emit(agree);
            if (x == Variety::RadRng)
                emit({subj, "central.RadRng.kernel-in-center", Verdict::Info,
                      s.is_subset_of(radical_center(b)) ? "yes" : "no", 0});
        }
    }
    return rc;
}

int run_series(const std::string& path, const std::string& variety_arg, int max_n) {
    auto files = read_sbrace_file(path);
    auto vars = chosen_varieties(variety_arg);
    for (size_t i = 0; i < files.size(); ++i) {
        BracePtr b = SkewBrace::validate(files[i].tables);
        std::string subj = label_of(files[i], i, b);
        for (Variety x : vars) {
            auto terms = lower_central_series(b, x, max_n);
            for (size_t t = 0; t < terms.size(); ++t)
                emit({subj, "series." + variety_name(x) + ".term", Verdict::Info,
                      "n=" + std::to_string(t) + " " + set_str(terms[t]), 0});
        }
    }
    return 0;
}

int run_enumerate(int order, const std::string& out_dir) {
    auto braces = all_skew_braces(order);
    std::vector<BraceFile> recs;
    recs.reserve(braces.size());
    for (size_t i = 0; i < braces.size(); ++i)
        recs.push_back(BraceFile{
            "order" + std::to_string(order) + "-class" + std::to_string(i),
            braces[i]->tables()});
    if (out_dir.empty()) {
        write_sbrace(std::cout, recs);
        return 0;
    }
    std::filesystem::create_directories(out_dir);
    std::string path =
        (std::filesystem::path(out_dir) / ("order-" + std::to_string(order) + ".sbrace"))
            .string();
    write_sbrace_file(path, recs);
    emit({"order-" + std::to_string(order), "enumerate.classes", Verdict::Info,
          std::to_string(recs.size()) + " -> " + path, 0});
    return 0;
}

int run_homs(const std::string& path_a, const std::string& path_b) {
    auto fa = read_sbrace_file(path_a);
    auto fb = read_sbrace_file(path_b);
    for (size_t i = 0; i < fa.size(); ++i) {
        BracePtr a = SkewBrace::validate(fa[i].tables);
        for (size_t j = 0; j < fb.size(); ++j) {
            BracePtr b = SkewBrace::validate(fb[j].tables);
            std::string subj = label_of(fa[i], i, a) + "->" + label_of(fb[j], j, b);
            auto homs = all_homs(a, b);
            emit({subj, "homs.count", Verdict::Info, std::to_string(homs.size()), 0});
            for (const Hom& h : homs) {
                std::string m;
                for (size_t k = 0; k < h.map.size(); ++k) {
                    if (k) m += ',';
                    m += std::to_string(h.map[k]);
                }
                if (h.is_surjective) m += " onto";
                emit({subj, "homs.map", Verdict::Info, m, 0});
            }
        }
    }
    return 0;
}

int run_verify(const std::string& suite, int max_order, bool search24,
               const std::string& db_path, const std::string& variety_arg) {
    SuiteOptions opt;
    opt.max_order = max_order;
    opt.varieties = chosen_varieties(variety_arg);
    opt.naive_star_search = search24;
    if (!db_path.empty()) opt.corpus = load_brace_database(db_path);
    auto records = run_suite(suite, opt);
    for (const ResultRecord& r : records) emit(r);
    return all_passed(records) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite skew brace toolkit"};
    app.require_subcommand(1);

    std::string file, file_b, ideal_arg, variety_arg, out_dir, db_path;
    std::string suite = "all";
    int order = 0, max_n = 64, max_order = 8;
    bool search24 = false;

    auto* c_validate = app.add_subcommand("validate", "check that a file holds skew braces");
    c_validate->add_option("file", file)->required();

    auto* c_inv = app.add_subcommand("invariants", "report centers, ideals and commutators");
    c_inv->add_option("file", file)->required();
    c_inv->add_option("--variety", variety_arg, "Grp, RadRng, BR, Ab or all");

    auto* c_comm = app.add_subcommand("commutator", "relative commutator of an ideal");
    c_comm->add_option("file", file)->required();
    c_comm->add_option("--ideal", ideal_arg, "comma separated element indices (default: all)");
    c_comm->add_option("--variety", variety_arg, "Grp, RadRng, BR, Ab or all");

    auto* c_central = app.add_subcommand("central", "centrality of the quotient extension");
    c_central->add_option("file", file)->required();
    c_central->add_option("--ideal", ideal_arg, "comma separated element indices (default: all)");
    c_central->add_option("--variety", variety_arg, "Grp, RadRng, BR, Ab or all");

    auto* c_series = app.add_subcommand("series", "lower central series");
    c_series->add_option("file", file)->required();
    c_series->add_option("--variety", variety_arg, "Grp, RadRng, BR, Ab or all");
    c_series->add_option("--max-n", max_n, "maximum number of terms");

    auto* c_enum = app.add_subcommand("enumerate", "isomorphism classes of a given order");
    c_enum->add_option("--order", order)->required();
    c_enum->add_option("--out", out_dir, "directory for the .sbrace output (default: stdout)");

    auto* c_homs = app.add_subcommand("homs", "all homomorphisms between two files");
    c_homs->add_option("file_a", file)->required();
    c_homs->add_option("file_b", file_b)->required();

    auto* c_verify = app.add_subcommand("verify", "run a verification suite over the corpus");
    c_verify->add_option("--suite", suite, "axioms, commutators, centrality, huq, homology, series or all");
    c_verify->add_option("--max-order", max_order, "corpus bound (default 8)");
    c_verify->add_option("--variety", variety_arg, "Grp, RadRng, BR, Ab or all");
    c_verify->add_flag("--include-size-24-search", search24,
                       "hunt for an order-24 ideal whose naive star set is not an ideal");
    c_verify->add_option("--db", db_path, "use a .sbrace database instead of enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_validate) return run_validate(file);
        if (*c_inv) return run_invariants(file, variety_arg);
        if (*c_comm) return run_commutator(file, ideal_arg, variety_arg);
        if (*c_central) return run_central(file, ideal_arg, variety_arg);
        if (*c_series) return run_series(file, variety_arg, max_n);
        if (*c_enum) return run_enumerate(order, out_dir);
        if (*c_homs) return run_homs(file, file_b);
        if (*c_verify) return run_verify(suite, max_order, search24, db_path, variety_arg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceededError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const BraceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
