#pragma once

// Command-line front end.
//
//   classify --ring <expr> [--element <idx|lo-hi|*>]
//   subsets  --ring <expr>
//   verify   [--corpus <default|path>] [--theorems <ids|all>] [--out <path>]
//   dump     --ring <expr> [--out <path>]
//
// Exit codes: 0 success, 1 verification failures, 2 usage/parse/semantic
// errors, 3 feasibility cap exceeded.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpring/classification.hpp"
#include "qpring/expr.hpp"
#include "qpring/harness.hpp"
#include "qpring/ring_io.hpp"
#include "qpring/subsets.hpp"

namespace qpring {

namespace cli_detail {

struct ElementRange {
    Idx lo;
    Idx hi; // inclusive
};

inline ElementRange parse_selector(const std::string& sel, const FiniteGeneralRing& ring) {
    if (sel == "*") return {0, static_cast<Idx>(ring.order() - 1)};
    auto parse_idx = [&](const std::string& word) {
        if (word.empty()) throw std::invalid_argument("empty element selector");
        unsigned long v = 0;
        for (char c : word) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad element selector: " + sel);
            v = v * 10 + static_cast<unsigned long>(c - '0');
            if (v > 65535) throw std::invalid_argument("element selector out of range: " + sel);
        }
        if (v >= ring.order())
            throw std::invalid_argument("element index " + word + " out of range for order " +
                                        std::to_string(ring.order()));
        return static_cast<Idx>(v);
    };
    auto dash = sel.find('-');
    if (dash == std::string::npos) {
        Idx i = parse_idx(sel);
        return {i, i};
    }
    Idx lo = parse_idx(sel.substr(0, dash));
    Idx hi = parse_idx(sel.substr(dash + 1));
    if (lo > hi) throw std::invalid_argument("empty element range: " + sel);
    return {lo, hi};
}

inline void classify_element(const SubsetCache& cache, Idx a, std::ostream& out) {
    const auto& ring = cache.ring();
    auto line = [&](const char* notion, const char* status, const std::string& pl) {
        out << a << ' ' << notion << ' ' << status;
        if (!pl.empty()) out << ' ' << pl;
        out << '\n';
    };
    auto opt_line = [&](const char* notion, const auto& cert_opt) {
        if (cert_opt)
            line(notion, "pass", payload(*cert_opt));
        else
            line(notion, "fail", "");
    };

    opt_line("SR", strongly_regular(cache, a));
    line("SPR", "pass", payload(strongly_pi_regular(cache, a)));
    opt_line("QP", quasipolar(cache, a));
    opt_line("SC", strongly_clean(cache, a));
    if (ring.is_unital()) {
        opt_line("PP", pseudopolar(cache, a));
        opt_line("SPRC", strongly_pi_rad_clean(cache, a));
        opt_line("SEMIREG", semiregular(cache, a));
        opt_line("UQP", unital_quasipolar(cache, a));
    } else {
        line("PP", "skip", "requires_unity");
        line("SPRC", "skip", "requires_unity");
        line("SEMIREG", "skip", "requires_unity");
        line("UQP", "skip", "requires_unity");
    }
}

inline void print_subsets(const SubsetCache& cache, std::ostream& out) {
    const auto& ring = cache.ring();
    out << "ring " << ring.name() << '\n';
    out << "order " << ring.order() << '\n';
    out << "unity ";
    if (ring.unity())
        out << *ring.unity();
    else
        out << "none";
    out << '\n';
    for (SetKind k : {SetKind::Units, SetKind::Idem, SetKind::Nil, SetKind::Q, SetKind::QN,
                      SetKind::Qnil, SetKind::J, SetKind::Jsharp}) {
        out << to_label(k) << ": ";
        if (set_kind_requires_unity(k) && !ring.is_unital())
            out << "requires_unity";
        else
            out << cache.set(k).to_string();
        out << '\n';
    }
}

inline std::vector<RingExpr> load_corpus(const std::string& spec) {
    if (spec == "default") return default_corpus();
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open corpus file: " + spec);
    std::vector<RingExpr> corpus;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        corpus.push_back(parse_ring_expr(line));
    }
    if (corpus.empty()) throw std::invalid_argument("corpus file has no ring expressions");
    return corpus;
}

inline std::vector<std::string> parse_theorem_ids(const std::string& spec) {
    if (spec == "all") return all_theorem_ids();
    std::vector<std::string> ids;
    std::string cur;
    for (char c : spec) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) ids.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) ids.push_back(cur);
    if (ids.empty()) throw std::invalid_argument("no theorem ids given");
    for (const auto& id : ids) find_theorem(id);
    return ids;
}

inline void write_out(const std::string& text, const std::optional<std::string>& path,
                      std::ostream& out) {
    if (path) {
        std::ofstream f(*path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + *path);
        f << text;
    } else {
        out << text;
    }
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite general-ring computation toolkit"};
    app.require_subcommand(1);

    std::string ring_expr;
    std::string element_sel = "*";
    std::string corpus_spec = "default";
    std::string theorem_spec = "all";
    std::string out_path;

    CLI::App* classify = app.add_subcommand("classify", "classify elements against each notion");
    classify->add_option("--ring", ring_expr, "ring expression")->required();
    classify->add_option("--element", element_sel, "element index, lo-hi range, or *");

    CLI::App* subsets = app.add_subcommand("subsets", "print the named element sets");
    subsets->add_option("--ring", ring_expr, "ring expression")->required();

    CLI::App* verify = app.add_subcommand("verify", "run theorem checks over a corpus");
    verify->add_option("--corpus", corpus_spec, "'default' or a file of ring expressions");
    verify->add_option("--theorems", theorem_spec, "'all' or comma-separated theorem ids");
    verify->add_option("--out", out_path, "also write the report to this file");

    CLI::App* dump = app.add_subcommand("dump", "write a ring's Cayley tables");
    dump->add_option("--ring", ring_expr, "ring expression")->required();
    dump->add_option("--out", out_path, "output file (stdout when absent)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (classify->parsed()) {
            FiniteGeneralRing ring = eval_ring_expr(ring_expr);
            SubsetCache cache(ring);
            auto range = cli_detail::parse_selector(element_sel, ring);
            out << "ring " << ring.name() << '\n';
            for (Idx a = range.lo; a <= range.hi; ++a) {
                cli_detail::classify_element(cache, a, out);
                if (a == range.hi) break;
            }
            return 0;
        }
        if (subsets->parsed()) {
            FiniteGeneralRing ring = eval_ring_expr(ring_expr);
            SubsetCache cache(ring);
            cli_detail::print_subsets(cache, out);
            return 0;
        }
        if (verify->parsed()) {
            auto corpus = cli_detail::load_corpus(corpus_spec);
            auto ids = cli_detail::parse_theorem_ids(theorem_spec);
            TheoremReport report = run_suite(corpus, ids);
            std::string text = report.serialize();
            std::optional<std::string> path;
            if (!out_path.empty()) path = out_path;
            if (path) cli_detail::write_out(text, path, out);
            out << text;
            return report.total.failed == 0 ? 0 : 1;
        }
        if (dump->parsed()) {
            FiniteGeneralRing ring = eval_ring_expr(ring_expr);
            std::optional<std::string> path;
            if (!out_path.empty()) path = out_path;
            cli_detail::write_out(dump_ring(ring), path, out);
            return 0;
        }
    } catch (const FeasibilityExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const RingError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace qpring
