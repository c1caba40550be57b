// command line front end: decide and certify 12-representability by
// pattern-avoiding words, run censuses, and emit geometric models

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repwords/construct.hpp"
#include "repwords/geometry.hpp"
#include "repwords/io.hpp"
#include "repwords/oracle.hpp"

using namespace repwords;

namespace {

constexpr int kExitRepresented = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// inline graphs: "1-2,2-3" with an optional explicit vertex count for
// trailing isolated vertices
LabeledGraph graph_from_edges_arg(const std::string& arg, int n_opt) {
    std::vector<std::pair<int, int>> edges;
    int max_v = 0;
    std::istringstream in(arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t dash = tok.find('-');
        if (dash == std::string::npos)
            throw UsageError("--edges entries look like \"1-2\"; got \"" + tok + "\"");
        int a = 0, b = 0;
        try {
            a = std::stoi(tok.substr(0, dash));
            b = std::stoi(tok.substr(dash + 1));
        } catch (const std::exception&) {
            throw UsageError("--edges entries look like \"1-2\"; got \"" + tok + "\"");
        }
        if (a < 1 || b < 1) throw UsageError("vertex labels start at 1");
        edges.emplace_back(a, b);
        max_v = std::max(max_v, std::max(a, b));
    }
    int n = n_opt > 0 ? n_opt : max_v;
    if (n < max_v) throw UsageError("--n is smaller than the largest endpoint in --edges");
    if (n < 1) throw UsageError("graph must have at least one vertex");
    LabeledGraph g(n);
    for (auto [a, b] : edges) {
        if (a == b) throw UsageError("self-loops are not allowed");
        g.add_edge(a, b);
    }
    return g;
}

LabeledGraph load_input_graph(const std::string& path, const std::string& edges, int n_opt) {
    if (!edges.empty() && !path.empty())
        throw UsageError("pass either a graph file or --edges, not both");
    if (!edges.empty()) return graph_from_edges_arg(edges, n_opt);
    if (path.empty()) throw UsageError("no graph given; pass a file, '-' for stdin, or --edges");
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw UsageError("cannot open file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    LabeledGraph g = read_graph_auto(text);
    if (g.n() < 1) throw UsageError("graph must have at least one vertex");
    return g;
}

int env_jobs(int cli_jobs) {
    const char* env = std::getenv("REPWORDS_JOBS");
    if (!env || !*env) return cli_jobs;
    try {
        int j = std::stoi(env);
        if (j < 1) throw std::invalid_argument("");
        return j;
    } catch (const std::exception&) {
        throw UsageError("REPWORDS_JOBS must be a positive integer");
    }
}

const std::vector<std::string>& decision_selectors() {
    static const std::vector<std::string> s = {
        "none", "111", "121", "212", "231", "312", "321", "123",
        "132",  "213", "211", "221", "112", "122", "set:121+212", "set:211+221"};
    return s;
}

bool selector_needs_oracle(const std::string& sel) {
    return sel == "none" || sel == "111" || sel == "321" || sel == "112" || sel == "122";
}

Certificate run_selector(const LabeledGraph& g, const std::string& sel,
                         const SearchBudget& budget, bool allow_oracle) {
    SearchBudget b = budget;
    if (!allow_oracle) b.max_n = 0;  // any exhaustive search comes back over budget
    Certificate c = [&] {
        if (sel == "none") return represent_none(g, b);
        if (sel == "111") return represent_111(g, b);
        if (sel == "121") return represent_121(g);
        if (sel == "212") return represent_212(g);
        if (sel == "231") return represent_231(g);
        if (sel == "312") return represent_312(g);
        if (sel == "321") return represent_321(g, b);
        if (sel == "123") return represent_123(g);
        if (sel == "132") return represent_132(g);
        if (sel == "213") return represent_213(g);
        if (sel == "211") return represent_211(g);
        if (sel == "221") return represent_221(g);
        if (sel == "112") return represent_112(g, b);
        if (sel == "122") return represent_122(g, b);
        if (sel == "set:121+212") return represent_set(g, PatternSet::P121_212);
        if (sel == "set:211+221") return represent_set(g, PatternSet::P211_221);
        throw UsageError("unknown pattern selector: " + sel);
    }();
    if (!allow_oracle && c.status == CertStatus::Unknown)
        c.reason = "the pattern machinery alone cannot decide this case; rerun with --oracle";
    return c;
}

std::string certificate_text(const Certificate& c) {
    std::string out = to_string(c.status);
    if (c.status == CertStatus::Represented) {
        out += " word=" + word_to_string(c.word);
        if (!c.avoided.empty()) {
            out += " avoids=";
            for (std::size_t i = 0; i < c.avoided.size(); ++i)
                out += (i ? "," : "") + pattern_label(c.avoided[i]);
        }
    }
    if (c.witness) {
        out += " pattern=" + c.witness->pattern.name + " vertices=";
        for (std::size_t i = 0; i < c.witness->vertices.size(); ++i)
            out += (i ? "," : "") + std::to_string(c.witness->vertices[i]);
    }
    if (!c.method.empty()) out += " method=" + c.method;
    if (!c.reason.empty()) out += " reason=\"" + c.reason + "\"";
    return out + "\n";
}

int exit_code_for(CertStatus s) {
    switch (s) {
        case CertStatus::Represented: return kExitRepresented;
        case CertStatus::Refuted:
        case CertStatus::RefutedByOracle: return kExitRefuted;
        case CertStatus::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + path);
    out << content;
}

int cmd_decide(const std::string& path, const std::string& edges, int n_opt,
               const std::string& sel, const std::string& format, const SearchBudget& budget,
               bool allow_oracle, const std::string& out_path) {
    LabeledGraph g = load_input_graph(path, edges, n_opt);
    Certificate c = run_selector(g, sel, budget, allow_oracle);
    write_output(out_path, format == "text" ? certificate_text(c) : certificate_json(c));
    return exit_code_for(c.status);
}

int cmd_census(int n, std::vector<std::string> selectors, const std::string& format,
               const SearchBudget& budget, const std::string& out_path) {
    if (selectors.empty()) selectors = census_selectors();
    std::vector<CensusRow> rows = census(n, selectors, budget);
    write_output(out_path, format == "json" ? census_json(rows) : census_csv(rows));
    for (const CensusRow& r : rows)
        if (!r.agree) return 1;
    return 0;
}

int cmd_crossvalidate(int n, const std::vector<std::string>& selectors,
                      const SearchBudget& budget, const std::string& out_path) {
    for (const std::string& sel : selectors) {
        if (selector_needs_oracle(sel))
            throw UsageError("selector " + sel +
                             " has no standalone pattern characterization to cross-validate");
        if (sel == "12" || sel == "21")
            throw UsageError("selector " + sel + " is census-only");
    }
    std::uint64_t total = labeled_graph_count(n);
    std::ostringstream out;
    out << "n=" << n << " graphs=" << total << "\n";
    out << "pattern,graphs,represented_pattern,represented_oracle,disagreements\n";
    bool all_agree = true;
    for (const std::string& sel : selectors) {
        std::vector<Word> avoid = selector_patterns(sel);
        std::int64_t by_pattern = 0, by_oracle = 0, disagree = 0;
        for (std::uint64_t key = 0; key < total; ++key) {
            LabeledGraph g = graph_from_key(n, key);
            // the constructive route re-verifies its own words internally
            Certificate c = run_selector(g, sel, budget, false);
            bool pat_ok = c.status == CertStatus::Represented;
            OracleOutcome o = brute_force_representant(g, avoid, budget);
            if (o.kind == OracleKind::OverBudget)
                throw UsageError("oracle budget too small for n=" + std::to_string(n) +
                                 "; raise --max-n");
            bool orc_ok = o.kind == OracleKind::Found;
            by_pattern += pat_ok ? 1 : 0;
            by_oracle += orc_ok ? 1 : 0;
            if (pat_ok != orc_ok) ++disagree;
        }
        if (disagree) all_agree = false;
        out << sel << "," << total << "," << by_pattern << "," << by_oracle << "," << disagree
            << "\n";
    }
    write_output(out_path, out.str());
    return all_agree ? 0 : 1;
}

int cmd_model(const std::string& path, const std::string& edges, int n_opt,
              const std::string& kind, const std::string& format, const std::string& out_path) {
    LabeledGraph g = load_input_graph(path, edges, n_opt);
    try {
        std::string content;
        if (kind == "interval") {
            Co132IntervalModel m = build_co132_interval_model(g);
            content = format == "json"   ? co132_json(m)
                      : format == "tikz" ? tikz_co132_model(m)
                                         : svg_co132_model(m);
        } else {
            // the 123 pipeline models the complement of the input graph
            if (auto w = find_any(g, fp123_set())) throw PatternError(
                "graph admits no such model: " + w->pattern.name + " occurrence", *w);
            MptModel m = build_mpt_model(g.complement());
            if (kind == "mpt") {
                content = format == "json"   ? mpt_json(m)
                          : format == "tikz" ? tikz_mpt_model(m)
                                             : svg_mpt_model(m);
            } else {
                HookModel hm = mpt_to_hook(unit_adjust(m));
                content = format == "json"   ? hook_json(hm)
                          : format == "tikz" ? tikz_hook_model(hm)
                                             : svg_hook_model(hm);
            }
        }
        write_output(out_path, content);
        return 0;
    } catch (const PatternError& e) {
        std::ostringstream msg;
        msg << e.what() << " at vertices";
        for (int v : e.witness.vertices) msg << " " << v;
        msg << "\n";
        write_output(out_path, msg.str());
        return 1;
    }
}

int cmd_selftest() {
    int failed = 0;
    auto item = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failed;
    };
    auto mk = [](int n, std::initializer_list<std::pair<int, int>> es) {
        LabeledGraph g(n);
        for (auto [a, b] : es) g.add_edge(a, b);
        return g;
    };
    try {
        LabeledGraph sample5 = mk(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
        Certificate c123 = represent_123(sample5);
        item("123-avoiding construction", c123.status == CertStatus::Represented &&
                                              word_to_string(c123.word) == "432152");
        item("permutation word", word_to_string(permutation_word(sample5)) == "43125");

        LabeledGraph e13 = mk(3, {{1, 3}});
        Certificate c211 = represent_211(e13);
        item("211-avoiding construction",
             c211.status == CertStatus::Represented && word_to_string(c211.word) == "2312");

        Word w = parse_word("4624153");
        LabeledGraph sample6 =
            mk(6, {{1, 2}, {1, 4}, {1, 6}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {5, 6}});
        item("12-representation verifier", twelve_represents(w, sample6));
        item("word round trip", parse_word(word_to_string(w)) == w);

        LabeledGraph k3 = mk(3, {{1, 2}, {1, 3}, {2, 3}});
        OracleOutcome o = brute_force_representant(k3, {{3, 2, 1}});
        item("triangle has no 321-avoiding word", o.kind == OracleKind::Absent);

        LabeledGraph p3 = mk(3, {{1, 2}, {2, 3}});
        Certificate cp = represent_none(p3, SearchBudget{});
        item("mid-labeled path refuted",
             cp.status == CertStatus::Refuted && cp.witness.has_value());

        std::string g6 = write_graph6(sample6);
        item("graph6 round trip", read_graph6(g6).edges() == sample6.edges());

        CensusRow row = census_row(3, "12", SearchBudget{});
        item("census n=3 complete-graph count", row.labeled_count_pattern == 1 &&
                                                    row.labeled_count_oracle == 1 && row.agree);

        MptModel m = build_mpt_model(mk(5, {{1, 2}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}));
        item("marked-point model golden",
             m.intervals[1].l == Rational(1, 3) && m.intervals[0].r == Rational(31, 6) &&
                 m.intervals[4].l == Rational(5, 6));
    } catch (const std::exception& e) {
        std::cout << "FAIL exception: " << e.what() << "\n";
        ++failed;
    }
    std::cout << (failed ? "selftest failed\n" : "selftest passed\n");
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"12-representability by pattern-avoiding words: deciders, census, models"};
    app.require_subcommand(1);

    std::string graph_path, edges_arg, out_path;
    int n_opt = 0;
    std::string selector = "none";
    std::string format;
    int jobs = 1;
    int max_n = 7;
    std::int64_t time_cap_ms = 0;
    bool oracle = false;
    int census_n = 0;
    std::vector<std::string> census_patterns;
    std::string cross_patterns = "121,231,123,132,211";
    std::string model_kind;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path,
                        "graph file (edge list or graph6), or '-' for stdin");
        cmd->add_option("--edges", edges_arg, "inline edge list like \"1-2,2-3\"");
        cmd->add_option("--n", n_opt, "vertex count when --edges leaves isolated vertices");
    };
    auto add_budget_opts = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads for exhaustive searches");
        cmd->add_option("--max-n", max_n, "largest n the exhaustive search accepts");
        cmd->add_option("--time-cap-ms", time_cap_ms, "soft time cap per search (0 = none)");
    };

    CLI::App* check = app.add_subcommand(
        "check", "decide whether the graph is 12-representable by a pattern-avoiding word");
    add_graph_opts(check);
    check->add_option("--pattern", selector, "pattern selector (default: none)");
    check->add_option("--format", format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_option("-o,--output", out_path, "output file (default stdout)");
    add_budget_opts(check);

    CLI::App* represent = app.add_subcommand(
        "represent", "like check, but only constructive answers; --oracle enables search");
    add_graph_opts(represent);
    represent->add_option("--pattern", selector, "pattern selector (default: none)");
    represent->add_option("--format", format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    represent->add_option("-o,--output", out_path, "output file (default stdout)");
    represent->add_flag("--oracle", oracle, "allow exhaustive search when patterns cannot decide");
    add_budget_opts(represent);

    CLI::App* census_cmd =
        app.add_subcommand("census", "count representable graphs over all labeled graphs");
    census_cmd->add_option("--n", census_n, "number of vertices (1..6)")->required();
    census_cmd->add_option("--pattern", census_patterns,
                           "pattern selectors (repeatable; default: all)");
    census_cmd->add_option("--format", format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    census_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    add_budget_opts(census_cmd);

    CLI::App* cross = app.add_subcommand(
        "crossvalidate", "pattern machinery vs exhaustive search on every labeled graph");
    cross->add_option("--n", census_n, "number of vertices")->required();
    cross->add_option("--patterns", cross_patterns, "comma-separated selectors");
    cross->add_option("-o,--output", out_path, "output file (default stdout)");
    add_budget_opts(cross);

    CLI::App* model = app.add_subcommand("model", "emit the geometric model behind a construction");
    add_graph_opts(model);
    model->add_option("--kind", model_kind, "mpt, hook, or interval")
        ->required()
        ->check(CLI::IsMember({"mpt", "hook", "interval"}));
    model->add_option("--format", format, "svg (default), tikz, or json")
        ->check(CLI::IsMember({"svg", "tikz", "json"}));
    model->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* selftest = app.add_subcommand("selftest", "fast internal sanity checks");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        SearchBudget budget;
        budget.jobs = env_jobs(jobs);
        budget.max_n = max_n;
        budget.time_cap_ms = time_cap_ms;

        if (check->parsed() || represent->parsed()) {
            const auto& allowed = decision_selectors();
            if (std::find(allowed.begin(), allowed.end(), selector) == allowed.end()) {
                std::string list;
                for (const std::string& s : allowed) list += (list.empty() ? "" : ", ") + s;
                throw UsageError("unknown pattern selector \"" + selector + "\"; one of: " + list);
            }
            bool allow_oracle = check->parsed() ? true : oracle;
            return cmd_decide(graph_path, edges_arg, n_opt, selector,
                              format.empty() ? "json" : format, budget, allow_oracle, out_path);
        }
        if (census_cmd->parsed())
            return cmd_census(census_n, census_patterns, format.empty() ? "csv" : format, budget,
                              out_path);
        if (cross->parsed()) {
            std::vector<std::string> sels;
            std::istringstream in(cross_patterns);
            std::string tok;
            while (std::getline(in, tok, ','))
                if (!tok.empty()) sels.push_back(tok);
            if (sels.empty()) throw UsageError("--patterns must name at least one selector");
            return cmd_crossvalidate(census_n, sels, budget, out_path);
        }
        if (model->parsed())
            return cmd_model(graph_path, edges_arg, n_opt, model_kind,
                             format.empty() ? "svg" : format, out_path);
        return cmd_selftest();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;  // EX_SOFTWARE
    }
}
