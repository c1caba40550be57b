#include "repwords/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "repwords/word.hpp"

namespace repwords {

using ordered_json = nlohmann::ordered_json;

LabeledGraph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<long> nums;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) throw std::invalid_argument("edge list: unexpected token in '" + line + "'");
    }
    if (nums.empty()) throw std::invalid_argument("edge list: missing vertex count");
    long n = nums[0];
    if (n < 0 || n > 62) throw std::invalid_argument("edge list: vertex count must be in 0..62");
    if ((nums.size() - 1) % 2 != 0)
        throw std::invalid_argument("edge list: dangling endpoint at the end");
    LabeledGraph g(static_cast<int>(n));
    for (std::size_t t = 1; t + 1 < nums.size(); t += 2) {
        long i = nums[t], j = nums[t + 1];
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::invalid_argument("edge list: endpoint out of range");
        if (i == j) throw std::invalid_argument("edge list: self-loop");
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

std::string write_edge_list(const LabeledGraph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// column-major upper triangle: for j = 2..n the bits (1,j), (2,j), ..., (j-1,j)
std::vector<std::pair<int, int>> graph6_pair_order(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

}  // namespace

LabeledGraph read_graph6(const std::string& text) {
    std::string s = strip(text);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    for (char ch : s)
        if (static_cast<unsigned char>(ch) < 63 || static_cast<unsigned char>(ch) > 126)
            throw std::invalid_argument("graph6: byte out of range");
    std::size_t pos = 0;
    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~') {
            if (s.size() < 8) throw std::invalid_argument("graph6: truncated size field");
            n = 0;
            for (int t = 2; t < 8; ++t) n = (n << 6) | (s[static_cast<std::size_t>(t)] - 63);
            pos = 8;
        } else {
            if (s.size() < 4) throw std::invalid_argument("graph6: truncated size field");
            n = 0;
            for (int t = 1; t < 4; ++t) n = (n << 6) | (s[static_cast<std::size_t>(t)] - 63);
            pos = 4;
        }
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n > 62) throw std::invalid_argument("graph6: vertex counts above 62 are not supported");
    long bits = n * (n - 1) / 2;
    long bytes = (bits + 5) / 6;
    if (static_cast<long>(s.size() - pos) != bytes)
        throw std::invalid_argument("graph6: wrong body length");
    LabeledGraph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> pairs = graph6_pair_order(static_cast<int>(n));
    long bi = 0;
    for (long t = 0; t < bytes; ++t) {
        int v = s[pos + static_cast<std::size_t>(t)] - 63;
        for (int b = 5; b >= 0; --b, ++bi) {
            int bit = (v >> b) & 1;
            if (bi >= bits) {
                if (bit) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (bit) g.add_edge(pairs[static_cast<std::size_t>(bi)].first,
                                pairs[static_cast<std::size_t>(bi)].second);
        }
    }
    return g;
}

std::string write_graph6(const LabeledGraph& g) {
    int n = g.n();
    std::string out(1, static_cast<char>(n + 63));
    std::vector<std::pair<int, int>> pairs = graph6_pair_order(n);
    int acc = 0, used = 0;
    for (auto [i, j] : pairs) {
        acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
        if (++used == 6) {
            out += static_cast<char>(acc + 63);
            acc = 0;
            used = 0;
        }
    }
    if (used) out += static_cast<char>((acc << (6 - used)) + 63);
    return out;
}

LabeledGraph read_graph_auto(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty graph input");
    if (s[0] >= '0' && s[0] <= '9') return read_edge_list(s);
    return read_graph6(s);
}

LabeledGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph_auto(buf.str());
}

std::string certificate_json(const Certificate& c) {
    ordered_json j;
    j["status"] = to_string(c.status);
    if (c.status == CertStatus::Represented) {
        j["word"] = c.word;
        if (!c.avoided.empty()) {
            std::vector<std::string> labels;
            labels.reserve(c.avoided.size());
            for (const Word& p : c.avoided) labels.push_back(pattern_label(p));
            j["avoided_patterns"] = labels;
        }
    }
    if (c.witness) {
        j["witness"] = ordered_json{{"pattern", c.witness->pattern.name},
                                    {"vertices", c.witness->vertices}};
    }
    if (!c.method.empty()) j["method"] = c.method;
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j.dump(2) + "\n";
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::string out =
        "n,pattern,labeled_total,unlabeled_total,labeled_count_pattern,"
        "labeled_count_oracle,unlabeled_count,agree,wall_time_ms\n";
    auto cell = [](std::int64_t v) { return v < 0 ? std::string() : std::to_string(v); };
    for (const CensusRow& r : rows) {
        out += std::to_string(r.n) + "," + r.pattern + "," + std::to_string(r.labeled_total) +
               "," + std::to_string(r.unlabeled_total) + "," + cell(r.labeled_count_pattern) +
               "," + cell(r.labeled_count_oracle) + "," + cell(r.unlabeled_count) + "," +
               (r.agree ? "true" : "false") + "," + std::to_string(r.wall_time_ms) + "\n";
    }
    return out;
}

std::string census_json(const std::vector<CensusRow>& rows) {
    ordered_json arr = ordered_json::array();
    auto cell = [](std::int64_t v) { return v < 0 ? ordered_json() : ordered_json(v); };
    for (const CensusRow& r : rows) {
        ordered_json j;
        j["n"] = r.n;
        j["pattern"] = r.pattern;
        j["labeled_total"] = r.labeled_total;
        j["unlabeled_total"] = r.unlabeled_total;
        j["labeled_count_pattern"] = cell(r.labeled_count_pattern);
        j["labeled_count_oracle"] = cell(r.labeled_count_oracle);
        j["unlabeled_count"] = cell(r.unlabeled_count);
        j["agree"] = r.agree;
        j["wall_time_ms"] = r.wall_time_ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string mpt_json(const MptModel& m) {
    ordered_json arr = ordered_json::array();
    for (int i = 1; i <= m.n(); ++i) {
        const PointedInterval& q = m.intervals[static_cast<std::size_t>(i - 1)];
        arr.push_back(ordered_json{
            {"vertex", i}, {"l", q.l.str()}, {"p", q.p.str()}, {"r", q.r.str()}});
    }
    ordered_json j{{"kind", "mpt"}, {"intervals", std::move(arr)}};
    return j.dump(2) + "\n";
}

std::string hook_json(const HookModel& hm) {
    ordered_json arr = ordered_json::array();
    for (int i = 1; i <= hm.n(); ++i) {
        const Hook& h = hm.hooks[static_cast<std::size_t>(i - 1)];
        arr.push_back(ordered_json{
            {"vertex", i}, {"c", h.c.str()}, {"l", h.l.str()}, {"r", h.r.str()}});
    }
    ordered_json j{{"kind", "hook"}, {"unit", hm.unit}, {"hooks", std::move(arr)}};
    return j.dump(2) + "\n";
}

std::string co132_json(const Co132IntervalModel& m) {
    ordered_json arr = ordered_json::array();
    for (int i = 1; i <= m.n(); ++i) {
        arr.push_back(ordered_json{{"vertex", i},
                                   {"lprime", m.lprime[static_cast<std::size_t>(i - 1)]},
                                   {"l", m.l[static_cast<std::size_t>(i - 1)].str()},
                                   {"r", m.r[static_cast<std::size_t>(i - 1)].str()}});
    }
    ordered_json j{{"kind", "interval"}, {"intervals", std::move(arr)}};
    return j.dump(2) + "\n";
}

namespace {

constexpr int kScale = 40;

std::string num(const Rational& v) { return (v * kScale).decimal(2); }

struct SvgCanvas {
    Rational x0, y0, x1, y1;  // math coordinates, y up
    std::string px(const Rational& x) const { return num(x - x0); }
    std::string py(const Rational& y) const { return num(y1 - y); }
    std::string open() const {
        std::string w = num(x1 - x0), h = num(y1 - y0);
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
               "\" viewBox=\"0 0 " + w + " " + h + "\">\n"
               "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }
    std::string line(const Rational& ax, const Rational& ay, const Rational& bx,
                     const Rational& by, const std::string& style) const {
        return "<line x1=\"" + px(ax) + "\" y1=\"" + py(ay) + "\" x2=\"" + px(bx) + "\" y2=\"" +
               py(by) + "\" " + style + "/>\n";
    }
    std::string dot(const Rational& x, const Rational& y) const {
        return "<circle cx=\"" + px(x) + "\" cy=\"" + py(y) + "\" r=\"4\" fill=\"black\"/>\n";
    }
    std::string text(const Rational& x, const Rational& y, int dx, int dy,
                     const std::string& s) const {
        std::ostringstream o;
        o << "<text x=\"" << px(x) << "\" y=\"" << py(y) << "\" dx=\"" << dx << "\" dy=\"" << dy
          << "\" font-family=\"sans-serif\" font-size=\"14\">" << s << "</text>\n";
        return o.str();
    }
};

const char* kStroke = "stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\"";
const char* kDashed = "stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";

// rows of intervals, one vertex per line top to bottom, optional marked point
std::string svg_interval_rows(const std::vector<PointedInterval>& intervals, bool marked) {
    if (intervals.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"40\" height=\"40\"/>\n";
    Rational xlo = intervals[0].l, xhi = intervals[0].r;
    for (const auto& q : intervals) {
        xlo = min(xlo, q.l);
        xhi = max(xhi, q.r);
    }
    int n = static_cast<int>(intervals.size());
    SvgCanvas cv{xlo - 1, Rational(0), xhi + 1, Rational(n + 1)};
    std::string out = cv.open();
    for (int i = 1; i <= n; ++i) {
        const PointedInterval& q = intervals[static_cast<std::size_t>(i - 1)];
        Rational y(n + 1 - i);  // vertex 1 on top
        out += cv.line(q.l, y, q.r, y, kStroke);
        out += cv.line(q.l, y - Rational(1, 8), q.l, y + Rational(1, 8), kStroke);
        out += cv.line(q.r, y - Rational(1, 8), q.r, y + Rational(1, 8), kStroke);
        if (marked) out += cv.dot(q.p, y);
        out += cv.text(q.r, y, 8, 5, std::to_string(i));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string svg_mpt_model(const MptModel& m) { return svg_interval_rows(m.intervals, true); }

std::string svg_co132_model(const Co132IntervalModel& m) {
    std::vector<PointedInterval> rows;
    rows.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 1; i <= m.n(); ++i)
        rows.push_back({m.l[static_cast<std::size_t>(i - 1)],
                        m.l[static_cast<std::size_t>(i - 1)],
                        m.r[static_cast<std::size_t>(i - 1)]});
    return svg_interval_rows(rows, false);
}

std::string svg_hook_model(const HookModel& hm) {
    if (hm.hooks.empty())
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"40\" height=\"40\"/>\n";
    Rational clo = hm.hooks[0].c, rhi = hm.hooks[0].r, llo = hm.hooks[0].l;
    for (const Hook& h : hm.hooks) {
        clo = min(clo, h.c);
        rhi = max(rhi, h.r);
        llo = min(llo, h.l);
    }
    // box around the diagram plus both guide lines y = -x and y = -x + 1
    Rational x0 = min(clo, llo) - 1, x1 = rhi + 1;
    Rational y0 = -x1, y1 = max(-llo, -x0 + 1) + Rational(1, 2);
    SvgCanvas cv{x0, y0, x1, y1};
    std::string out = cv.open();
    out += cv.line(x0, -x0, x1, -x1, kDashed);
    out += cv.line(x0, -x0 + 1, x1, -x1 + 1, kDashed);
    for (int i = 1; i <= hm.n(); ++i) {
        const Hook& h = hm.hooks[static_cast<std::size_t>(i - 1)];
        out += cv.line(h.c, -h.l, h.c, -h.c, kStroke);
        out += cv.line(h.c, -h.c, h.r, -h.c, kStroke);
        out += cv.dot(h.c, -h.c);
        out += cv.text(h.c, -h.c, 6, 16, std::to_string(i));
    }
    out += "</svg>\n";
    return out;
}

namespace {

std::string frac(const Rational& v) {
    // pgfmath understands a/b; integers go out plain
    return v.is_integer() ? v.num_str() : v.num_str() + "/" + v.den_str();
}

std::string tikz_interval_rows(const std::vector<PointedInterval>& intervals, bool marked) {
    std::string out = "\\begin{tikzpicture}[line width=0.8pt, yscale=0.5]\n";
    int n = static_cast<int>(intervals.size());
    for (int i = 1; i <= n; ++i) {
        const PointedInterval& q = intervals[static_cast<std::size_t>(i - 1)];
        std::string y = std::to_string(n - i);
        out += "  \\draw[|-|] (" + frac(q.l) + "," + y + ") -- (" + frac(q.r) + "," + y + ");\n";
        if (marked) out += "  \\fill (" + frac(q.p) + "," + y + ") circle (2pt);\n";
        out += "  \\node[right] at (" + frac(q.r) + "," + y + ") {$" + std::to_string(i) +
               "$};\n";
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace

std::string tikz_mpt_model(const MptModel& m) { return tikz_interval_rows(m.intervals, true); }

std::string tikz_co132_model(const Co132IntervalModel& m) {
    std::vector<PointedInterval> rows;
    rows.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 1; i <= m.n(); ++i)
        rows.push_back({m.l[static_cast<std::size_t>(i - 1)],
                        m.l[static_cast<std::size_t>(i - 1)],
                        m.r[static_cast<std::size_t>(i - 1)]});
    return tikz_interval_rows(rows, false);
}

std::string tikz_hook_model(const HookModel& hm) {
    std::string out = "\\begin{tikzpicture}[line width=0.8pt]\n";
    if (!hm.hooks.empty()) {
        Rational clo = hm.hooks[0].c, rhi = hm.hooks[0].r, llo = hm.hooks[0].l;
        for (const Hook& h : hm.hooks) {
            clo = min(clo, h.c);
            rhi = max(rhi, h.r);
            llo = min(llo, h.l);
        }
        Rational x0 = min(clo, llo) - 1, x1 = rhi + 1;
        out += "  \\draw[dashed, gray] (" + frac(x0) + "," + frac(-x0) + ") -- (" + frac(x1) +
               "," + frac(-x1) + ");\n";
        out += "  \\draw[dashed, gray] (" + frac(x0) + "," + frac(-x0 + 1) + ") -- (" + frac(x1) +
               "," + frac(-x1 + 1) + ");\n";
        for (int i = 1; i <= hm.n(); ++i) {
            const Hook& h = hm.hooks[static_cast<std::size_t>(i - 1)];
            out += "  \\draw (" + frac(h.c) + "," + frac(-h.l) + ") -- (" + frac(h.c) + "," +
                   frac(-h.c) + ") -- (" + frac(h.r) + "," + frac(-h.c) + ");\n";
            out += "  \\node[below left] at (" + frac(h.c) + "," + frac(-h.c) + ") {$" +
                   std::to_string(i) + "$};\n";
        }
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace repwords
