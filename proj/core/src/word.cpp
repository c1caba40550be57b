#include "repwords/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace repwords {

Word reduce(const Word& w) {
    if (w.empty()) throw std::invalid_argument("reduce: empty word");
    std::map<int, int> rank;
    for (int x : w) rank[x] = 0;
    int next = 1;
    for (auto& [letter, r] : rank) r = next++;
    Word out;
    out.reserve(w.size());
    for (int x : w) out.push_back(rank[x]);
    return out;
}

bool is_reduced(const Word& p) { return !p.empty() && reduce(p) == p; }

static int sign3(int a, int b) { return a < b ? -1 : a > b ? 1 : 0; }

namespace {

// picks indices for slots left to right; candidate index ascending at each
// slot, so the first full match is the lexicographically smallest tuple
bool match_from(const Word& w, const Word& p, std::size_t slot, int from, std::vector<int>& idx) {
    if (slot == p.size()) return true;
    std::size_t need = p.size() - slot;
    for (std::size_t i = static_cast<std::size_t>(from); i + need <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t s = 0; s < slot; ++s) {
            if (sign3(w[static_cast<std::size_t>(idx[s])], w[i]) !=
                sign3(p[s], p[slot])) { ok = false; break; }
        }
        if (!ok) continue;
        idx[slot] = static_cast<int>(i);
        if (match_from(w, p, slot + 1, static_cast<int>(i) + 1, idx)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_pattern(const Word& w, const Word& p) {
    if (!is_reduced(p)) throw std::invalid_argument("contains_pattern: pattern not reduced");
    if (p.size() > w.size()) return std::nullopt;
    std::vector<int> idx(p.size(), 0);
    if (match_from(w, p, 0, 0, idx)) return idx;
    return std::nullopt;
}

std::optional<std::vector<int>> contains_pattern_naive(const Word& w, const Word& p) {
    if (!is_reduced(p)) throw std::invalid_argument("contains_pattern_naive: pattern not reduced");
    std::size_t k = p.size();
    if (k > w.size()) return std::nullopt;
    std::vector<int> idx(k);
    // enumerate all increasing index tuples in lexicographic order
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    while (true) {
        Word sub;
        for (int i : idx) sub.push_back(w[static_cast<std::size_t>(i)]);
        if (reduce(sub) == p) return idx;
        // advance
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                               static_cast<int>(w.size() - k + static_cast<std::size_t>(pos)))
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < k; ++i)
            idx[i] = idx[i - 1] + 1;
    }
    return std::nullopt;
}

namespace {

bool match_anchored(const Word& w, const Word& p, std::size_t slot, int from,
                    std::vector<int>& idx) {
    // like match_from but the final slot is pinned to the last position
    if (slot + 1 == p.size()) {
        std::size_t last = w.size() - 1;
        for (std::size_t s = 0; s < slot; ++s)
            if (sign3(w[static_cast<std::size_t>(idx[s])], w[last]) != sign3(p[s], p[slot]))
                return false;
        return true;
    }
    std::size_t need = p.size() - slot;  // includes the pinned last slot
    for (std::size_t i = static_cast<std::size_t>(from); i + need <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t s = 0; s < slot; ++s)
            if (sign3(w[static_cast<std::size_t>(idx[s])], w[i]) != sign3(p[s], p[slot])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        idx[slot] = static_cast<int>(i);
        if (match_anchored(w, p, slot + 1, static_cast<int>(i) + 1, idx)) return true;
    }
    return false;
}

}  // namespace

bool pattern_occurrence_at_end(const Word& w, const Word& p) {
    if (p.size() > w.size()) return false;
    if (p.size() == 1) return true;
    std::vector<int> idx(p.size() - 1, 0);
    return match_anchored(w, p, 0, 0, idx);
}

namespace {

// first/last occurrence positions per letter; throws if a letter is missing
void occurrence_bounds(const Word& w, int n, std::vector<int>& first, std::vector<int>& last) {
    first.assign(static_cast<std::size_t>(n) + 1, -1);
    last.assign(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        int x = w[pos];
        if (x < 1 || x > n) throw std::invalid_argument("word letter out of range 1..n");
        if (first[static_cast<std::size_t>(x)] < 0) first[static_cast<std::size_t>(x)] = static_cast<int>(pos);
        last[static_cast<std::size_t>(x)] = static_cast<int>(pos);
    }
    for (int x = 1; x <= n; ++x)
        if (first[static_cast<std::size_t>(x)] < 0)
            throw std::invalid_argument("word is missing letter " + std::to_string(x));
}

}  // namespace

bool twelve_represents(const Word& w, const LabeledGraph& g) {
    std::vector<int> first, last;
    occurrence_bounds(w, g.n(), first, last);
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) {
            bool adjacent = last[static_cast<std::size_t>(j)] < first[static_cast<std::size_t>(i)];
            if (adjacent != g.edge(i, j)) return false;
        }
    return true;
}

LabeledGraph graph_from_word(const Word& w) {
    int n = 0;
    for (int x : w) n = std::max(n, x);
    std::vector<int> first, last;
    occurrence_bounds(w, n, first, last);
    LabeledGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (last[static_cast<std::size_t>(j)] < first[static_cast<std::size_t>(i)]) g.add_edge(i, j);
    return g;
}

Word normalize_at_most_twice(const Word& w, const LabeledGraph& g) {
    if (!twelve_represents(w, g))
        throw std::invalid_argument("normalize_at_most_twice: word does not 12-represent the graph");
    std::vector<int> first, last;
    occurrence_bounds(w, g.n(), first, last);
    Word out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        int x = w[pos];
        if (static_cast<int>(pos) == first[static_cast<std::size_t>(x)] ||
            static_cast<int>(pos) == last[static_cast<std::size_t>(x)])
            out.push_back(x);
    }
    return out;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word complement_word(const Word& w, int n) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (x < 1 || x > n) throw std::invalid_argument("complement_word: letter out of range");
        out.push_back(n + 1 - x);
    }
    return out;
}

// compact digit string when every letter fits one digit, else spaced
std::string word_to_string(const Word& w) {
    bool digits = true;
    for (int x : w)
        if (x > 9) digits = false;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !digits) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

// accepts both forms word_to_string emits: a compact digit string like
// "4624153" (one letter per character) or whitespace-separated letters
// like "10 2 10" (the only way to write letters above 9)
Word parse_word(const std::string& s) {
    if (!s.empty() && s.find_first_of(" \t\r\n") == std::string::npos) {
        bool all_digits = true;
        for (char ch : s)
            if (ch < '0' || ch > '9') all_digits = false;
        if (all_digits) {
            Word w;
            w.reserve(s.size());
            for (char ch : s) {
                if (ch == '0') throw std::invalid_argument("parse_word: letters must be positive");
                w.push_back(ch - '0');
            }
            return w;
        }
    }
    std::istringstream in(s);
    Word w;
    long x;
    while (in >> x) {
        if (x < 1) throw std::invalid_argument("parse_word: letters must be positive");
        w.push_back(static_cast<int>(x));
    }
    if (!in.eof()) throw std::invalid_argument("parse_word: trailing garbage");
    return w;
}

std::string pattern_label(const Word& p) { return word_to_string(p); }

}  // namespace repwords
