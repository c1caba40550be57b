#include "repwords/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace repwords {

namespace {

void require_axis_aligned(const Segment& s) {
    if (!(s.x1 == s.x2) && !(s.y1 == s.y2))
        throw std::invalid_argument("segment is not axis-aligned");
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
    require_axis_aligned(s);
    require_axis_aligned(t);
    // for closed axis-aligned segments, intersecting is exactly overlapping
    // bounding boxes (touching counts)
    const Rational& sxlo = min(s.x1, s.x2);
    const Rational& sxhi = max(s.x1, s.x2);
    const Rational& sylo = min(s.y1, s.y2);
    const Rational& syhi = max(s.y1, s.y2);
    const Rational& txlo = min(t.x1, t.x2);
    const Rational& txhi = max(t.x1, t.x2);
    const Rational& tylo = min(t.y1, t.y2);
    const Rational& tyhi = max(t.y1, t.y2);
    return max(sxlo, txlo) <= min(sxhi, txhi) && max(sylo, tylo) <= min(syhi, tyhi);
}

namespace {

// model for a graph with no isolated vertex: p_i = i, the left end reaches
// just past the smallest neighbor below, the right end just past the largest
// neighbor above; all coordinates stay inside (0, n+1)
MptModel plain_mpt(const LabeledGraph& h) {
    int n = h.n();
    MptModel m;
    m.intervals.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Rational p(i);
        int jl = h.smallest_neighbor_below(i);
        Rational l = jl ? Rational(jl) - Rational(n - i + 1, n + 1) : p;
        int jr = h.largest_neighbor_above(i);
        Rational r = jr ? Rational(jr) + Rational(i, n + 1) : p;
        m.intervals[static_cast<std::size_t>(i - 1)] = {l, p, r};
    }
    return m;
}

}  // namespace

MptModel build_mpt_model(const LabeledGraph& h) {
    if (auto w = find_any(h, cfp123_set()))
        throw PatternError("graph admits no marked-point model: " + w->pattern.name +
                               " occurrence",
                           *w);
    int n = h.n();
    bool any_isolated = false;
    for (int v = 1; v <= n; ++v)
        if (h.isolated(v)) any_isolated = true;

    MptModel m;
    if (!any_isolated) {
        m = plain_mpt(h);
    } else {
        // with no CFP123 occurrence no edge spans an isolated vertex, so the
        // non-isolated vertices split into runs of consecutive labels; lay
        // the runs out left to right with unit gaps and give every isolated
        // vertex a unit horizontal stick of its own in between
        m.intervals.resize(static_cast<std::size_t>(n));
        Rational cursor(0);
        int i = 1;
        while (i <= n) {
            if (h.isolated(i)) {
                m.intervals[static_cast<std::size_t>(i - 1)] = {cursor, cursor, cursor + 1};
                cursor += 2;
                ++i;
            } else {
                int j = i;
                std::vector<int> verts;
                while (j <= n && !h.isolated(j)) verts.push_back(j++);
                MptModel block = plain_mpt(h.induced(verts));
                for (std::size_t t = 0; t < verts.size(); ++t) {
                    const PointedInterval& q = block.intervals[t];
                    m.intervals[static_cast<std::size_t>(verts[t] - 1)] = {
                        q.l + cursor, q.p + cursor, q.r + cursor};
                }
                cursor += Rational(static_cast<long>(verts.size()) + 2);
                i = j;
            }
        }
    }
    if (!validate_mpt(m, h))
        throw std::logic_error("marked-point construction failed validation");
    return m;
}

bool validate_mpt(const MptModel& m, const LabeledGraph& h) {
    if (m.n() != h.n()) return false;
    for (const auto& q : m.intervals)
        if (!(q.l <= q.p && q.p <= q.r)) return false;
    for (int i = 1; i <= h.n(); ++i)
        for (int j = i + 1; j <= h.n(); ++j) {
            const PointedInterval& a = m.intervals[static_cast<std::size_t>(i - 1)];
            const PointedInterval& b = m.intervals[static_cast<std::size_t>(j - 1)];
            bool adjacent = a.p >= b.l && a.p <= b.r && b.p >= a.l && b.p <= a.r;
            if (adjacent != h.edge(i, j)) return false;
        }
    return true;
}

std::vector<SidedInterval> one_sided_family(const MptModel& m) {
    std::vector<SidedInterval> fam;
    for (int i = 1; i <= m.n(); ++i) {
        const PointedInterval& q = m.intervals[static_cast<std::size_t>(i - 1)];
        if (!(q.l <= q.p && q.p <= q.r))
            throw std::invalid_argument("marked point outside its interval");
        if (q.l < q.p) fam.push_back({i, true, q.l, q.p});
        if (q.p < q.r) fam.push_back({i, false, q.p, q.r});
    }
    std::sort(fam.begin(), fam.end(), [](const SidedInterval& a, const SidedInterval& b) {
        if (a.a != b.a) return a.a < b.a;
        if (a.b != b.b) return a.b < b.b;
        return a.vertex < b.vertex;
    });
    for (std::size_t x = 0; x < fam.size(); ++x)
        for (std::size_t y = x + 1; y < fam.size(); ++y) {
            // fam[x].a <= fam[y].a, so containment means the later piece
            // ends no later than the earlier one
            if (fam[y].b <= fam[x].b)
                throw std::invalid_argument("one-sided family has a contained member");
        }
    return fam;
}

MptModel unit_adjust(const MptModel& m) {
    std::vector<SidedInterval> fam = one_sided_family(m);
    MptModel cur = m;
    for (std::size_t k = 0; k < fam.size(); ++k) {
        // current coordinates of the piece being adjusted; every transform is
        // strictly increasing, so the ascending-left processing order holds
        const PointedInterval& pk = cur.intervals[static_cast<std::size_t>(fam[k].vertex - 1)];
        Rational a = fam[k].left_side ? pk.l : pk.p;
        Rational b = fam[k].left_side ? pk.p : pk.r;
        // rightmost right endpoint of another piece strictly inside (a, b);
        // it belongs to an already adjusted piece, hence alpha < min(a+1, b)
        Rational alpha = a;
        bool blocked = false;
        for (std::size_t t = 0; t < fam.size(); ++t) {
            if (t == k) continue;
            const PointedInterval& pt = cur.intervals[static_cast<std::size_t>(fam[t].vertex - 1)];
            Rational rt = fam[t].left_side ? pt.p : pt.r;
            if (a < rt && rt < b && (!blocked || alpha < rt)) {
                alpha = rt;
                blocked = true;
            }
        }
        if (blocked && !(alpha < min(a + 1, b)))
            throw std::logic_error("unit adjustment hit a blocking endpoint");
        // keep everything up to alpha, squeeze (alpha, b] onto (alpha, a+1],
        // translate everything past b; continuous and strictly increasing
        Rational scale = (a + 1 - alpha) / (b - alpha);
        Rational shift = a + 1 - b;
        auto f = [&](const Rational& x) {
            if (x <= alpha) return x;
            if (x <= b) return alpha + (x - alpha) * scale;
            return x + shift;
        };
        for (auto& q : cur.intervals) {
            q.l = f(q.l);
            q.p = f(q.p);
            q.r = f(q.r);
        }
    }
    for (const auto& s : one_sided_family(cur))
        if (!(s.b - s.a == Rational(1)))
            throw std::logic_error("unit adjustment left a piece of length != 1");
    return cur;
}

HookModel mpt_to_hook(const MptModel& m) {
    HookModel hm;
    hm.hooks.reserve(m.intervals.size());
    for (const auto& q : m.intervals) {
        if (!(q.l <= q.p && q.p <= q.r))
            throw std::invalid_argument("marked point outside its interval");
        hm.hooks.push_back({q.p, q.l, q.r});
    }
    for (std::size_t i = 1; i < hm.hooks.size(); ++i)
        if (!(hm.hooks[i - 1].c < hm.hooks[i].c))
            throw std::invalid_argument("marked points must strictly increase with the label");
    hm.unit = true;
    for (const auto& h : hm.hooks) {
        Rational up = h.c - h.l, right = h.r - h.c;
        bool up_ok = up == Rational(0) || up == Rational(1);
        bool right_ok = right == Rational(0) || right == Rational(1);
        if (!up_ok || !right_ok || (up == Rational(0) && right == Rational(0))) hm.unit = false;
    }
    return hm;
}

MptModel hook_to_mpt(const HookModel& hm) {
    MptModel m;
    m.intervals.reserve(hm.hooks.size());
    for (const auto& h : hm.hooks) {
        if (!(h.l <= h.c && h.c <= h.r))
            throw std::invalid_argument("hook arms must satisfy l <= c <= r");
        m.intervals.push_back({h.l, h.c, h.r});
    }
    return m;
}

namespace {

// a hook is the union of a vertical segment from the corner up to (c, -l)
// and a horizontal one from the corner right to (r, -c)
Segment vertical_arm(const Hook& h) { return {h.c, -h.c, h.c, -h.l}; }
Segment horizontal_arm(const Hook& h) { return {h.c, -h.c, h.r, -h.c}; }

bool hooks_meet(const Hook& a, const Hook& b) {
    // arms of the same orientation lie on distinct lines (corners differ),
    // so only the cross pairs can meet
    return segments_intersect(vertical_arm(a), horizontal_arm(b)) ||
           segments_intersect(horizontal_arm(a), vertical_arm(b));
}

}  // namespace

LabeledGraph hook_intersection_graph(const HookModel& hm) {
    int n = hm.n();
    for (int i = 1; i < n; ++i)
        if (!(hm.hooks[static_cast<std::size_t>(i - 1)].c < hm.hooks[static_cast<std::size_t>(i)].c))
            throw std::invalid_argument("hook corners must strictly increase with the label");
    LabeledGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (hooks_meet(hm.hooks[static_cast<std::size_t>(i - 1)],
                           hm.hooks[static_cast<std::size_t>(j - 1)]))
                g.add_edge(i, j);
    return g;
}

Word hook_word(const HookModel& hm) {
    int n = hm.n();
    for (int i = 1; i < n; ++i)
        if (!(hm.hooks[static_cast<std::size_t>(i - 1)].c < hm.hooks[static_cast<std::size_t>(i)].c))
            throw std::invalid_argument("hook corners must strictly increase with the label");
    // arm endpoints land on the reading line y = -x + 1 exactly when the arm
    // has length 1: tops at x = c, right ends at x = r
    std::vector<std::pair<Rational, int>> pts;
    for (int i = 1; i <= n; ++i) {
        const Hook& h = hm.hooks[static_cast<std::size_t>(i - 1)];
        Rational up = h.c - h.l, right = h.r - h.c;
        bool up_unit = up == Rational(1), right_unit = right == Rational(1);
        bool up_zero = up == Rational(0), right_zero = right == Rational(0);
        if ((!up_unit && !up_zero) || (!right_unit && !right_zero) || (up_zero && right_zero))
            throw std::invalid_argument("hook model must be unit to read a word off it");
        if (up_unit) pts.emplace_back(h.c, i);
        if (right_unit) pts.emplace_back(h.r, i);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t t = 1; t < pts.size(); ++t)
        if (pts[t - 1].first == pts[t].first)
            throw std::invalid_argument("coincident arm endpoints on the reading line");
    Word w;
    w.reserve(pts.size());
    for (const auto& [x, letter] : pts) w.push_back(letter);
    LabeledGraph meet = hook_intersection_graph(hm);
    if (!twelve_represents(w, meet.complement()))
        throw std::logic_error("hook word does not represent the complement of the diagram");
    if (contains_pattern(w, Word{1, 2, 3}))
        throw std::logic_error("hook word contains 123");
    return w;
}

std::vector<int> co132_lprime(const LabeledGraph& g) {
    std::vector<int> lp(static_cast<std::size_t>(g.n()));
    for (int i = 1; i <= g.n(); ++i) {
        int v = g.smallest_nonneighbor_below(i);
        lp[static_cast<std::size_t>(i - 1)] = v ? v : i;
    }
    return lp;
}

Co132IntervalModel build_co132_interval_model(const LabeledGraph& g) {
    if (auto w = find_any(g, fp132_set()))
        throw PatternError("graph admits no nested interval model: " + w->pattern.name +
                               " occurrence",
                           *w);
    int n = g.n();
    Co132IntervalModel m;
    m.lprime = co132_lprime(g);
    m.l.resize(static_cast<std::size_t>(n));
    m.r.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int lp = m.lprime[static_cast<std::size_t>(i - 1)];
        m.l[static_cast<std::size_t>(i - 1)] = Rational(lp) - Rational(i, n + 1);
        m.r[static_cast<std::size_t>(i - 1)] = Rational(i);
    }
    // the intervals model the complement: i < j are adjacent in g exactly
    // when I_i lies entirely to the left of I_j
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool disjoint = m.l[static_cast<std::size_t>(j - 1)] > m.r[static_cast<std::size_t>(i - 1)];
            if (disjoint != g.edge(i, j))
                throw std::logic_error("interval model disagrees with the graph");
        }
    return m;
}

Word co132_word(const Co132IntervalModel& m) {
    int n = m.n();
    std::vector<std::pair<Rational, int>> pts;
    pts.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (!(m.l[static_cast<std::size_t>(i - 1)] < m.r[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("interval endpoints must satisfy l < r");
        pts.emplace_back(m.l[static_cast<std::size_t>(i - 1)], i);
        pts.emplace_back(m.r[static_cast<std::size_t>(i - 1)], i);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t t = 1; t < pts.size(); ++t)
        if (pts[t - 1].first == pts[t].first)
            throw std::invalid_argument("coincident interval endpoints");
    Word w;
    w.reserve(pts.size());
    for (const auto& [x, letter] : pts) w.push_back(letter);
    // the word lists every endpoint right to left, so letters of disjoint
    // intervals nest and letters of overlapping ones interleave
    LabeledGraph dis(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool disjoint = m.l[static_cast<std::size_t>(j - 1)] > m.r[static_cast<std::size_t>(i - 1)] ||
                            m.l[static_cast<std::size_t>(i - 1)] > m.r[static_cast<std::size_t>(j - 1)];
            if (disjoint) dis.add_edge(i, j);
        }
    if (!twelve_represents(w, dis))
        throw std::logic_error("endpoint word does not represent the disjointness graph");
    if (contains_pattern(w, Word{1, 3, 2}))
        throw std::logic_error("endpoint word contains 132");
    return w;
}

HookModel unit_interval_to_hooks(const std::vector<Rational>& lefts) {
    int n = static_cast<int>(lefts.size());
    for (int v = 2; v <= n; ++v)
        if (lefts[static_cast<std::size_t>(v - 1)] < lefts[static_cast<std::size_t>(v - 2)])
            throw std::invalid_argument("left endpoints must be non-decreasing");
    auto adj = [&](int u, int v) {  // u < v
        return lefts[static_cast<std::size_t>(v - 1)] - lefts[static_cast<std::size_t>(u - 1)] <=
               Rational(1);
    };
    // re-embed with strictly increasing corners: put c_v past every earlier
    // corner and more than 1 past the last non-neighbor, and within 1 of the
    // first neighbor; midpoints keep every adjacency strict
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        if (v == 1) {
            c[0] = Rational(0);
            continue;
        }
        Rational lo = c[static_cast<std::size_t>(v - 2)];
        int u0 = 0, u1 = 0;
        for (int u = 1; u < v; ++u) {
            if (adj(u, v)) {
                if (!u1) u1 = u;
            } else {
                u0 = u;
            }
        }
        if (u0) lo = max(lo, c[static_cast<std::size_t>(u0 - 1)] + 1);
        if (u1) {
            Rational hi = c[static_cast<std::size_t>(u1 - 1)] + 1;
            if (!(lo < hi)) throw std::logic_error("unit interval re-embedding window is empty");
            c[static_cast<std::size_t>(v - 1)] = (lo + hi) / 2;
        } else {
            c[static_cast<std::size_t>(v - 1)] = lo + 1;
        }
    }
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            bool now = c[static_cast<std::size_t>(v - 1)] - c[static_cast<std::size_t>(u - 1)] <=
                       Rational(1);
            if (now != adj(u, v)) throw std::logic_error("re-embedding changed an adjacency");
        }
    HookModel hm;
    hm.unit = true;
    hm.hooks.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        const Rational& cv = c[static_cast<std::size_t>(v - 1)];
        hm.hooks.push_back({cv, cv - 1, cv + 1});
    }
    // full unit hooks meet exactly when their corners are within 1
    LabeledGraph meet = hook_intersection_graph(hm);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (meet.edge(u, v) != adj(u, v))
                throw std::logic_error("hook diagram disagrees with the interval graph");
    return hm;
}

}  // namespace repwords
