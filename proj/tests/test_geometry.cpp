#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "repwords/construct.hpp"
#include "repwords/geometry.hpp"
#include "test_helpers.hpp"

using namespace repwords;
using namespace repwords::testing;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

bool same_model(const MptModel& a, const MptModel& b) {
    if (a.n() != b.n()) return false;
    for (int i = 0; i < a.n(); ++i)
        if (!(a.intervals[i].l == b.intervals[i].l && a.intervals[i].p == b.intervals[i].p &&
              a.intervals[i].r == b.intervals[i].r))
            return false;
    return true;
}

bool same_hooks(const HookModel& a, const HookModel& b) {
    if (a.n() != b.n()) return false;
    for (int i = 0; i < a.n(); ++i)
        if (!(a.hooks[i].c == b.hooks[i].c && a.hooks[i].l == b.hooks[i].l &&
              a.hooks[i].r == b.hooks[i].r))
            return false;
    return true;
}

// all 3n coordinates of a model in slot order
std::vector<Rational> slots(const MptModel& m) {
    std::vector<Rational> out;
    for (const PointedInterval& q : m.intervals) {
        out.push_back(q.l);
        out.push_back(q.p);
        out.push_back(q.r);
    }
    return out;
}

// strict/equal relations between every slot pair are unchanged
bool order_preserved(const MptModel& a, const MptModel& b) {
    std::vector<Rational> x = slots(a), y = slots(b);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            auto cx = x[i] <=> x[j];
            auto cy = y[i] <=> y[j];
            if (cx != cy) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("marked-point model of the 5-vertex complement example, exact coordinates") {
    LabeledGraph h = example5().complement();  // edges 12 15 25 35 45
    MptModel m = build_mpt_model(h);
    REQUIRE(m.n() == 5);
    const Rational l[] = {rat(1), rat(1, 3), rat(3), rat(4), rat(5, 6)};
    const Rational r[] = {rat(31, 6), rat(16, 3), rat(11, 2), rat(17, 3), rat(5)};
    for (int i = 0; i < 5; ++i) {
        CHECK(m.intervals[i].l == l[i]);
        CHECK(m.intervals[i].p == rat(i + 1));
        CHECK(m.intervals[i].r == r[i]);
    }
    CHECK(validate_mpt(m, h));

    // corrupting one endpoint must be caught
    MptModel bad = m;
    bad.intervals[0].r = rat(2);
    CHECK(!validate_mpt(bad, h));
}

TEST_CASE("model construction refuses graphs with the co-obstruction") {
    // path 1-2-3 complemented gives the single-edge graph whose complement
    // has FP_COCOMP, the first member of the co-obstruction set
    LabeledGraph h = LabeledGraph::from_edges(3, {{1, 3}});
    CHECK_THROWS_AS(build_mpt_model(h), PatternError);
    try {
        build_mpt_model(h);
    } catch (const PatternError& e) {
        CHECK(e.witness.pattern.name == "FP_COCOMP");
        CHECK(e.witness.vertices == std::vector<int>{1, 2, 3});
    }
}

TEST_CASE("one_sided_family walks ascending and rejects containment") {
    MptModel m = build_mpt_model(example5().complement());
    std::vector<SidedInterval> fam = one_sided_family(m);
    REQUIRE(!fam.empty());
    for (std::size_t i = 1; i < fam.size(); ++i) {
        CHECK(fam[i - 1].a < fam[i].a);
        CHECK(fam[i - 1].b < fam[i].b);  // proper: strictly staggered on both ends
    }
    for (const SidedInterval& s : fam) CHECK(s.a < s.b);

    MptModel nested;
    nested.intervals = {{rat(0), rat(5), rat(5)}, {rat(1), rat(2), rat(2)}};
    CHECK_THROWS_AS(one_sided_family(nested), std::invalid_argument);
    CHECK_THROWS_AS(unit_adjust(nested), std::invalid_argument);
}

TEST_CASE("unit_adjust pinned deformation and invariants") {
    MptModel stag;
    stag.intervals = {{rat(0), rat(2), rat(2)}, {rat(1), rat(4), rat(4)}};
    MptModel u = unit_adjust(stag);
    CHECK(u.intervals[0].l == rat(0));
    CHECK(u.intervals[0].p == rat(1));
    CHECK(u.intervals[1].l == rat(1, 2));
    CHECK(u.intervals[1].p == rat(3, 2));
    CHECK(order_preserved(stag, u));

    MptModel m = build_mpt_model(example5().complement());
    MptModel mu = unit_adjust(m);
    CHECK(order_preserved(m, mu));
    CHECK(validate_mpt(mu, example5().complement()));
    for (const SidedInterval& s : one_sided_family(mu)) CHECK(s.b - s.a == rat(1));
    // idempotent on already-unit models
    CHECK(same_model(unit_adjust(mu), mu));
}

TEST_CASE("hook transform of the example model matches the drawn diagram") {
    MptModel mu = unit_adjust(build_mpt_model(example5().complement()));
    HookModel hk = mpt_to_hook(mu);
    CHECK(hk.unit);
    REQUIRE(hk.n() == 5);
    // corners strictly ascending, vertex order = corner order
    for (int i = 1; i < 5; ++i) CHECK(hk.hooks[i - 1].c < hk.hooks[i].c);
    // arm shape per vertex: right stick, full hook, right, right, top stick
    auto has_top = [&](int i) { return hk.hooks[i].l < hk.hooks[i].c; };
    auto has_right = [&](int i) { return hk.hooks[i].c < hk.hooks[i].r; };
    CHECK((!has_top(0) && has_right(0)));
    CHECK((has_top(1) && has_right(1)));
    CHECK((!has_top(2) && has_right(2)));
    CHECK((!has_top(3) && has_right(3)));
    CHECK((has_top(4) && !has_right(4)));

    CHECK(hook_intersection_graph(hk) == example5().complement());
    CHECK(hook_word(hk) == parse_word("432152"));
}

TEST_CASE("mpt/hook transforms invert each other") {
    MptModel m = build_mpt_model(example5().complement());
    CHECK(same_model(hook_to_mpt(mpt_to_hook(m)), m));
    MptModel mu = unit_adjust(m);
    HookModel hk = mpt_to_hook(mu);
    CHECK(same_hooks(mpt_to_hook(hook_to_mpt(hk)), hk));

    // edgeless input yields stick-only intervals; still a fixed point
    MptModel pts = build_mpt_model(LabeledGraph(3));
    CHECK(same_model(hook_to_mpt(mpt_to_hook(pts)), pts));
}

TEST_CASE("hook intersection uses closed point sets") {
    // horizontal stick through a vertical stick: crossing point only
    HookModel two;
    two.hooks = {{rat(0), rat(0), rat(2)}, {rat(1), rat(-1), rat(1)}};
    LabeledGraph g = hook_intersection_graph(two);
    CHECK(g.edge(1, 2));

    // far translates do not touch
    HookModel far_apart;
    far_apart.hooks = {{rat(0), rat(-1), rat(1)}, {rat(5), rat(4), rat(6)}};
    CHECK(hook_intersection_graph(far_apart).edge_count() == 0);

    CHECK_THROWS_AS(hook_intersection_graph(HookModel{{{rat(1), rat(0), rat(1)},
                                                       {rat(1), rat(1), rat(2)}},
                                                      false}),
                    std::invalid_argument);  // coincident corners
}

TEST_CASE("hook_word multiplicity equals the number of free endpoints") {
    HookModel two;
    two.unit = true;
    two.hooks = {{rat(0), rat(-1), rat(1)},   // full hook: letter appears twice
                 {rat(5), rat(4), rat(5)}};   // vertical stick: once
    CHECK(hook_intersection_graph(two).edge_count() == 0);
    Word w = hook_word(two);
    CHECK(w == parse_word("211"));
    CHECK(twelve_represents(w, complete_graph(2)));  // complement of the edgeless diagram

    // coincident reading positions are rejected
    HookModel clash;
    clash.unit = true;
    clash.hooks = {{rat(1), rat(0), rat(2)}, {rat(2), rat(1), rat(2)}};
    CHECK_THROWS_AS(hook_word(clash), std::invalid_argument);

    HookModel not_unit;
    not_unit.hooks = {{rat(0), rat(-2), rat(0)}};
    CHECK_THROWS_AS(hook_word(not_unit), std::invalid_argument);
}

TEST_CASE("segment intersection on exact rationals") {
    auto seg = [](long x1, long y1, long x2, long y2) {
        return Segment{rat(x1), rat(y1), rat(x2), rat(y2)};
    };
    CHECK(segments_intersect(seg(0, 0, 2, 0), seg(1, -1, 1, 1)));   // proper crossing
    CHECK(segments_intersect(seg(0, 0, 1, 0), seg(1, 0, 1, 5)));    // endpoint touch
    CHECK(segments_intersect(seg(0, 0, 3, 0), seg(2, 0, 5, 0)));    // collinear overlap
    CHECK(!segments_intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));   // parallel apart
    CHECK(!segments_intersect(seg(0, 0, 1, 0), seg(2, 0, 3, 0)));   // collinear apart
    Segment tiny{Rational(1, 3), rat(0), Rational(1, 3), rat(0)};   // a single point
    CHECK(segments_intersect(tiny, seg(0, 0, 1, 0)));
    CHECK_THROWS_AS(segments_intersect(seg(0, 0, 1, 1), seg(0, 0, 1, 0)),
                    std::invalid_argument);  // diagonal segments are out of scope
}

TEST_CASE("left-anchor vector and interval model for the 132 construction") {
    LabeledGraph g = example_co_interval6();
    CHECK(co132_lprime(g) == std::vector<int>{1, 1, 2, 4, 2, 3});
    CHECK(co132_lprime(LabeledGraph(4)) == std::vector<int>{1, 1, 1, 1});
    CHECK(co132_lprime(complete_graph(4)) == std::vector<int>{1, 2, 3, 4});

    // the same graph carries the four-point obstruction, so model building
    // must refuse it even though the anchor formula itself is total
    CHECK_THROWS_AS(build_co132_interval_model(g), PatternError);
    try {
        build_co132_interval_model(g);
    } catch (const PatternError& e) {
        CHECK(e.witness.pattern.name == "FP132.b");
        CHECK(e.witness.vertices == std::vector<int>{2, 3, 5, 6});
    }

    Co132IntervalModel k = build_co132_interval_model(complete_graph(4));
    for (int i = 1; i <= 4; ++i) {
        CHECK(k.r[i - 1] == rat(i));
        CHECK(k.l[i - 1] == rat(i) - Rational(i, 5));
    }
    // disjoint intervals pairwise: r_i < l_{i+1}
    for (int i = 1; i < 4; ++i) CHECK(k.r[i - 1] < k.l[i]);
    CHECK(co132_word(k) == parse_word("44332211"));

    Co132IntervalModel e = build_co132_interval_model(LabeledGraph(4));
    Word we = co132_word(e);
    CHECK(graph_from_word(we) == LabeledGraph(4));
    CHECK(avoids(we, parse_word("132")));
}

TEST_CASE("132 interval route agrees with the full decision on all small graphs") {
    for (int n = 1; n <= 4; ++n)
        for (const LabeledGraph& g : all_graphs(n)) {
            if (find_any(g, fp132_set()).has_value()) continue;
            Word w = co132_word(build_co132_interval_model(g));
            CHECK(twelve_represents(w, g));
            CHECK(avoids(w, parse_word("132")));
            CHECK(represent_132(g).word == w);
        }
}

TEST_CASE("unit interval input re-embeds as unit hooks with the same graph") {
    HookModel p3 = unit_interval_to_hooks({rat(0), rat(1), rat(2)});
    CHECK(p3.unit);
    CHECK(hook_intersection_graph(p3) == path_graph(3));

    HookModel k3 = unit_interval_to_hooks({rat(0), rat(1, 3), rat(2, 3)});
    CHECK(hook_intersection_graph(k3) == complete_graph(3));

    HookModel mix = unit_interval_to_hooks({rat(0), rat(1, 2), rat(1), rat(2)});
    CHECK(hook_intersection_graph(mix) ==
          LabeledGraph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}));

    CHECK_THROWS_AS(unit_interval_to_hooks({rat(1), rat(0)}), std::invalid_argument);
}

TEST_CASE("geometry pipeline end to end on every co-obstruction-free graph, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const LabeledGraph& h : all_graphs(n)) {
            if (find_any(h, cfp123_set()).has_value()) {
                CHECK_THROWS_AS(build_mpt_model(h), PatternError);
                continue;
            }
            MptModel m = build_mpt_model(h);
            CHECK(validate_mpt(m, h));
            MptModel mu = unit_adjust(m);
            CHECK(validate_mpt(mu, h));
            CHECK(order_preserved(m, mu));
            HookModel hk = mpt_to_hook(mu);
            CHECK(hook_intersection_graph(hk) == h);
            Word w = hook_word(hk);
            CHECK(twelve_represents(w, h.complement()));
            CHECK(avoids(w, parse_word("123")));
            CHECK(same_hooks(mpt_to_hook(hook_to_mpt(hk)), hk));
            CHECK(same_model(hook_to_mpt(mpt_to_hook(m)), m));
        }
}
