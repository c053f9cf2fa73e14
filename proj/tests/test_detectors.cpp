#include "doctest.h"

#include "occult/detectors.hpp"
#include "occult/generators.hpp"
#include "oracles.hpp"

using namespace occult;

TEST_CASE("contains_clique") {
    CHECK(contains_clique(complete(5), 5).has_value());
    for (int s : {1, 2, 3, 4})
        CHECK_FALSE(contains_clique(occultation(s).graph, 3).has_value());
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = oracles::random_graph(12, 28, seed);
        for (int t : {2, 3, 4})
            CHECK(contains_clique(g, t).has_value() == oracles::subset_has_clique(g, t));
    }
    // witnesses are actual cliques
    Graph g = oracles::random_graph(10, 30, 99);
    if (auto w = contains_clique(g, 3)) {
        for (std::size_t i = 0; i < w->size(); ++i)
            for (std::size_t j = i + 1; j < w->size(); ++j)
                CHECK(g.has_edge((*w)[i], (*w)[j]));
    }
}

TEST_CASE("contains_biclique") {
    CHECK(contains_biclique(complete_bipartite(3, 3), 3).has_value());
    for (int s : {1, 2, 3, 4})
        CHECK_FALSE(contains_biclique(occultation(s).graph, 3).has_value());
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracles::random_graph(11, 26, seed * 7);
        for (int t : {2, 3})
            CHECK(contains_biclique(g, t).has_value() == oracles::subset_has_biclique(g, t));
    }
    // witness: both sides stable, complete across, disjoint
    Graph g = complete_bipartite(4, 4);
    auto w = contains_biclique(g, 3);
    REQUIRE(w.has_value());
    CHECK(is_stable_set(g, w->first));
    CHECK(is_stable_set(g, w->second));
    for (VertexId u : w->first)
        for (VertexId v : w->second) CHECK(g.has_edge(u, v));
}

TEST_CASE("perforation verdicts") {
    // forests are perforated for every (c,o)
    Graph forest = Graph::with_vertex_count(6);
    forest.add_edge(0, 1);
    forest.add_edge(1, 2);
    forest.add_edge(3, 4);
    for (int c : {1, 2})
        for (int o : {1, 2}) {
            auto v = is_perforated(forest, c, o, 10000);
            CHECK(v.kind == PerforationVerdict::Kind::Perforated);
        }

    // two disjoint anticomplete C_4's are not 2-perforated
    Graph two_c4 = Graph::with_vertex_count(8);
    for (int b : {0, 4})
        for (int i = 0; i < 4; ++i) two_c4.add_edge(b + i, b + (i + 1) % 4);
    auto v = is_perforated(two_c4, 2, 1, 10000);
    REQUIRE(v.kind == PerforationVerdict::Kind::NotPerforated);
    REQUIRE(v.witness.size() == 2);
    CHECK_FALSE(check_cycle_packing(two_c4, v.witness, 2, 1).has_value());

    // occultation(3) is 2-perforated
    auto occ = occultation(3);
    auto vo = is_perforated(occ.graph, 2, 1, 1'000'000);
    CHECK(vo.kind == PerforationVerdict::Kind::Perforated);

    // tiny budget yields indeterminate on a cycle-rich graph
    auto cut = is_perforated(wall(4), 2, 1, 20);
    CHECK(cut.kind == PerforationVerdict::Kind::Indeterminate);

    // monotonicity in o: perforated stays perforated as o grows
    for (int o : {1, 2, 3}) {
        auto vv = is_perforated(occ.graph, 2, o, 1'000'000);
        CHECK(vv.kind == PerforationVerdict::Kind::Perforated);
    }

    // c-perforated equals (c,1)-perforated by definition; spot-check c = 1
    Graph c4 = Graph::with_vertex_count(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK(is_perforated(c4, 1, 1, 1000).kind == PerforationVerdict::Kind::NotPerforated);
    CHECK(is_perforated(c4, 1, 3, 1000).kind == PerforationVerdict::Kind::Perforated);
}

TEST_CASE("perforation agrees with the brute-force packing decision") {
    // End-to-end dual route: subset cycle enumeration plus exhaustive packing
    // search versus the budgeted detector, across a random corpus.
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = oracles::random_graph(8 + static_cast<int>(seed % 2), 13, seed * 5);
        for (int c : {1, 2})
            for (int o : {1, 2}) {
                auto verdict = is_perforated(g, c, o, 1'000'000);
                bool expected = oracles::brute_force_perforated(g, c, o);
                CAPTURE(seed);
                CAPTURE(c);
                CAPTURE(o);
                REQUIRE(verdict.kind != PerforationVerdict::Kind::Indeterminate);
                CHECK((verdict.kind == PerforationVerdict::Kind::Perforated) == expected);
                if (verdict.kind == PerforationVerdict::Kind::NotPerforated)
                    CHECK_FALSE(check_cycle_packing(g, verdict.witness, c, o).has_value());
            }
    }
}

TEST_CASE("check_cycle_packing rejects bad witnesses") {
    Graph two_c4 = Graph::with_vertex_count(8);
    for (int b : {0, 4})
        for (int i = 0; i < 4; ++i) two_c4.add_edge(b + i, b + (i + 1) % 4);
    CycleWitness a = CycleWitness::canonical({0, 1, 2, 3});
    CycleWitness b = CycleWitness::canonical({4, 5, 6, 7});
    CHECK_FALSE(check_cycle_packing(two_c4, {a, b}, 2, 1).has_value());
    CHECK(check_cycle_packing(two_c4, {a}, 2, 1).has_value());       // count
    CHECK(check_cycle_packing(two_c4, {a, a}, 2, 1).has_value());    // disjointness
    CHECK(check_cycle_packing(two_c4, {a, b}, 2, 3).has_value());    // length

    Graph joined = two_c4;
    joined.add_edge(0, 4);
    auto bad = check_cycle_packing(joined, {a, b}, 2, 1);
    REQUIRE(bad.has_value());
    CHECK(bad->clause == "anticompleteness");
}

TEST_CASE("strong block verification") {
    // theta graph: two vertices joined by 2 internally disjoint paths
    Graph theta = Graph::with_vertex_count(6);
    theta.add_edge(0, 2);
    theta.add_edge(2, 1);
    theta.add_edge(0, 3);
    theta.add_edge(3, 4);
    theta.add_edge(4, 1);
    StrongBlockWitness w;
    w.b = {0, 1};
    w.paths[{0, 1}] = {PathWitness{{0, 2, 1}}, PathWitness{{0, 3, 4, 1}}};
    CHECK_FALSE(verify_strong_block(theta, 2, w).has_value());

    // K_k with single-edge paths cannot reach k >= 2 paths per pair
    Graph k3 = complete(3);
    StrongBlockWitness wk;
    wk.b = {0, 1, 2};
    wk.paths[{0, 1}] = {PathWitness{{0, 1}}};
    wk.paths[{0, 2}] = {PathWitness{{0, 2}}};
    wk.paths[{1, 2}] = {PathWitness{{1, 2}}};
    auto bad = verify_strong_block(k3, 2, wk);
    REQUIRE(bad.has_value());
    CHECK(bad->clause == "path-count");

    // two collections sharing an internal vertex violate the cross condition
    Graph g = Graph::with_vertex_count(8);
    g.add_edge(0, 3);
    g.add_edge(3, 1);  // path 0-3-1
    g.add_edge(0, 4);
    g.add_edge(4, 1);  // path 0-4-1
    g.add_edge(0, 5);
    g.add_edge(5, 2);  // path 0-5-2
    g.add_edge(0, 6);
    g.add_edge(6, 2);  // path 0-6-2
    g.add_edge(1, 7);
    g.add_edge(7, 2);  // path 1-7-2
    StrongBlockWitness wc;
    wc.b = {0, 1, 2};
    wc.paths[{0, 1}] = {PathWitness{{0, 3, 1}}, PathWitness{{0, 4, 1}}};
    wc.paths[{0, 2}] = {PathWitness{{0, 5, 2}}, PathWitness{{0, 6, 2}}};
    wc.paths[{1, 2}] = {PathWitness{{1, 7, 2}}, PathWitness{{1, 3, 0, 5, 2}}};
    auto bad2 = verify_strong_block(g, 2, wc);
    REQUIRE(bad2.has_value());  // the long {1,2}-path reuses 0, 3 and 5
    CHECK(bad2->clause == "cross-disjointness");

    // constructed valid witnesses: |B| = k vertices pairwise joined by k
    // internally disjoint 2-paths through fresh midpoints
    for (int k : {2, 3}) {
        Graph h = Graph::with_vertex_count(k);
        StrongBlockWitness wr;
        VertexId next = k;
        for (int i = 0; i < k; ++i) wr.b.push_back(i);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                std::vector<PathWitness> paths;
                for (int p = 0; p < k; ++p) {
                    h.add_vertex(next);
                    h.add_edge(i, next);
                    h.add_edge(next, j);
                    paths.push_back(PathWitness{{i, next, j}});
                    ++next;
                }
                wr.paths[{i, j}] = paths;
            }
        CHECK_FALSE(verify_strong_block(h, k, wr).has_value());
    }
}

TEST_CASE("d-stable sets") {
    Graph g = oracles::random_graph(10, 15, 3);
    CHECK(is_d_stable(g, {0}, 3));  // singleton
    Graph pair = Graph::with_vertex_count(2);
    pair.add_edge(0, 1);
    CHECK_FALSE(is_d_stable(pair, {0, 1}, 1));
    // agreement with pairwise BFS distances
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph h = oracles::random_graph(10, 14, seed);
        std::vector<VertexId> s{0, 3, 7};
        for (int d : {1, 2, 3}) {
            bool expected = true;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto dist = bfs_distances(h, s[i]);
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (dist.at(s[j]) >= 0 && dist.at(s[j]) <= d) expected = false;
            }
            CHECK(is_d_stable(h, s, d) == expected);
        }
    }
}

TEST_CASE("constellation validator names violations") {
    auto gen = constellation(3, 3, {3, 4}, 8);
    CHECK_FALSE(validate_constellation(gen.graph, gen.constellation, true).has_value());
    // remove one S-to-path edge: the violation names the universal-neighbor
    // clause
    Constellation broken = gen.constellation;
    VertexId x = broken.s[0];
    Graph g2 = Graph::with_vertex_count(static_cast<int>(gen.graph.vertex_count()));
    const PathWitness& p0 = broken.paths.paths[0];
    bool removed = false;
    for (const Edge& e : gen.graph.edge_list()) {
        bool is_x_p0 = (e.first == x && p0.contains(e.second)) ||
                       (e.second == x && p0.contains(e.first));
        if (is_x_p0 && !removed) {
            removed = true;
            continue;  // drop exactly one edge
        }
        g2.add_edge(e.first, e.second);
    }
    REQUIRE(removed);
    auto bad = validate_constellation(g2, broken, true);
    if (bad) CHECK(bad->clause == "universal-neighbor");
}

TEST_CASE("patch and match validators") {
    // star of 4 paths of length >= 3 into X, anchored per (P1)-(P3)
    Graph g;
    VertexId next = 0;
    auto fresh = [&] { g.add_vertex(next); return next++; };
    VertexId z = fresh();
    std::vector<VertexId> x_side;
    Patch patch;
    patch.center = z;
    for (int i = 0; i < 4; ++i) {
        PathWitness path;
        for (int k = 0; k <= 3; ++k) {
            VertexId v = fresh();
            if (k > 0) g.add_edge(path.verts.back(), v);
            path.verts.push_back(v);
        }
        g.add_edge(z, path.verts.back());  // y_L = far end
        x_side.push_back(path.verts.front());
        patch.paths.paths.push_back(std::move(path));
    }
    CHECK_FALSE(validate_patch(g, x_side, patch, 3).has_value());

    // a path whose interior re-enters X violates (P3)
    std::vector<VertexId> x_bigger = x_side;
    x_bigger.push_back(patch.paths.paths[0].verts[1]);
    auto bad = validate_patch(g, x_bigger, patch, 3);
    REQUIRE(bad.has_value());
    CHECK(bad->clause == "P3");

    // match: both ends in X, interiors out of X
    Match m;
    m.paths.paths.push_back(patch.paths.paths[0]);
    m.paths.paths.push_back(patch.paths.paths[1]);
    std::vector<VertexId> mx;
    for (const auto& p : m.paths.paths) {
        mx.push_back(p.verts.front());
        mx.push_back(p.verts.back());
    }
    CHECK_FALSE(validate_match(g, mx, m, 3).has_value());
    // (M2): interior touching X
    std::vector<VertexId> mx_bad = mx;
    mx_bad.push_back(m.paths.paths[0].verts[1]);
    auto bad2 = validate_match(g, mx_bad, m, 3);
    REQUIRE(bad2.has_value());
    CHECK(bad2->clause == "M2");
    // (M1): length floor
    auto bad3 = validate_match(g, mx, m, 5);
    REQUIRE(bad3.has_value());
    CHECK(bad3->clause == "M1");
}

TEST_CASE("gemini validator rejects adjacency between private sides") {
    auto gen = gemini(2, 1, 40);
    // adding an edge between the two paths breaks (G2)
    Graph broken = gen.graph;
    broken.add_edge(gen.gemini.first.l.verts[1], gen.gemini.second.l.verts[1]);
    auto bad = validate_gemini(broken, gen.gemini);
    REQUIRE(bad.has_value());
    CHECK(bad->clause == "G2");
}
