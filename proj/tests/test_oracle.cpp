#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "melonic/families.hpp"
#include "melonic/oracle.hpp"
#include "support.hpp"

using namespace melonic;

namespace {

MelonicConstruction mc(std::initializer_list<Stage> s) { return MelonicConstruction{std::vector<Stage>(s)}; }

Graph banana(int m) { return realize_graph(mc({{{m}, 0, 1}})); }

// disjoint union with b's vertex 0 glued onto a's vertex va
Graph join(const Graph& a, int va, const Graph& b) {
    Graph g = a;
    auto map = [&](int v) { return v == 0 ? va : a.vertex_count + v - 1; };
    for (const auto& [u, v] : b.edges) g.edges.emplace_back(map(u), map(v));
    g.vertex_count = a.vertex_count + b.vertex_count - 1;
    return g;
}

Graph split_edge(const Graph& a, int e) {
    Graph g = a;
    const int mid = g.vertex_count++;
    const auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    g.edges[static_cast<std::size_t>(e)] = {u, mid};
    g.edges.emplace_back(mid, v);
    return g;
}

}  // namespace

TEST_CASE("Kirchhoff polynomials") {
    KirchhoffPoly k = kirchhoff(realize_graph(MelonicConstruction{}));
    CHECK(k.monomials == std::vector<std::uint64_t>{0});
    k = kirchhoff(banana(2));
    CHECK(k.monomials == std::vector<std::uint64_t>{0b01, 0b10});
    k = kirchhoff(banana(3));
    CHECK(k.monomials == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
    CHECK(k.degree() == 2);
    CHECK_THROWS(kirchhoff(Graph{3, {{0, 1}}}));
}

TEST_CASE("finite field tables") {
    for (int q : {2, 3, 4, 5}) {
        const FiniteField& f = finite_field(q);
        for (int a = 0; a < q; ++a) {
            bool has_inverse = a == 0;
            for (int b = 0; b < q; ++b) {
                const auto ua = static_cast<std::uint8_t>(a), ub = static_cast<std::uint8_t>(b);
                REQUIRE(f.plus(ua, ub) == f.plus(ub, ua));
                REQUIRE(f.times(ua, ub) == f.times(ub, ua));
                has_inverse = has_inverse || f.times(ua, ub) == 1;
                for (int c = 0; c < q; ++c) {
                    const auto uc = static_cast<std::uint8_t>(c);
                    REQUIRE(f.times(ua, f.plus(ub, uc)) == f.plus(f.times(ua, ub), f.times(ua, uc)));
                    REQUIRE(f.times(f.times(ua, ub), uc) == f.times(ua, f.times(ub, uc)));
                    REQUIRE(f.plus(f.plus(ua, ub), uc) == f.plus(ua, f.plus(ub, uc)));
                }
            }
            REQUIRE(has_inverse);
        }
    }
    // characteristic 2 in F_4
    for (int a = 0; a < 4; ++a) CHECK(finite_field(4).plus(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(a)) == 0);
    CHECK_THROWS(finite_field(7));
}

TEST_CASE("point counts") {
    CHECK(point_count(realize_graph(MelonicConstruction{}), 2) == 2);
    CHECK(point_count(banana(3), 2) == 4);
    CHECK(point_count(banana(2), 3) == 6);
    CHECK_THROWS_AS(point_count(banana(3), 2, 7), BudgetExceeded);
    const Graph g = realize_graph(gamma_construction(2));
    CHECK(point_count(g, 3, kDefaultPointBudget, 1) == point_count(g, 3, kDefaultPointBudget, 4));
}

TEST_CASE("verification against classes") {
    const VerifyReport r = verify_class(mc({{{1, 3, 1}, 0, 1}}), class_of(mc({{{1, 3, 1}, 0, 1}})), {2});
    CHECK(r.ok);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].got == 16);
    CHECK(r.checks[0].expected == 16);

    const VerifyReport bad = verify_class(mc({{{3}, 0, 1}}), banana_class(4), {2, 3});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.edges_ok);
    CHECK(bad.failure.find("q=3") != std::string::npos);

    // q = 4 and 5 on a few small graphs
    for (const auto& c : {mc({{{4}, 0, 1}}), mc({{{2, 2}, 0, 1}, {{1, 2}, 1, 1}}), gamma_construction(1)})
        CHECK(verify_class(c, class_of(c), {4, 5}).ok);
}

TEST_CASE("every construction up to 8 edges") {
    std::size_t n = 0;
    enumerate_reduced(8, [&](const MelonTree& t) {
        const auto c = from_tree(t);
        const VerifyReport r = verify_class(c, class_of(t), {2, 3});
        INFO(r.failure);
        REQUIRE(r.ok);
        ++n;
    });
    CHECK(n > 0);
}

TEST_CASE("melon-tadpole graph") {
    const auto mel = mc({{{4}, 0, 1}, {{1, 3, 1}, 1, 1}});
    const Graph g = graft_bisected(banana(4), 0, realize_graph(mel), 0);
    const GrothendieckClass u = join_at_vertex({subdivide(banana_class(4), 1), subdivide(class_of(mel), 1)});
    const VerifyReport r = verify_class(g, u, {2});
    INFO(r.failure);
    CHECK(r.ok);
}

TEST_CASE("joins multiply and subdivisions scale by q") {
    std::vector<Graph> pieces;
    std::vector<GrothendieckClass> classes;
    std::mt19937_64 rng(8);
    enumerate_reduced(5, [&](const MelonTree& t) {
        pieces.push_back(realize_graph(from_tree(t)));
        classes.push_back(class_of(t));
    });
    int pairs = 0;
    for (std::size_t i = 0; i < pieces.size() && pairs < 20; ++i)
        for (std::size_t j = i; j < pieces.size() && pairs < 20; j += 3) {
            if (pieces[i].edge_count() + pieces[j].edge_count() > 9) continue;
            const Graph g = join(pieces[i], static_cast<int>(rng() % static_cast<unsigned>(pieces[i].vertex_count)), pieces[j]);
            for (int q : {2, 3})
                REQUIRE(point_count(g, q) == point_count(pieces[i], q) * point_count(pieces[j], q));
            ++pairs;
        }
    CHECK(pairs == 20);
    for (int i = 0; i < 20; ++i) {
        const Graph& g = pieces[static_cast<std::size_t>(i) % pieces.size()];
        if (g.edge_count() > 7) continue;
        const Graph h = split_edge(g, static_cast<int>(rng() % static_cast<unsigned>(g.edge_count())));
        for (int q : {2, 3}) REQUIRE(point_count(h, q) == point_count(g, q) * static_cast<std::uint64_t>(q));
    }
}

TEST_CASE("matrix-tree cross-check") {
    CHECK(spanning_tree_count(banana(5)) == 5);
    CHECK(spanning_tree_count(realize_graph(MelonicConstruction{})) == 1);
    CHECK(spanning_tree_count(Graph{3, {{0, 1}}}) == 0);
    enumerate_reduced(10, [&](const MelonTree& t) {
        const Graph g = realize_graph(from_tree(t));
        const KirchhoffPoly k = kirchhoff(g);
        REQUIRE(static_cast<std::int64_t>(k.monomials.size()) == spanning_tree_count(g));
        REQUIRE(k.degree() == g.loop_number());
    });
}
