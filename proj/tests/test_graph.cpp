#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace gdom;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

}  // namespace

TEST(Bitset, BasicOpsAcrossWordBoundary) {
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    EXPECT_EQ(b.count(), 3u);
    EXPECT_EQ(b.to_vector(), (std::vector<Vertex>{0, 64, 129}));
    EXPECT_EQ(b.find_next(1), 64u);
    b.flip();
    EXPECT_EQ(b.count(), 127u);  // trailing bits stay clear
    b.set_all();
    EXPECT_TRUE(b.all());
    b.reset_all();
    EXPECT_TRUE(b.none());
}

TEST(Bitset, CountingHelpers) {
    Bitset a(70), b(70);
    for (Vertex v : {1u, 5u, 66u}) a.set(v);
    for (Vertex v : {5u, 66u, 69u}) b.set(v);
    EXPECT_EQ(a.count_and(b), 2u);
    EXPECT_EQ(a.count_and_not(b), 1u);
    EXPECT_TRUE(a.intersects(b));
    EXPECT_FALSE(a.is_subset_of(b));
    EXPECT_TRUE((a & b).is_subset_of(b));
    EXPECT_EQ((a - b).to_vector(), std::vector<Vertex>{1});
    EXPECT_EQ((a ^ b).count(), 2u);
}

TEST(BuildGraph, PathFromEdges) {
    const Edge e[] = {{0, 1}, {1, 2}, {2, 3}};
    Graph g = build_graph(4, e);
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BuildGraph, DuplicateCollapsed) {
    Graph g(3, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraph, RejectsSelfLoopWithPair) {
    try {
        Graph g(2, {{0, 0}});
        FAIL() << "self-loop accepted";
    } catch (const GraphError& e) {
        EXPECT_NE(std::string(e.what()).find("(0,0)"), std::string::npos) << e.what();
    }
}

TEST(BuildGraph, RejectsOutOfRange) { EXPECT_THROW(Graph(3, {{0, 3}}), GraphError); }

TEST(ComplementNeighbors, P4EndVertex) {
    EXPECT_EQ(fixtures::p4().complement_neighbors(0).to_vector(), (std::vector<Vertex>{2, 3}));
}

TEST(ComplementNeighbors, CompleteGraphIsEmpty) {
    Graph k4 = gen_complete(4);
    for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(k4.complement_neighbors(v).none());
}

TEST(ComplementNeighbors, PetersenVertexZero) {
    EXPECT_EQ(gen_petersen().complement_neighbors(0).to_vector(), (std::vector<Vertex>{2, 3, 6, 7, 8, 9}));
}

TEST(ComplementNeighbors, OutOfRange) { EXPECT_THROW(fixtures::p4().complement_neighbors(4), GraphError); }

TEST(Graph, NeighborhoodsPartitionVertexSet) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(3 + seed % 17, 0.4, seed);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            Bitset n = g.neighbors(v), c = g.complement_neighbors(v);
            EXPECT_FALSE(n.intersects(c));
            EXPECT_FALSE(n.test(v) || c.test(v));
            EXPECT_EQ(n.count() + c.count() + 1, g.vertex_count());
        }
    }
}

TEST(Graph, MaterializedComplementMatchesView) {
    Graph g = gen_petersen();
    Graph c = g.materialize_complement();
    EXPECT_EQ(c.edge_count(), 45u - 15u);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(c.neighbors(v), g.complement_neighbors(v));
    EXPECT_EQ(c.materialize_complement(), g);
}

TEST(Graph, Degrees) {
    Graph g = fixtures::p4();
    EXPECT_EQ(g.max_degree(), 2u);
    EXPECT_EQ(g.min_degree(), 1u);
    EXPECT_EQ(g.max_degree(Side::complement), 2u);
    EXPECT_EQ(g.degree(0, Side::complement), 2u);
}

TEST(VertexSet, KeepsInsertionOrder) {
    VertexSet s(5, {3, 1, 4});
    EXPECT_FALSE(s.insert(1));
    EXPECT_EQ(fixtures::order_of(s), (std::vector<Vertex>{3, 1, 4}));
    EXPECT_EQ(s.sorted(), (std::vector<Vertex>{1, 3, 4}));
    EXPECT_TRUE(s.erase(1));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(to_string(s), "{3,4}");
    EXPECT_TRUE(s.same_members(VertexSet(5, {4, 3})));
    EXPECT_FALSE(s == VertexSet(5, {4, 3}));
    EXPECT_THROW(s.insert(5), GraphError);
}

TEST(Metrics, P4) {
    auto m = metrics(fixtures::p4());
    EXPECT_EQ(m.radius, 2u);
    EXPECT_EQ(m.diameter, 3u);
    EXPECT_EQ(m.support_count, 2u);
    EXPECT_EQ(eccentricities(fixtures::p4()), (std::vector<std::size_t>{3, 2, 2, 3}));
}

TEST(Metrics, Petersen) {
    auto m = metrics(gen_petersen());
    EXPECT_EQ(m.radius, 2u);
    EXPECT_EQ(m.diameter, 2u);
    EXPECT_EQ(m.support_count, 0u);
    EXPECT_EQ(oracle::girth(fixtures::to_matrix(gen_petersen())), 5);
}

TEST(Metrics, Star) {
    auto m = metrics(gen_star(5));
    EXPECT_EQ(m.radius, 1u);
    EXPECT_EQ(m.diameter, 2u);
    EXPECT_EQ(m.support_count, 1u);
    EXPECT_FALSE(m.complement_connected);
}

TEST(Metrics, DisconnectedLeavesRadiusUndefined) {
    Graph g(4, {{0, 1}, {2, 3}});
    auto m = metrics(g);
    EXPECT_FALSE(m.connected);
    EXPECT_FALSE(m.radius.has_value());
    EXPECT_FALSE(m.diameter.has_value());
    EXPECT_EQ(m.support_count, 4u);
    EXPECT_THROW(require_connected(g), ConnectivityError);
}

TEST(Metrics, VertexTransitiveRadiusEqualsDiameter) {
    for (const Graph& g : {gen_petersen(), gen_cycle(7), gen_complete(5)}) {
        auto m = metrics(g);
        EXPECT_EQ(m.radius, m.diameter);
    }
}

TEST(Metrics, AgreesWithOracle) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(5 + seed % 10, 0.35, 100 + seed);
        auto a = fixtures::to_matrix(g);
        ASSERT_EQ(is_connected(g), oracle::connected(a));
        ASSERT_EQ(is_connected(g, Side::complement), oracle::connected(a, true));
        if (!is_connected(g)) continue;
        auto want = oracle::metrics(a);
        auto got = metrics(g);
        EXPECT_EQ(*got.radius, static_cast<std::size_t>(want.radius));
        EXPECT_EQ(*got.diameter, static_cast<std::size_t>(want.diameter));
        EXPECT_EQ(got.support_count, static_cast<std::size_t>(want.support));
    }
}

TEST(IsDominating, P4Examples) {
    Graph g = fixtures::p4();
    EXPECT_TRUE(is_dominating(g, VertexSet(4, {1, 2})));
    EXPECT_FALSE(is_dominating(g, VertexSet(4, {0})));
    EXPECT_TRUE(is_dominating(g, VertexSet(4, {0, 3}), Side::complement));
}

TEST(IsDominating, WholeVertexSet) {
    for (const Graph& g : {fixtures::p4(), gen_petersen(), Graph(3, {})}) {
        VertexSet all(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) all.insert(v);
        EXPECT_TRUE(is_dominating(g, all));
        EXPECT_TRUE(is_dominating(g, all, Side::complement));
        EXPECT_TRUE(is_global_dominating(g, all));
    }
}

TEST(GlobalDomination, P4AndPetersen) {
    EXPECT_TRUE(is_global_dominating(fixtures::p4(), VertexSet(4, {0, 3})));
    EXPECT_FALSE(is_global_dominating(fixtures::p4(), VertexSet(4, {0, 1})));
    EXPECT_FALSE(is_global_dominating(fixtures::p4(), VertexSet(4, {1, 3})));
    EXPECT_TRUE(is_global_dominating(gen_petersen(), VertexSet(10, {0, 2, 6, 9})));
}

TEST(GlobalDomination, EmptySetCarriesReason) {
    auto v = check_global_domination(fixtures::p4(), VertexSet(4));
    EXPECT_FALSE(v.ok());
    EXPECT_EQ(v.failure, DominationFailure::empty_set);
}

TEST(GlobalDomination, ReportsWitness) {
    auto v = check_global_domination(fixtures::p4(), VertexSet(4, {1, 3}));
    EXPECT_EQ(v.failure, DominationFailure::undominated_in_complement);
    EXPECT_EQ(v.witness, std::optional<Vertex>(2));
}

TEST(GlobalDomination, SelfDualAndMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(8, 0.5, 7 + seed);
        Graph c = g.materialize_complement();
        auto a = fixtures::to_matrix(g);
        for (std::uint64_t m = 0; m < 256; ++m) {
            auto s = fixtures::from_mask(8, m);
            const bool got = is_global_dominating(g, s);
            ASSERT_EQ(got, is_global_dominating(c, s));
            ASSERT_EQ(got, oracle::global_dominates(a, m));
        }
    }
}

TEST(PrivateNeighbors, StarCenter) {
    Graph g = gen_star(4);
    EXPECT_EQ(private_neighbors(g, 0, VertexSet(5, {0})).sorted(), (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(PrivateNeighbors, LiteralDefinitionIncludesSetMembers) {
    EXPECT_EQ(private_neighbors(fixtures::p4(), 1, VertexSet(4, {1, 2})).sorted(), (std::vector<Vertex>{0, 2}));
}

TEST(PrivateNeighbors, CompleteGraphAllSelected) {
    EXPECT_TRUE(private_neighbors(gen_complete(4), 0, VertexSet(4, {0, 1, 2, 3})).empty());
}

TEST(PrivateNeighbors, RequiresMembership) {
    EXPECT_THROW(private_neighbors(fixtures::p4(), 0, VertexSet(4, {1})), GraphError);
}

TEST(PrivateNeighbors, AgreesWithOracle) {
    Graph g = gen_petersen();
    auto a = fixtures::to_matrix(g);
    for (std::uint64_t m : {0x3ull, 0x245ull, 0x3FFull, 0x111ull}) {
        auto s = fixtures::from_mask(10, m);
        for (Vertex v : s)
            for (Side side : {Side::graph, Side::complement}) {
                std::vector<int> got;
                for (Vertex u : private_neighbors(g, v, s, side).sorted()) got.push_back(static_cast<int>(u));
                EXPECT_EQ(got, oracle::private_neighbors(a, v, m, side == Side::complement));
            }
    }
}
