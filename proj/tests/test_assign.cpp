#include <doctest.h>

#include <numeric>

#include "linlay/assign.hpp"
#include "linlay/gen.hpp"
#include "linlay/order.hpp"
#include "oracles.hpp"

using namespace linlay;

namespace {

const AssignHeuristic kAll[] = {AssignHeuristic::stack_queue, AssignHeuristic::elen, AssignHeuristic::ceil_floor};

bool complete_assignment(const MixedLayout& layout, PageSpec spec) {
    for (PageId p : layout.page_of) {
        if (p < 0 || p >= spec.pages()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("stack-queue small examples") {
    const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(stack_queue(c4, VertexOrder::identity(4), {1, 1}).page_of == std::vector<PageId>{0, 0, 0, 0});
    // 0 2 1 3: edges 01 03 12 23 become [0,2] [0,3] [1,2] [1,3].
    const VertexOrder twisted = VertexOrder::from_sequence({0, 2, 1, 3});
    const MixedLayout layout = stack_queue(c4, twisted, {1, 1});
    CHECK(oracle::conflicts(c4, layout) == 0);
    CHECK(layout.page_of == oracle::stack_queue_1_1(c4, twisted.sequence()));
}

TEST_CASE("a single edge goes to the stack") {
    const Graph e(2, {{0, 1}});
    CHECK(stack_queue(e, VertexOrder::identity(2), {1, 1}).page_of == std::vector<PageId>{0});
    CHECK(e_len(e, VertexOrder::identity(2), {1, 1}).page_of == std::vector<PageId>{0});
    CHECK(stack_queue(e, VertexOrder::identity(2), {0, 2}).page_of == std::vector<PageId>{0});
}

TEST_CASE("stack-queue matches the global restatement") {
    const Graph k8 = complete(8);
    CHECK(stack_queue(k8, VertexOrder::identity(8), {1, 1}).page_of ==
          oracle::stack_queue_1_1(k8, VertexOrder::identity(8).sequence()));
    for (Seed s = 0; s < 300; ++s) {
        const std::size_t n = 3 + s % 40;
        const std::size_t m = std::min(n * (n - 1) / 2, (2 + s % 5) * n);
        const Graph g = random_gnm_connected(n, m, s);
        const VertexOrder order = random_order(g, s + 1);
        REQUIRE(stack_queue(g, order, {1, 1}).page_of == oracle::stack_queue_1_1(g, order.sequence()));
    }
}

TEST_CASE("sweep counters equal pairwise conflicts with assigned edges") {
    for (Seed s = 0; s < 100; ++s) {
        const std::size_t n = 5 + s % 30;
        const Graph g = random_gnm_connected(n, std::min(n * (n - 1) / 2, 4 * n), s);
        const VertexOrder order = random_order(g, s);
        const auto rank = oracle::ranks_of(order.sequence());
        std::vector<PageId> page(g.m(), kUnassigned);
        bool sound = true;
        std::size_t steps = 0;
        stack_queue(g, order, {1, 1}, [&](const SweepStep& step) {
            std::uint64_t c = 0, nn = 0;
            for (std::size_t f = 0; f < g.m(); ++f) {
                const auto p = oracle::pattern(g.edge(step.edge), g.edge(f), rank);
                if (page[f] == 0 && p == oracle::Pattern::crossing) ++c;
                if (page[f] == 1 && p == oracle::Pattern::nesting) ++nn;
            }
            sound = sound && c == step.crossing_counter && nn == step.nesting_counter;
            sound = sound && step.to_stack == (2 * c + step.open_above <= 2 * nn + step.open_front);
            sound = sound && step.page == (step.to_stack ? 0 : 1);
            page[step.edge] = step.page;
            ++steps;
        });
        REQUIRE(sound);
        REQUIRE(steps == g.m());
    }
}

TEST_CASE("stars in any order and paths in path order have no conflicts") {
    std::vector<Edge> path_edges, star_edges;
    for (Vertex v = 0; v + 1 < 10; ++v) path_edges.push_back({v, v + 1});
    for (Vertex v = 1; v < 10; ++v) star_edges.push_back({0, v});
    const Graph path(10, path_edges), star(10, star_edges);
    for (AssignHeuristic h : kAll) {
        CHECK(oracle::conflicts(path, run_assignment(h, path, VertexOrder::identity(10), {1, 1})) == 0);
        for (Seed s = 0; s < 20; ++s) {
            CHECK(oracle::conflicts(star, run_assignment(h, star, random_order(star, s), {1, 1})) == 0);
        }
    }
}

TEST_CASE("edge sequences for eLen and ceilFloor") {
    const Graph k4 = complete(4);
    const VertexOrder id = VertexOrder::identity(4);
    // Edge indices of K4: 01 02 03 12 13 23. Lengths 1 2 3 1 2 1.
    CHECK(elen_sequence(k4, id) == std::vector<std::size_t>{2, 1, 4, 0, 3, 5});
    // Cyclic lengths on four vertices: 1 2 1 1 2 1.
    CHECK(ceil_floor_sequence(k4, id) == std::vector<std::size_t>{1, 4, 0, 2, 3, 5});
    const Graph k5 = complete(5);
    // On five vertices 03 has cyclic length 2, as long as 02.
    const auto cf = ceil_floor_sequence(k5, VertexOrder::identity(5));
    CHECK(cf.front() == *k5.edge_index(0, 2));
    CHECK(cf[1] == *k5.edge_index(0, 3));
}

TEST_CASE("greedy assignments on K4") {
    const Graph k4 = complete(4);
    const VertexOrder id = VertexOrder::identity(4);
    // eLen: 03, 02, 13 are placed first; 13 crosses 02 and moves to the queue.
    CHECK(e_len(k4, id, {1, 1}).page_of == std::vector<PageId>{0, 0, 0, 0, 1, 0});
    CHECK(oracle::conflicts(k4, e_len(k4, id, {1, 1})) == 0);
    CHECK(oracle::conflicts(k4, ceil_floor(k4, id, {1, 1})) == 0);
    CHECK(e_len(k4, id, {2, 0}).page_of == std::vector<PageId>{0, 0, 0, 0, 1, 0});
    // Queue only: 03 nests 12, so 12 takes the second queue.
    CHECK(e_len(k4, id, {0, 2}).page_of == std::vector<PageId>{0, 0, 0, 1, 0, 0});
    const std::vector<std::size_t> bad{0, 1, 2, 3, 4, 4};
    CHECK_THROWS_AS(greedy_assign(k4, id, {1, 1}, bad), StructureError);
    CHECK_THROWS_AS(greedy_assign(k4, id, {1, 1}, std::vector<std::size_t>{0, 1}), StructureError);
}

TEST_CASE("every heuristic assigns every edge to a page of the spec") {
    const PageSpec specs[] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {3, 2}};
    for (Seed s = 0; s < 30; ++s) {
        const Graph g = random_gnm_connected(25, 75, s);
        const VertexOrder order = con_greedy(g, s);
        for (PageSpec spec : specs) {
            for (AssignHeuristic h : kAll) {
                const MixedLayout layout = run_assignment(h, g, order, spec);
                REQUIRE(layout.order == order);
                REQUIRE(layout.spec == spec);
                REQUIRE(complete_assignment(layout, spec));
                REQUIRE(count_conflicts(g, layout).total == oracle::conflicts(g, layout));
                if (is_valid_layout(g, layout)) REQUIRE(oracle::page_sizes_plausible(g, layout));
            }
        }
    }
}

TEST_CASE("degenerate specs use the only available side") {
    const Graph g = random_gnm_connected(20, 50, 4);
    const VertexOrder order = random_order(g, 4);
    for (PageId p : stack_queue(g, order, {2, 0}).page_of) CHECK(p < 2);
    for (PageId p : stack_queue(g, order, {0, 1}).page_of) CHECK(p == 0);
    CHECK_THROWS_AS(stack_queue(g, VertexOrder::identity(19), {1, 1}), StructureError);
    CHECK_THROWS_AS(stack_queue(g, order, {0, 0}), StructureError);
}

TEST_CASE("more pages never increase greedy conflicts on complete graphs") {
    const Graph k12 = complete(12);
    const VertexOrder id = VertexOrder::identity(12);
    for (AssignHeuristic h : kAll) {
        const auto one = oracle::conflicts(k12, run_assignment(h, k12, id, {1, 1}));
        const auto two = oracle::conflicts(k12, run_assignment(h, k12, id, {2, 2}));
        CHECK(two <= one);
    }
}

TEST_CASE("heuristic names") {
    for (AssignHeuristic h : kAll) CHECK(parse_assign_heuristic(to_string(h)) == h);
    CHECK(to_string(AssignHeuristic::stack_queue) == "stack-queue");
    CHECK_FALSE(parse_assign_heuristic("greedy").has_value());
}
