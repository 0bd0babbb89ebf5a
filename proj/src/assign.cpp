#include "linlay/assign.hpp"

#include <algorithm>
#include <string>

namespace linlay {

namespace {

void check_inputs(const Graph& g, const VertexOrder& order, PageSpec spec) {
    spec.validate();
    if (order.size() != g.n()) {
        throw StructureError("order has " + std::to_string(order.size()) + " vertices, graph has " +
                             std::to_string(g.n()));
    }
}

std::vector<Interval> intervals(const Graph& g, const VertexOrder& order) {
    std::vector<Interval> out;
    out.reserve(g.m());
    for (const Edge& e : g.edges()) out.push_back(interval_of(e, order));
    return out;
}

bool conflicts_on(bool stack_page, Interval a, Interval b) {
    return stack_page ? intervals_cross(a, b) : intervals_nest(a, b);
}

// Lowest-id page among [first, first+count) with the fewest conflicts.
PageId least_conflicted_page(PageSpec spec, PageId first, int count, Interval iv,
                             const std::vector<std::vector<Interval>>& assigned) {
    if (count == 1) return first;
    PageId best = first;
    std::uint64_t best_conflicts = UINT64_MAX;
    for (PageId p = first; p < first + count; ++p) {
        std::uint64_t c = 0;
        for (Interval other : assigned[static_cast<std::size_t>(p)]) c += conflicts_on(spec.is_stack(p), iv, other);
        if (c < best_conflicts) {
            best_conflicts = c;
            best = p;
        }
    }
    return best;
}

}  // namespace

MixedLayout stack_queue(const Graph& g, const VertexOrder& order, PageSpec spec, const SweepObserver& observer) {
    check_inputs(g, order, spec);
    const std::size_t n = g.n();
    const std::vector<Interval> iv = intervals(g, order);

    std::vector<std::vector<std::size_t>> opens(n), closes(n);
    for (std::size_t e = 0; e < g.m(); ++e) {
        opens[iv[e].left].push_back(e);
        closes[iv[e].right].push_back(e);
    }

    std::vector<std::size_t> stack;  // bottom to top
    std::vector<std::size_t> queue;  // front to back
    std::vector<std::uint64_t> crossing(g.m(), 0), nesting(g.m(), 0);
    std::vector<std::vector<Interval>> assigned(static_cast<std::size_t>(spec.pages()));
    MixedLayout layout{order, spec, std::vector<PageId>(g.m(), kUnassigned)};

    for (std::size_t i = 0; i < n; ++i) {
        auto& closing = closes[i];
        // Innermost first.
        std::sort(closing.begin(), closing.end(),
                  [&](std::size_t a, std::size_t b) { return iv[a].left > iv[b].left; });
        for (std::size_t e : closing) {
            const auto s_it = std::find(stack.begin(), stack.end(), e);
            const auto q_it = std::find(queue.begin(), queue.end(), e);

            std::uint64_t above = 0, front = 0;
            for (auto it = s_it + 1; it != stack.end(); ++it) above += iv[*it].right > i;
            for (auto it = queue.begin(); it != q_it; ++it) front += iv[*it].right > i;

            bool to_stack = 2 * crossing[e] + above <= 2 * nesting[e] + front;
            if (spec.queues == 0) to_stack = true;
            if (spec.stacks == 0) to_stack = false;

            if (to_stack) {
                for (auto it = s_it + 1; it != stack.end(); ++it) {
                    if (iv[*it].right > i) ++crossing[*it];
                }
            } else {
                for (auto it = queue.begin(); it != q_it; ++it) {
                    if (iv[*it].right > i) ++nesting[*it];
                }
            }

            const PageId page = to_stack ? least_conflicted_page(spec, 0, spec.stacks, iv[e], assigned)
                                         : least_conflicted_page(spec, spec.stacks, spec.queues, iv[e], assigned);
            layout.page_of[e] = page;
            assigned[static_cast<std::size_t>(page)].push_back(iv[e]);
            if (observer) observer({e, crossing[e], nesting[e], above, front, to_stack, page});

            stack.erase(s_it);
            queue.erase(q_it);
        }

        auto& opening = opens[i];
        std::sort(opening.begin(), opening.end(),
                  [&](std::size_t a, std::size_t b) { return iv[a].right > iv[b].right; });
        stack.insert(stack.end(), opening.begin(), opening.end());
        queue.insert(queue.end(), opening.rbegin(), opening.rend());
    }
    return layout;
}

MixedLayout greedy_assign(const Graph& g, const VertexOrder& order, PageSpec spec,
                          std::span<const std::size_t> edge_sequence) {
    check_inputs(g, order, spec);
    std::vector<char> seen(g.m(), 0);
    for (std::size_t e : edge_sequence) {
        if (e >= g.m() || seen[e]) throw StructureError("edge sequence is not a permutation of the edges");
        seen[e] = 1;
    }
    if (edge_sequence.size() != g.m()) throw StructureError("edge sequence does not cover every edge");

    const std::vector<Interval> iv = intervals(g, order);
    const auto pages = static_cast<std::size_t>(spec.pages());
    std::vector<std::vector<Interval>> assigned(pages);
    std::vector<std::uint64_t> counts(pages);
    MixedLayout layout{order, spec, std::vector<PageId>(g.m(), kUnassigned)};

    for (std::size_t e : edge_sequence) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t p = 0; p < pages; ++p) {
            const bool stack_page = spec.is_stack(static_cast<PageId>(p));
            for (Interval other : assigned[p]) counts[p] += conflicts_on(stack_page, iv[e], other);
        }
        // Stacks have the lower ids, so the first minimum is the preferred page.
        const auto best = static_cast<std::size_t>(std::min_element(counts.begin(), counts.end()) - counts.begin());
        layout.page_of[e] = static_cast<PageId>(best);
        assigned[best].push_back(iv[e]);
    }
    return layout;
}

namespace {

template <typename Length>
std::vector<std::size_t> by_decreasing_length(const Graph& g, const VertexOrder& order, Length length) {
    const std::vector<Interval> iv = intervals(g, order);
    std::vector<std::size_t> seq(g.m());
    for (std::size_t e = 0; e < seq.size(); ++e) seq[e] = e;
    std::sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) {
        const std::size_t la = length(iv[a]);
        const std::size_t lb = length(iv[b]);
        if (la != lb) return la > lb;
        if (iv[a].left != iv[b].left) return iv[a].left < iv[b].left;
        return iv[a].right < iv[b].right;
    });
    return seq;
}

}  // namespace

std::vector<std::size_t> elen_sequence(const Graph& g, const VertexOrder& order) {
    return by_decreasing_length(g, order, [](Interval iv) { return iv.right - iv.left; });
}

std::vector<std::size_t> ceil_floor_sequence(const Graph& g, const VertexOrder& order) {
    const std::size_t n = g.n();
    return by_decreasing_length(g, order, [n](Interval iv) {
        const std::size_t d = iv.right - iv.left;
        return std::min(d, n - d);
    });
}

MixedLayout e_len(const Graph& g, const VertexOrder& order, PageSpec spec) {
    check_inputs(g, order, spec);
    return greedy_assign(g, order, spec, elen_sequence(g, order));
}

MixedLayout ceil_floor(const Graph& g, const VertexOrder& order, PageSpec spec) {
    check_inputs(g, order, spec);
    return greedy_assign(g, order, spec, ceil_floor_sequence(g, order));
}

std::string_view to_string(AssignHeuristic h) {
    switch (h) {
        case AssignHeuristic::stack_queue: return "stack-queue";
        case AssignHeuristic::elen: return "elen";
        case AssignHeuristic::ceil_floor: return "ceilfloor";
    }
    return "?";
}

std::optional<AssignHeuristic> parse_assign_heuristic(std::string_view name) {
    for (AssignHeuristic h : {AssignHeuristic::stack_queue, AssignHeuristic::elen, AssignHeuristic::ceil_floor}) {
        if (to_string(h) == name) return h;
    }
    return std::nullopt;
}

MixedLayout run_assignment(AssignHeuristic h, const Graph& g, const VertexOrder& order, PageSpec spec) {
    switch (h) {
        case AssignHeuristic::stack_queue: return stack_queue(g, order, spec);
        case AssignHeuristic::elen: return e_len(g, order, spec);
        case AssignHeuristic::ceil_floor: return ceil_floor(g, order, spec);
    }
    throw std::invalid_argument("unknown assignment heuristic");
}

}  // namespace linlay
