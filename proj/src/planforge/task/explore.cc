#include "planforge/task/explore.h"

#include <unordered_map>

#include "planforge/task/transition.h"

namespace planforge::task {

namespace {

struct StateHash {
    size_t operator()(const State& state) const {
        size_t h = 1469598103934665603ull;
        for (int value : state) {
            h ^= static_cast<size_t>(value) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

ReachabilityGraph explore(const GroundTask& task, size_t cap) {
    ReachabilityGraph graph;
    std::unordered_map<State, int, StateHash> index;

    graph.states.push_back(task.initial_state);
    graph.edges.emplace_back();
    index.emplace(task.initial_state, 0);

    for (size_t front = 0; front < graph.states.size(); ++front) {
        State current = graph.states[front];
        for (const GroundAction& action : task.actions) {
            if (!applicable(task, current, action.id))
                continue;
            State next = current;
            for (const VarValue& vv : action.effect)
                next[vv.var] = vv.value;
            auto [it, inserted] = index.emplace(next, static_cast<int>(graph.states.size()));
            if (inserted) {
                if (graph.states.size() >= cap) {
                    graph.overflow = true;
                    return graph;
                }
                graph.states.push_back(std::move(next));
                graph.edges.emplace_back();
            }
            graph.edges[front].emplace_back(action.id, it->second);
        }
    }
    return graph;
}

std::optional<std::vector<State>> reachable_states(const GroundTask& task, size_t cap) {
    ReachabilityGraph graph = explore(task, cap);
    if (graph.overflow)
        return std::nullopt;
    return std::move(graph.states);
}

}  // namespace planforge::task
