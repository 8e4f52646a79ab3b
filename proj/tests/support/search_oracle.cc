#include "support/search_oracle.h"

#include <deque>
#include <unordered_map>

#include "planforge/task/transition.h"

namespace planforge::test {

namespace {

using planforge::encoding::Semantics;
using planforge::task::GroundTask;
using planforge::task::State;

struct StateHash {
    size_t operator()(const State& state) const {
        size_t h = 14695981039346656037ull;
        for (int value : state) {
            h ^= static_cast<size_t>(value) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Enumerates successors via all nonempty non-interfering applicable subsets.
template <typename Visit>
void parallel_successors(const GroundTask& task, const State& state, Visit&& visit) {
    std::vector<int> applicable;
    for (const auto& action : task.actions)
        if (planforge::task::applicable(task, state, action.id))
            applicable.push_back(action.id);

    std::vector<int> chosen;
    // Depth-first subset enumeration with pairwise compatibility pruning.
    auto recurse = [&](auto&& self, size_t index) -> void {
        if (index == applicable.size()) {
            if (!chosen.empty()) {
                State next = state;
                for (int action : chosen)
                    for (const auto& vv : task.actions[action].effect)
                        next[vv.var] = vv.value;
                visit(next);
            }
            return;
        }
        // Exclude applicable[index].
        self(self, index + 1);
        // Include it if compatible with everything chosen so far.
        for (int existing : chosen)
            if (planforge::task::interfere(task.actions[existing],
                                           task.actions[applicable[index]]))
                return;
        chosen.push_back(applicable[index]);
        self(self, index + 1);
        chosen.pop_back();
    };
    recurse(recurse, 0);
}

}  // namespace

std::optional<int> optimal_makespan(const GroundTask& task, Semantics semantics,
                                    size_t state_cap) {
    std::unordered_map<State, int, StateHash> depth;
    std::deque<State> queue;

    if (planforge::task::goal_satisfied(task, task.initial_state))
        return 0;
    depth.emplace(task.initial_state, 0);
    queue.push_back(task.initial_state);

    bool found = false;
    int best = -1;
    while (!queue.empty() && !found) {
        State current = std::move(queue.front());
        queue.pop_front();
        int d = depth[current];

        auto visit = [&](const State& next) {
            if (found)
                return;
            auto [it, inserted] = depth.emplace(next, d + 1);
            if (!inserted)
                return;
            if (depth.size() > state_cap)
                throw planforge::Error("search oracle overflow");
            if (planforge::task::goal_satisfied(task, next)) {
                found = true;
                best = d + 1;
                return;
            }
            queue.push_back(next);
        };

        if (semantics == Semantics::sequential) {
            for (const auto& action : task.actions) {
                if (!planforge::task::applicable(task, current, action.id))
                    continue;
                State next = current;
                for (const auto& vv : action.effect)
                    next[vv.var] = vv.value;
                visit(next);
                if (found)
                    break;
            }
        } else {
            parallel_successors(task, current, visit);
        }
    }
    if (!found)
        return std::nullopt;
    return best;
}

}  // namespace planforge::test
