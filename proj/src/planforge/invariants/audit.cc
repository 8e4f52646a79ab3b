#include "planforge/invariants/audit.h"

#include <algorithm>

#include "planforge/task/explore.h"

namespace planforge::invariants {

namespace {

// A window is a path through the reachability graph: state indices plus the
// action taken on each edge (-1 for a stutter step).
struct Window {
    std::vector<int> states;
    std::vector<int> actions;
};

bool clause_satisfied(const CandidateProperty& property, const task::ReachabilityGraph& graph,
                      const Window& window) {
    for (const CandidateLiteral& lit : property.literals) {
        bool truth;
        if (lit.kind == CandidateLiteral::Kind::holds)
            truth = graph.states[window.states[lit.offset]][lit.a] == lit.b;
        else
            truth = window.actions[lit.offset] == lit.a;
        if (truth == lit.positive)
            return true;
    }
    return false;
}

}  // namespace

AuditResult soundness_audit(const std::vector<ValidatedInvariant>& proven,
                            const task::GroundTask& task, size_t state_cap) {
    AuditResult result;
    if (proven.empty())
        return result;

    task::ReachabilityGraph graph = task::explore(task, state_cap);
    if (graph.overflow) {
        result.status = AuditResult::Status::overflow;
        result.description = "reachability oracle overflow; audit skipped";
        return result;
    }

    int max_window = 1;
    for (const ValidatedInvariant& inv : proven)
        max_window = std::max(max_window, inv.property.window());

    // Depth-first enumeration of all windows up to the longest needed,
    // evaluating every invariant whose window has exactly that length.
    std::vector<std::vector<const CandidateProperty*>> by_length(max_window + 1);
    for (const ValidatedInvariant& inv : proven)
        by_length[inv.property.window()].push_back(&inv.property);

    Window window;
    for (size_t start = 0; start < graph.states.size(); ++start) {
        window.states.assign(1, static_cast<int>(start));
        window.actions.clear();

        // Iterative DFS over window extensions. Each frame tracks which edge
        // alternative (stutter = -1, then graph edges) is explored next.
        std::vector<size_t> choice{0};
        while (!choice.empty()) {
            // Evaluate invariants of the current window length once per window,
            // i.e. when the window was just formed (choice.back() == 0).
            if (choice.back() == 0) {
                int length = static_cast<int>(window.states.size());
                if (length <= max_window)
                    for (const CandidateProperty* property : by_length[length])
                        if (!clause_satisfied(*property, graph, window)) {
                            result.status = AuditResult::Status::counterexample_found;
                            result.violated = *property;
                            for (int idx : window.states)
                                result.window.push_back(graph.states[idx]);
                            result.description =
                                "invariant violated in a reachable window: " +
                                to_string(*property);
                            return result;
                        }
            }
            if (static_cast<int>(window.states.size()) >= max_window) {
                choice.pop_back();
                if (!choice.empty()) {
                    window.states.pop_back();
                    window.actions.pop_back();
                }
                continue;
            }
            int current = window.states.back();
            size_t alternative = choice.back()++;
            if (alternative == 0) {
                // Stutter: the state persists with no action.
                window.states.push_back(current);
                window.actions.push_back(-1);
                choice.push_back(0);
            } else if (alternative - 1 < graph.edges[current].size()) {
                const auto& [action, successor] = graph.edges[current][alternative - 1];
                window.states.push_back(successor);
                window.actions.push_back(action);
                choice.push_back(0);
            } else {
                choice.pop_back();
                if (!choice.empty()) {
                    window.states.pop_back();
                    window.actions.pop_back();
                }
            }
        }
    }
    return result;
}

}  // namespace planforge::invariants
