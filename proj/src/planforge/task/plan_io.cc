#include "planforge/task/plan_io.h"

#include <map>
#include <sstream>

namespace planforge::task {

std::string write_plan(const GroundTask& task, const Plan& plan) {
    std::ostringstream out;
    size_t cost = 0;
    for (const auto& step : plan.steps) {
        if (step.empty())
            continue;
        for (size_t i = 0; i < step.size(); ++i) {
            if (i > 0)
                out << ' ';
            out << task.actions[step[i]].name;
        }
        out << '\n';
        cost += step.size();
    }
    out << "; cost = " << cost << "\n";
    return out.str();
}

Plan read_plan(const GroundTask& task, std::string_view text) {
    std::map<std::string, int> by_name;
    for (const GroundAction& action : task.actions)
        by_name[action.name] = action.id;

    Plan plan;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        if (line[first] == ';')
            continue;
        std::vector<int> step;
        size_t pos = first;
        while (pos < line.size()) {
            if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
                ++pos;
                continue;
            }
            if (line[pos] != '(')
                throw PlanParseError("expected '(' in plan line: " + line);
            size_t close = line.find(')', pos);
            if (close == std::string::npos)
                throw PlanParseError("unbalanced '(' in plan line: " + line);
            std::string name = line.substr(pos, close - pos + 1);
            auto it = by_name.find(name);
            if (it == by_name.end())
                throw PlanParseError("unknown action " + name);
            step.push_back(it->second);
            pos = close + 1;
        }
        if (!step.empty())
            plan.steps.push_back(std::move(step));
    }
    return plan;
}

}  // namespace planforge::task
