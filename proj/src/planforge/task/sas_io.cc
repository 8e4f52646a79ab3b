#include "planforge/task/sas_io.h"

#include <charconv>
#include <sstream>

namespace planforge::task {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view source) : source_(source) {}

    std::string_view next() {
        if (pos_ >= source_.size())
            throw SasParseError(line_, "unexpected end of file");
        size_t end = source_.find('\n', pos_);
        if (end == std::string_view::npos)
            end = source_.size();
        std::string_view line = source_.substr(pos_, end - pos_);
        pos_ = end + 1;
        ++line_;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        return line;
    }

    bool at_end() const {
        // Skip a single trailing newline.
        return pos_ >= source_.size();
    }

    int line_number() const { return line_; }

    void expect(std::string_view expected) {
        std::string_view line = next();
        if (line != expected)
            throw SasParseError(line_, "expected '" + std::string(expected) + "', got '" +
                                           std::string(line) + "'");
    }

    int next_int() {
        std::string_view line = next();
        return parse_int(line);
    }

    int parse_int(std::string_view text) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size())
            throw SasParseError(line_, "expected integer, got '" + std::string(text) + "'");
        return value;
    }

    std::vector<int> next_ints(size_t expected_count) {
        std::string_view line = next();
        std::vector<int> values;
        size_t start = 0;
        while (start < line.size()) {
            size_t end = line.find(' ', start);
            if (end == std::string_view::npos)
                end = line.size();
            if (end > start)
                values.push_back(parse_int(line.substr(start, end - start)));
            start = end + 1;
        }
        if (values.size() != expected_count)
            throw SasParseError(line_, "expected " + std::to_string(expected_count) +
                                           " integers");
        return values;
    }

private:
    std::string_view source_;
    size_t pos_ = 0;
    int line_ = 0;
};

}  // namespace

GroundTask parse_sas(std::string_view source) {
    LineReader in(source);
    GroundTask task;
    task.name = "sas-task";

    in.expect("begin_version");
    int version = in.next_int();
    if (version != 3)
        throw UnsupportedSasFeature(in.line_number(),
                                    "unsupported SAS version " + std::to_string(version));
    in.expect("end_version");

    in.expect("begin_metric");
    int metric = in.next_int();
    if (metric != 0 && metric != 1)
        throw SasParseError(in.line_number(), "bad metric");
    in.expect("end_metric");

    int var_count = in.next_int();
    if (var_count < 0)
        throw SasParseError(in.line_number(), "negative variable count");
    for (int v = 0; v < var_count; ++v) {
        in.expect("begin_variable");
        StateVariable var;
        var.id = v;
        var.name = std::string(in.next());
        int axiom_layer = in.next_int();
        if (axiom_layer != -1)
            throw UnsupportedSasFeature(in.line_number(), "derived variables (axiom layer)");
        var.domain_size = in.next_int();
        if (var.domain_size < 2)
            throw SasParseError(in.line_number(), "variable domain size < 2");
        for (int d = 0; d < var.domain_size; ++d)
            var.value_names.push_back(std::string(in.next()));
        in.expect("end_variable");
        task.variables.push_back(std::move(var));
    }

    int mutex_count = in.next_int();
    for (int m = 0; m < mutex_count; ++m) {
        in.expect("begin_mutex_group");
        int size = in.next_int();
        std::vector<VarValue> group;
        for (int i = 0; i < size; ++i) {
            std::vector<int> pair = in.next_ints(2);
            group.push_back({pair[0], pair[1]});
        }
        in.expect("end_mutex_group");
        task.mutex_groups.push_back(std::move(group));
    }

    in.expect("begin_state");
    for (int v = 0; v < var_count; ++v)
        task.initial_state.push_back(in.next_int());
    in.expect("end_state");

    in.expect("begin_goal");
    int goal_count = in.next_int();
    for (int g = 0; g < goal_count; ++g) {
        std::vector<int> pair = in.next_ints(2);
        task.goal.push_back({pair[0], pair[1]});
    }
    in.expect("end_goal");
    std::sort(task.goal.begin(), task.goal.end());

    int op_count = in.next_int();
    for (int o = 0; o < op_count; ++o) {
        in.expect("begin_operator");
        GroundAction action;
        std::string raw_name(in.next());
        action.name = "(" + raw_name + ")";

        std::vector<VarValue> pre;
        int prevail_count = in.next_int();
        for (int i = 0; i < prevail_count; ++i) {
            std::vector<int> pair = in.next_ints(2);
            pre.push_back({pair[0], pair[1]});
        }
        int effect_count = in.next_int();
        for (int i = 0; i < effect_count; ++i) {
            std::string_view line = in.next();
            std::vector<int> fields;
            {
                size_t start = 0;
                while (start < line.size()) {
                    size_t end = line.find(' ', start);
                    if (end == std::string_view::npos)
                        end = line.size();
                    if (end > start)
                        fields.push_back(in.parse_int(line.substr(start, end - start)));
                    start = end + 1;
                }
            }
            if (fields.size() < 4)
                throw SasParseError(in.line_number(), "malformed effect line");
            if (fields[0] != 0)
                throw UnsupportedSasFeature(in.line_number(), "conditional effects");
            int var = fields[1];
            int pre_value = fields[2];
            int post_value = fields[3];
            if (pre_value != -1)
                pre.push_back({var, pre_value});
            action.effect.push_back({var, post_value});
        }
        int cost = in.next_int();
        if (cost != 1)
            throw UnsupportedSasFeature(in.line_number(), "non-unit action cost");
        in.expect("end_operator");

        std::sort(pre.begin(), pre.end());
        for (size_t i = 1; i < pre.size(); ++i)
            if (pre[i].var == pre[i - 1].var)
                throw SasParseError(in.line_number(),
                                    "operator mentions a variable twice in its condition");
        std::sort(action.effect.begin(), action.effect.end());
        for (size_t i = 1; i < action.effect.size(); ++i)
            if (action.effect[i].var == action.effect[i - 1].var)
                throw SasParseError(in.line_number(),
                                    "operator mentions a variable twice in its effect");
        action.precondition = std::move(pre);

        // Effects that restate the precondition are no-ops; a fully no-op
        // operator is dropped like at grounding.
        std::vector<VarValue> effective;
        for (const VarValue& vv : action.effect) {
            const int* p = nullptr;
            for (const VarValue& pc : action.precondition)
                if (pc.var == vv.var)
                    p = &pc.value;
            if (p == nullptr || *p != vv.value)
                effective.push_back(vv);
        }
        action.effect = std::move(effective);
        if (action.effect.empty())
            continue;
        action.id = static_cast<int>(task.actions.size());
        task.actions.push_back(std::move(action));
    }

    int axiom_count = in.next_int();
    if (axiom_count != 0)
        throw UnsupportedSasFeature(in.line_number(), "axiom rules");

    task.check();
    return task;
}

std::string write_sas(const GroundTask& task) {
    std::ostringstream out;
    out << "begin_version\n3\nend_version\n";
    out << "begin_metric\n0\nend_metric\n";
    out << task.variables.size() << "\n";
    for (const StateVariable& var : task.variables) {
        out << "begin_variable\n" << var.name << "\n-1\n" << var.domain_size << "\n";
        for (const std::string& value : var.value_names)
            out << value << "\n";
        out << "end_variable\n";
    }
    out << task.mutex_groups.size() << "\n";
    for (const auto& group : task.mutex_groups) {
        out << "begin_mutex_group\n" << group.size() << "\n";
        for (const VarValue& vv : group)
            out << vv.var << " " << vv.value << "\n";
        out << "end_mutex_group\n";
    }
    out << "begin_state\n";
    for (int value : task.initial_state)
        out << value << "\n";
    out << "end_state\n";
    out << "begin_goal\n" << task.goal.size() << "\n";
    for (const VarValue& vv : task.goal)
        out << vv.var << " " << vv.value << "\n";
    out << "end_goal\n";
    out << task.actions.size() << "\n";
    for (const GroundAction& action : task.actions) {
        std::string raw = action.name;
        if (raw.size() >= 2 && raw.front() == '(' && raw.back() == ')')
            raw = raw.substr(1, raw.size() - 2);
        out << "begin_operator\n" << raw << "\n";
        std::vector<VarValue> prevail;
        for (const VarValue& pc : action.precondition)
            if (action.effect_on(pc.var) == nullptr)
                prevail.push_back(pc);
        out << prevail.size() << "\n";
        for (const VarValue& vv : prevail)
            out << vv.var << " " << vv.value << "\n";
        out << action.effect.size() << "\n";
        for (const VarValue& vv : action.effect) {
            const int* pre = action.precondition_on(vv.var);
            out << "0 " << vv.var << " " << (pre ? *pre : -1) << " " << vv.value << "\n";
        }
        out << "1\nend_operator\n";
    }
    out << "0\n";
    return out.str();
}

}  // namespace planforge::task
