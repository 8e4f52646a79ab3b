#include "planforge/driver/stats.h"

#include <json.hpp>

namespace planforge::driver {

namespace {

const char* verdict_name(sat::SolveStatus status) {
    switch (status) {
    case sat::SolveStatus::sat:
        return "sat";
    case sat::SolveStatus::unsat:
        return "unsat";
    case sat::SolveStatus::timeout:
        return "timeout";
    }
    return "unknown";
}

double round_ms(double ms) {
    return std::round(ms * 1000.0) / 1000.0;
}

}  // namespace

std::string print_stats(const RunStats& stats, bool include_timing) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["horizons"] = nlohmann::json::array();

    uint64_t total_conflicts = 0;
    uint64_t total_decisions = 0;
    size_t total_learned = 0;
    size_t total_proven = 0;
    size_t total_refuted = 0;
    size_t total_unknown = 0;
    double total_wall = 0;

    for (const invariants::HorizonRecord& record : stats.horizons) {
        nlohmann::json entry;
        entry["horizon"] = record.horizon;
        entry["verdict"] = verdict_name(record.verdict);
        entry["conflicts"] = record.conflicts;
        entry["decisions"] = record.decisions;
        entry["learned_exported"] = record.learned_exported;
        entry["candidates_proven"] = record.candidates_proven;
        entry["candidates_refuted"] = record.candidates_refuted;
        entry["candidates_unknown"] = record.candidates_unknown;
        entry["wall_ms"] = include_timing ? round_ms(record.wall_ms) : 0.0;
        doc["horizons"].push_back(std::move(entry));

        total_conflicts += record.conflicts;
        total_decisions += record.decisions;
        total_learned += record.learned_exported;
        total_proven += record.candidates_proven;
        total_refuted += record.candidates_refuted;
        total_unknown += record.candidates_unknown;
        total_wall += record.wall_ms;
    }

    doc["totals"] = {
        {"conflicts", total_conflicts},
        {"decisions", total_decisions},
        {"learned_exported", total_learned},
        {"candidates_proven", total_proven},
        {"candidates_refuted", total_refuted},
        {"candidates_unknown", total_unknown},
        {"horizons", stats.horizons.size()},
        {"wall_ms", include_timing ? round_ms(total_wall) : 0.0},
    };

    return doc.dump(2) + "\n";
}

}  // namespace planforge::driver
