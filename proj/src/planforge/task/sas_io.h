#pragma once

#include <string>
#include <string_view>

#include "planforge/task/ground_task.h"

namespace planforge::task {

struct SasParseError : Error {
    SasParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_number(line) {}
    int line_number;
};

// Well-formed SAS outside the fragment: conditional effects, axioms,
// derived variables, non-unit action costs.
struct UnsupportedSasFeature : Error {
    UnsupportedSasFeature(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_number(line) {}
    int line_number;
};

// Reads the Fast-Downward-style SAS output format, version 3. Prevail
// conditions are merged into preconditions; mutex groups are retained.
GroundTask parse_sas(std::string_view source);

// Inverse writer for tasks expressible in the fragment; test-only.
std::string write_sas(const GroundTask& task);

}  // namespace planforge::task
