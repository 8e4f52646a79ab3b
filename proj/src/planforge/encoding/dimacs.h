#pragma once

#include <ostream>

#include "planforge/encoding/cnf_program.h"

namespace planforge::encoding {

// "p cnf V C" header, clauses as zero-terminated integer lines.
void write_dimacs(const CnfProgram& program, std::ostream& out);

// Sidecar atom map, one line per atom: "index kind args time" with 1-based
// DIMACS indices: "<i> holds <var> <value> <t>" / "<i> occurs <action> <t>".
void write_atom_map(const CnfProgram& program, std::ostream& out);

}  // namespace planforge::encoding
