#include "planforge/encoding/dimacs.h"

namespace planforge::encoding {

void write_dimacs(const CnfProgram& program, std::ostream& out) {
    out << "p cnf " << program.atom_count() << ' ' << program.clauses.size() << '\n';
    for (const auto& clause : program.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
}

void write_atom_map(const CnfProgram& program, std::ostream& out) {
    for (int index = 0; index < program.atom_count(); ++index) {
        TimedAtom atom = program.atom(index);
        if (atom.kind == TimedAtom::Kind::holds)
            out << index + 1 << " holds " << atom.a << ' ' << atom.b << ' ' << atom.time
                << '\n';
        else
            out << index + 1 << " occurs " << atom.a << ' ' << atom.time << '\n';
    }
}

}  // namespace planforge::encoding
