#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "prpd/persistence.hpp"

namespace prpd {

// Diagram CSV: one "birth,death" per line, finite pairs first (sorted), then
// one "birth,inf" line per essential class. Values use 17 significant digits,
// so a write/read cycle reproduces every double exactly.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram);
PersistenceDiagram read_diagram_csv(std::istream& in);

PersistenceDiagram load_diagram_csv(const std::filesystem::path& path);

// %.17g formatting shared by every CSV writer in the project.
std::string format_real(double value);

}  // namespace prpd
