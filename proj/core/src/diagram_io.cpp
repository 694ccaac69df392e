#include "prpd/diagram_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string_view>
#include <vector>

#include "prpd/error.hpp"

namespace prpd {

namespace {

double parse_real(std::string_view token, std::size_t line) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
    token.remove_suffix(1);
  }
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || std::isnan(value)) {
    throw ParseError(line, "invalid number '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram) {
  for (const auto& p : diagram.finite_pairs()) {
    out << format_real(p.birth) << ',' << format_real(p.death) << '\n';
  }
  for (double b : diagram.essential_births()) out << format_real(b) << ",inf\n";
}

PersistenceDiagram read_diagram_csv(std::istream& in) {
  std::vector<PersistencePair> finite;
  std::vector<double> essential;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(line_no, "expected 'birth,death'");
    }
    const std::string_view view(line);
    const double birth = parse_real(view.substr(0, comma), line_no);
    if (std::isinf(birth)) throw ParseError(line_no, "birth must be finite");
    auto death_token = view.substr(comma + 1);
    while (!death_token.empty() && death_token.front() == ' ') death_token.remove_prefix(1);
    while (!death_token.empty() && death_token.back() == ' ') death_token.remove_suffix(1);
    if (death_token == "inf") {
      essential.push_back(birth);
      continue;
    }
    const double death = parse_real(death_token, line_no);
    if (std::isinf(death)) throw ParseError(line_no, "death must be finite or the literal 'inf'");
    if (birth > death) throw ParseError(line_no, "birth exceeds death");
    finite.push_back({birth, death});
  }
  return PersistenceDiagram(std::move(finite), std::move(essential));
}

PersistenceDiagram load_diagram_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open diagram");
  try {
    return read_diagram_csv(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace prpd
