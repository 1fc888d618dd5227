#include "conjugate/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "conjugate/errors.hpp"

namespace conjugate {

namespace {

constexpr const char* kHeader = "index,coordinate,re,im";

void write_rows(std::ostream& out, const Grid& grid, std::span<const Complex> values) {
  out << kHeader << '\n';
  char line[128];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g\n", i, grid.point(i), values[i].real(),
                  values[i].imag());
    out << line;
  }
}

double parse_field(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError("csv line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_csv(std::ostream& out, const SampledSignal& signal) { write_rows(out, signal.grid(), signal.values()); }

void write_csv(std::ostream& out, const Spectrum& spectrum) { write_rows(out, spectrum.grid(), spectrum.values()); }

SampledSignal read_csv(std::istream& in, Domain domain) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParameterError("csv input is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) {
    throw ParameterError("csv header must be '" + std::string(kHeader) + "', got '" + line + "'");
  }

  std::vector<double> coords;
  std::vector<Complex> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 4) {
      throw ParameterError("csv line " + std::to_string(line_no) + ": expected 4 fields");
    }
    if (parse_field(fields[0], line_no) != static_cast<double>(values.size())) {
      throw ParameterError("csv line " + std::to_string(line_no) + ": index out of sequence");
    }
    coords.push_back(parse_field(fields[1], line_no));
    values.emplace_back(parse_field(fields[2], line_no), parse_field(fields[3], line_no));
  }
  if (values.size() < 2) {
    throw ParameterError("csv signal needs at least 2 rows");
  }

  const double step = (coords.back() - coords.front()) / static_cast<double>(coords.size() - 1);
  const Grid grid(coords.front(), step, coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (std::abs(coords[i] - grid.point(i)) > 1e-6 * step) {
      throw ParameterError("csv row " + std::to_string(i) + ": coordinates are not uniformly spaced");
    }
  }
  return SampledSignal(grid, std::move(values), domain);
}

}  // namespace conjugate
