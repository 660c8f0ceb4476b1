#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nlwlab/core/state.hpp"
#include "nlwlab/core/trajectory.hpp"

namespace nlwlab {

/// Shortest decimal text that parses back to the same double ('.' decimal,
/// independent of the locale).
std::string format_double(double x);

/// Parses text produced by format_double (or any C-locale decimal).
double parse_double(const std::string& text);

/// Columnar state format: a one-line JSON header {"p","mu","h","n","t"}
/// followed by n+1 rows "r u v".
void write_state(std::ostream& os, const RadialState& s);
RadialState read_state(std::istream& is);

/// Consecutive state blocks; read_states reads until end of input.
void write_states(std::ostream& os, const std::vector<RadialState>& states);
std::vector<RadialState> read_states(std::istream& is);

/// Step log as CSV with columns t,E,z,max_abs_u,support_radius.
void write_step_log_csv(std::ostream& os, const std::vector<StepRecord>& log);

/// Minimal CSV writer: header row then rows of doubles.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

 private:
  std::ostream& os_;
  std::size_t width_;
};

}  // namespace nlwlab
