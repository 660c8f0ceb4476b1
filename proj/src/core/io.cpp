#include "nlwlab/core/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace nlwlab {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double x = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  const auto res = std::from_chars(b, e, x);
  if (res.ec != std::errc() || res.ptr != e) throw std::invalid_argument("parse_double: bad number '" + text + "'");
  return x;
}

void write_state(std::ostream& os, const RadialState& s) {
  nlohmann::ordered_json header;
  header["p"] = s.params().p;
  header["mu"] = s.params().mu();
  header["h"] = s.grid().h();
  header["n"] = s.grid().n();
  header["t"] = s.t();
  os << header.dump() << '\n';
  for (std::size_t j = 0; j < s.grid().size(); ++j) {
    os << format_double(s.grid().r(j)) << ' ' << format_double(s.u()[j]) << ' '
       << format_double(s.v()[j]) << '\n';
  }
}

namespace {
bool read_block(std::istream& is, std::optional<RadialState>& out) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) break;
  }
  if (line.empty()) return false;
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("read_state: bad header: ") + e.what());
  }
  const auto params = make_params(header.at("p").get<double>(), header.at("mu").get<int>());
  const RadialGrid grid(header.at("h").get<double>(), header.at("n").get<std::size_t>());
  std::vector<double> u(grid.size()), v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!std::getline(is, line)) throw std::runtime_error("read_state: truncated body");
    std::istringstream row(line);
    std::string r, su, sv;
    if (!(row >> r >> su >> sv)) throw std::runtime_error("read_state: malformed row " + std::to_string(j));
    u[j] = parse_double(su);
    v[j] = parse_double(sv);
  }
  out.emplace(header.at("t").get<double>(), std::move(u), std::move(v), params, grid);
  return true;
}
}  // namespace

RadialState read_state(std::istream& is) {
  std::optional<RadialState> s;
  if (!read_block(is, s)) throw std::runtime_error("read_state: empty input");
  return *s;
}

void write_states(std::ostream& os, const std::vector<RadialState>& states) {
  for (const auto& s : states) write_state(os, s);
}

std::vector<RadialState> read_states(std::istream& is) {
  std::vector<RadialState> out;
  std::optional<RadialState> s;
  while (read_block(is, s)) out.push_back(*s);
  return out;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& columns)
    : os_(os), width_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) os_ << (i ? "," : "") << columns[i];
  os_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != width_) throw std::invalid_argument("CsvWriter: row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) os_ << (i ? "," : "") << format_double(values[i]);
  os_ << '\n';
}

void write_step_log_csv(std::ostream& os, const std::vector<StepRecord>& log) {
  CsvWriter csv(os, {"t", "E", "z", "max_abs_u", "support_radius"});
  for (const auto& r : log) csv.row({r.t, r.energy, r.virial, r.max_abs_u, r.support_radius});
}

}  // namespace nlwlab
