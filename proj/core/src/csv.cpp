#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "pasim/sweep.hpp"

namespace pasim {

namespace {

void put_number(std::ostream& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, res.ptr - buf);
}

void put_optional(std::ostream& out, const std::optional<double>& v) {
  out << ',';
  if (v) put_number(out, *v);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw std::runtime_error("csv line " + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view field, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    bad_line(line, "not a number: '" + std::string(field) + "'");
  }
  return v;
}

std::optional<double> parse_optional(std::string_view field, std::size_t line) {
  if (field.empty()) return std::nullopt;
  return parse_number(field, line);
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
  out << kCsvHeader << '\n';
  for (const auto& r : result.rows) {
    put_number(out, r.snr_db);
    out << ',' << to_string(r.scheme) << ',' << r.user << ',' << to_string(r.metric) << ',';
    put_number(out, r.analytic);
    put_optional(out, r.asymptote);
    put_optional(out, r.mc_value);
    put_optional(out, r.mc_std_error);
    out << '\n';
  }
}

SweepResult read_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) bad_line(lineno, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) bad_line(lineno, "unexpected header");

  SweepResult result;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 8) {
      bad_line(lineno, "expected 8 fields, got " + std::to_string(fields.size()));
    }

    SweepRow row;
    row.snr_db = parse_number(fields[0], lineno);
    try {
      row.scheme = scheme_from_string(fields[1]);
      row.metric = metric_from_string(fields[3]);
    } catch (const std::invalid_argument& e) {
      bad_line(lineno, e.what());
    }
    if (fields[2] == "1") {
      row.user = 1;
    } else if (fields[2] == "2") {
      row.user = 2;
    } else {
      bad_line(lineno, "user must be 1 or 2");
    }
    row.analytic = parse_number(fields[4], lineno);
    row.asymptote = parse_optional(fields[5], lineno);
    row.mc_value = parse_optional(fields[6], lineno);
    row.mc_std_error = parse_optional(fields[7], lineno);
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace pasim
