#pragma once

// Trace CSV format and atomic file output.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "wanderer/config.hpp"
#include "wanderer/engine.hpp"
#include "wanderer/errors.hpp"

namespace wanderer {

inline constexpr std::string_view kTraceHeader =
    "t,E,s0,s1,k1,food,predator,tree,rock,sun,"
    "w_tree_ex,w_tree_in,w_rock_ex,w_rock_in,w_sun_ex,w_sun_in";

inline void append_trace_row(std::string& out, const TraceRow& r) {
  auto bit = [](bool b) { return b ? "1" : "0"; };
  out += std::to_string(r.t);
  for (double v : {r.E, r.s0, r.s1, r.k1}) {
    out += ',';
    out += format_real(v);
  }
  for (bool b : {r.food, r.predator, r.env.tree(), r.env.rock(), r.env.sun()}) {
    out += ',';
    out += bit(b);
  }
  for (auto f : kFeatures) {
    out += ',';
    out += format_real(r.weights.get(f, Subsystem::excitatory));
    out += ',';
    out += format_real(r.weights.get(f, Subsystem::inhibitory));
  }
  out += '\n';
}

// Header plus one line per row, every line terminated by '\n'.
inline std::string trace_to_csv(const Trace& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const auto& r : trace) append_trace_row(out, r);
  return out;
}

// Writes via a temporary file in the same directory and renames it into
// place.
inline void write_file_atomic(const std::filesystem::path& path,
                              std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

inline void write_trace(const Trace& trace, const std::filesystem::path& path) {
  write_file_atomic(path, trace_to_csv(trace));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses a trace CSV written by trace_to_csv.
inline Trace parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw ConfigError("trace: missing or unexpected header");
  }
  Trace trace;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      cells.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (cells.size() != 16) {
      throw ConfigError("trace line " + std::to_string(line_no) + ": expected 16 fields, got " +
                        std::to_string(cells.size()));
    }
    auto num = [&](std::string_view s, auto& out) {
      const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ConfigError("trace line " + std::to_string(line_no) + ": bad field '" +
                          std::string(s) + "'");
      }
    };
    auto bit = [&](std::string_view s) {
      int v = 0;
      num(s, v);
      if (v != 0 && v != 1) {
        throw ConfigError("trace line " + std::to_string(line_no) + ": expected 0 or 1");
      }
      return v == 1;
    };
    TraceRow r;
    num(cells[0], r.t);
    num(cells[1], r.E);
    num(cells[2], r.s0);
    num(cells[3], r.s1);
    num(cells[4], r.k1);
    r.food = bit(cells[5]);
    r.predator = bit(cells[6]);
    r.env.set(Feature::tree, bit(cells[7]));
    r.env.set(Feature::rock, bit(cells[8]));
    r.env.set(Feature::sun, bit(cells[9]));
    std::size_t col = 10;
    for (auto f : kFeatures) {
      num(cells[col++], r.weights.at(f, Subsystem::excitatory));
      num(cells[col++], r.weights.at(f, Subsystem::inhibitory));
    }
    trace.push_back(r);
  }
  return trace;
}

}  // namespace wanderer
