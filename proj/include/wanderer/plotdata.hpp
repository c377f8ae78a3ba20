#pragma once

// Plot-ready views of a trace: the exploration series and, per neutral
// feature, the closed iteration intervals during which it was present.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "wanderer/engine.hpp"
#include "wanderer/trace_io.hpp"

namespace wanderer {

struct Interval {
  int start = 0;
  int end = 0;  // inclusive
  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::vector<std::pair<int, double>> exploration_series(const Trace& trace) {
  std::vector<std::pair<int, double>> out;
  out.reserve(trace.size());
  for (const auto& r : trace) out.emplace_back(r.t, r.E);
  return out;
}

inline std::vector<Interval> presence_intervals(const Trace& trace, Feature f) {
  std::vector<Interval> out;
  bool open = false;
  for (const auto& r : trace) {
    if (r.env.has(f)) {
      if (open && out.back().end == r.t - 1) {
        out.back().end = r.t;
      } else {
        out.push_back({r.t, r.t});
        open = true;
      }
    } else {
      open = false;
    }
  }
  return out;
}

// Writes exploration.csv (t,E) and presence.csv (feature,start,end) into dir.
inline void write_plotdata(const Trace& trace, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "'");

  std::string series = "t,E\n";
  for (const auto& [t, e] : exploration_series(trace)) {
    series += std::to_string(t) + "," + format_real(e) + "\n";
  }
  write_file_atomic(dir / "exploration.csv", series);

  std::string bands = "feature,start,end\n";
  for (auto f : kFeatures) {
    for (const auto& iv : presence_intervals(trace, f)) {
      bands += std::string(to_string(f)) + "," + std::to_string(iv.start) + "," +
               std::to_string(iv.end) + "\n";
    }
  }
  write_file_atomic(dir / "presence.csv", bands);
}

}  // namespace wanderer
