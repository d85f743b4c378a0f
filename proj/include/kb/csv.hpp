#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kb/solver.hpp"

namespace kb {

// Round-trip formatting (17 significant digits). All CSV output goes through
// this so identical runs produce byte-identical files.
std::string format_double(double v);

void write_snapshot_csv(const std::filesystem::path& file, const Snapshot& snap);
void write_entropy_csv(const std::filesystem::path& file, const EntropySeries& series);

struct SweepRow {
  std::string scheme;
  double alpha = 0.0;  // NaN when the scheme has no alpha
  double lambda = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  bool diverged = false;
  double l1_error = 0.0;  // NaN when no exact solution applies
  std::optional<int> shock_width;
  double shock_speed = 0.0;  // NaN when undefined
  double overshoot = 0.0;    // NaN when undefined
};

void write_sweep_csv(const std::filesystem::path& file, const std::vector<SweepRow>& rows);

struct CompareRow {
  long step = 0;
  double max_deviation = 0.0;
};

void write_compare_csv(const std::filesystem::path& file, const std::vector<CompareRow>& rows);

}  // namespace kb
