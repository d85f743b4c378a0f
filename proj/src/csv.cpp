#include "kb/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace kb {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  return out;
}

}  // namespace

void write_snapshot_csv(const std::filesystem::path& file, const Snapshot& snap) {
  auto out = open_for_write(file);
  out << "x,u,f_minus,f_zero,f_plus\n";
  for (std::size_t i = 0; i < snap.x.size(); ++i) {
    out << format_double(snap.x[i]) << ',' << format_double(snap.u[i]) << ','
        << format_double(snap.f[i].f_minus) << ',' << format_double(snap.f[i].f_zero) << ','
        << format_double(snap.f[i].f_plus) << '\n';
  }
}

void write_entropy_csv(const std::filesystem::path& file, const EntropySeries& series) {
  auto out = open_for_write(file);
  out << "step,time,total_H,total_mass,max_abs_u,entropy_defined\n";
  for (const auto& rec : series) {
    out << rec.step << ',' << format_double(rec.time) << ',' << format_double(rec.total_H)
        << ',' << format_double(rec.total_mass) << ',' << format_double(rec.max_abs_u) << ','
        << (rec.entropy_defined ? 1 : 0) << '\n';
  }
}

void write_sweep_csv(const std::filesystem::path& file, const std::vector<SweepRow>& rows) {
  auto out = open_for_write(file);
  out << "scheme,alpha,lambda,s2,s3,diverged,l1_error,shock_width,shock_speed,overshoot\n";
  for (const auto& r : rows) {
    out << r.scheme << ',' << format_double(r.alpha) << ',' << format_double(r.lambda) << ','
        << format_double(r.s2) << ',' << format_double(r.s3) << ',' << (r.diverged ? 1 : 0)
        << ',' << format_double(r.l1_error) << ',';
    if (r.shock_width) {
      out << *r.shock_width;
    } else {
      out << "nan";
    }
    out << ',' << format_double(r.shock_speed) << ',' << format_double(r.overshoot) << '\n';
  }
}

void write_compare_csv(const std::filesystem::path& file, const std::vector<CompareRow>& rows) {
  auto out = open_for_write(file);
  out << "step,max_deviation\n";
  for (const auto& r : rows) {
    out << r.step << ',' << format_double(r.max_deviation) << '\n';
  }
}

}  // namespace kb
