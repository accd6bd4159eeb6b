// Output formatting: versioned CSV files, SVG heatmaps, atomic file writes.
#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "jrsp/optimize.hpp"

namespace jrsp {

inline constexpr const char* kVersion = "1.0.0";

// FNV-1a 64-bit hash of the canonical flag string, printed as 16 hex digits.
inline std::string flags_hash(const std::string& flags) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : flags) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// `# jrsp-lab v<semver> <command> <flags-hash>`
inline std::string header_comment(const std::string& command,
                                  const std::string& flags) {
  return "# jrsp-lab v" + std::string(kVersion) + " " + command + " " +
         flags_hash(flags);
}

// 12 significant digits, locale-independent.
inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Write to a temporary file in the same directory, then rename into place, so
// a failed run never leaves a partial output file.
inline void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path() && !target.parent_path().empty() &&
      !fs::exists(target.parent_path()))
    throw std::runtime_error("output directory does not exist: " +
                             target.parent_path().string());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp.string());
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

inline std::string sweep_to_csv(const SweepGrid& grid, const std::string& flags) {
  std::ostringstream os;
  os << header_comment("sweep", flags) << "\n";
  os << "pa,pc,f_opt,theta_opt,xi_opt,quantum\n";
  for (const auto& c : grid.cells) {
    const double f = grid.engine == SweepEngine::Analytic ? c.f_opt_analytic
                     : grid.engine == SweepEngine::Numeric
                         ? c.f_opt_numeric
                         : std::max(c.f_opt_analytic, c.f_opt_numeric);
    os << fmt12(c.p_a) << ',' << fmt12(c.p_c) << ',' << fmt12(f) << ','
       << fmt12(c.theta_opt) << ',' << fmt12(c.xi_opt) << ','
       << (c.quantum ? "true" : "false") << "\n";
  }
  return os.str();
}

inline std::string fig5_to_csv(const Fig5Result& r, const std::string& flags) {
  std::ostringstream os;
  os << header_comment("fig5", flags) << "\n";
  os << "pA,f_A0_opt,f_AA_opt,f_AA_fixed\n";
  for (const auto& row : r.rows)
    os << fmt12(row.p_A) << ',' << fmt12(row.f_A0_opt) << ','
       << fmt12(row.f_AA_opt) << ',' << fmt12(row.f_AA_fixed) << "\n";
  return os.str();
}

// Minimal SVG heatmap: quantum cells colored on a linear ramp from light at
// f = 2/5 to dark at f = 1; classical cells stay white.
inline std::string sweep_to_svg(const SweepGrid& grid) {
  const int n = grid.n;
  const int cell = 8, margin = 10;
  const int size = 2 * margin + n * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\">\n";
  os << "<rect width=\"" << size << "\" height=\"" << size
     << "\" fill=\"white\"/>\n";
  for (const auto& c : grid.cells) {
    if (!c.quantum) continue;
    const double f = grid.engine == SweepEngine::Numeric
                         ? c.f_opt_numeric
                         : std::max(c.f_opt_analytic, c.f_opt_numeric);
    // t = 0 at the classical limit, 1 at perfect fidelity.
    double t = (f - classical_limit()) / (1.0 - classical_limit());
    t = std::min(1.0, std::max(0.0, t));
    const int r0 = 226, g0 = 238, b0 = 255;  // light end
    const int r1 = 8, g1 = 48, b1 = 107;     // dark end
    const int rr = int(r0 + t * (r1 - r0) + 0.5);
    const int gg = int(g0 + t * (g1 - g0) + 0.5);
    const int bb = int(b0 + t * (b1 - b0) + 0.5);
    const int xi = int(c.p_a * (n - 1) + 0.5);
    const int yi = int(c.p_c * (n - 1) + 0.5);
    os << "<rect x=\"" << margin + xi * cell << "\" y=\""
       << margin + (n - 1 - yi) * cell << "\" width=\"" << cell << "\" height=\""
       << cell << "\" fill=\"rgb(" << rr << ',' << gg << ',' << bb << ")\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace jrsp
