#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "dudelab/errors.hpp"
#include "dudelab/experiments.hpp"

namespace dudelab {

inline constexpr const char* kSweepCsvHeader =
    "sweep_key,sweep_value,scenario,pr_case1,pr_case2,pr_case3,pr_case4,"
    "se_case1,se_case2,se_case4,se_avg,ee_case1,ee_case2,ee_case4,ee_avg,"
    "mc_se_avg,mc_se_stderr,mc_pr_case1,mc_pr_case2,mc_pr_case4,flags";

// Full-precision scientific notation: round-trips any double exactly.
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", v);
  return buf;
}

namespace detail {

inline std::string csv_safe(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

}  // namespace detail

// Renders a sweep as CSV. Failed rows keep their key, value, and scenario but
// leave every numeric field empty and explain themselves in `flags`;
// analytic-only rows leave the mc_* fields empty.
inline std::string sweep_csv(const SweepResult& result) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const SweepRow& r : result.rows) {
    out += detail::csv_safe(result.spec.key);
    out += ',';
    out += format_full(r.value);
    out += ',';
    out += scenario_name(r.scenario);
    if (r.failed) {
      for (int i = 0; i < 18; ++i) out += ',';
      out += detail::csv_safe("failed: " + r.error);
      out += '\n';
      continue;
    }
    const double analytic[12] = {r.pr.case1,   r.pr.case2, r.pr.case3, r.pr.case4,
                                 r.se_case1,   r.se_case2, r.se_case4, r.se_avg,
                                 r.ee_case1,   r.ee_case2, r.ee_case4, r.ee_avg};
    for (double v : analytic) {
      out += ',';
      out += format_full(v);
    }
    const double mc[5] = {r.mc_se_avg, r.mc_se_stderr, r.mc_pr_case1, r.mc_pr_case2,
                          r.mc_pr_case4};
    for (double v : mc) {
      out += ',';
      if (r.has_mc) out += format_full(v);
    }
    out += ',';
    out += detail::csv_safe(r.flags);
    out += '\n';
  }
  return out;
}

// All-or-nothing file write: the content lands under a temporary name in the
// target directory and is renamed into place, so readers never observe a
// partially written file.
inline void write_text_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  std::error_code ec;
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + target.parent_path().string() + "'");
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "' to '" + target.string() + "'");
}

}  // namespace dudelab
