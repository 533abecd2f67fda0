#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bosonic/anticoncentration.hpp"

namespace bosonic {

struct SweepRow {
  unsigned n = 0;
  unsigned m = 0;
  std::string p2;
  std::string asymptote;
  std::string method;
  std::string regime;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepConfig {
  double c = 2.0;
  double beta = 1.0;
  unsigned n_min = 1;
  unsigned n_max = 10;
  unsigned n_step = 1;
  P2Options p2;
  int precision = 15;
  unsigned jobs = 1;
};

inline constexpr const char* kSweepCsvHeader = "n,m,p2,asymptote,method,regime";

/// m = round(c n^beta) for n = n_min, n_min + step, ..., <= n_max. Rows come
/// back in increasing n whatever the worker count.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

unsigned sweep_modes(double c, double beta, unsigned n);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(std::istream& in);

nlohmann::json sweep_to_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows);

/// gnuplot script plotting p2 and the asymptote against n from a CSV file.
std::string sweep_plot_script(const SweepConfig& cfg, const std::string& data_path);

}  // namespace bosonic
