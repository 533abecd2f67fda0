#include "bosonic/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bosonic/parallel.hpp"

namespace bosonic {

unsigned default_jobs() {
  if (const char* env = std::getenv("BOSONIC_MOMENTS_JOBS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

unsigned sweep_modes(double c, double beta, unsigned n) {
  const double m = std::round(c * std::pow(double(n), beta));
  if (!(m >= 1) || m > 4e9) {
    throw std::invalid_argument("round(c n^beta) is out of range at n=" + std::to_string(n));
  }
  return static_cast<unsigned>(m);
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.n_step == 0) {
    throw std::invalid_argument("sweep needs 1 <= n-min <= n-max and n-step >= 1");
  }
  if (cfg.beta < 1) throw std::invalid_argument("sweep needs beta >= 1");
  std::vector<unsigned> ns;
  for (unsigned n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) ns.push_back(n);

  return parallel_map<SweepRow>(ns.size(), cfg.jobs, [&](std::size_t i) {
    const unsigned n = ns[i];
    const unsigned m = sweep_modes(cfg.c, cfg.beta, n);
    P2Options options = cfg.p2;
    options.seed = cfg.p2.seed + n;
    options.workers = 1;
    const P2Report report = evaluate_p2(m, n, options);
    SweepRow row;
    row.n = n;
    row.m = m;
    row.p2 = report.exact ? to_decimal(*report.exact, cfg.precision)
                          : to_decimal(report.p2, cfg.precision);
    row.asymptote = to_decimal(asymptote(m, n, cfg.c, cfg.beta), cfg.precision);
    row.method = to_string(report.method);
    row.regime = to_string(report.regime.regime);
    return row;
  });
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// One record; newlines inside quotes belong to the field. False at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.assign(1, std::string());
  bool quoted = false;
  bool any = false;
  int ch;
  while ((ch = in.get()) != std::char_traits<char>::eof()) {
    any = true;
    if (quoted) {
      if (ch == '"' && in.peek() == '"') {
        fields.back() += '"';
        in.get();
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += char(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch == '\n') {
      return true;
    } else if (ch == '\r' && in.peek() == '\n') {
      in.get();
      return true;
    } else {
      fields.back() += char(ch);
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV record");
  return any;
}

std::string join_fields(const std::vector<std::string>& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
  return out;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << "\r\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << csv_field(r.p2) << ',' << csv_field(r.asymptote) << ','
        << csv_field(r.method) << ',' << csv_field(r.regime) << "\r\n";
  }
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
  std::vector<std::string> f;
  if (!read_csv_record(in, f) || f.size() != 6 || kSweepCsvHeader != join_fields(f)) {
    throw std::invalid_argument("missing sweep CSV header");
  }
  std::vector<SweepRow> rows;
  while (read_csv_record(in, f)) {
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != 6) throw std::invalid_argument("sweep CSV row has wrong field count: " + join_fields(f));
    SweepRow r;
    r.n = static_cast<unsigned>(std::stoul(f[0]));
    r.m = static_cast<unsigned>(std::stoul(f[1]));
    r.p2 = f[2];
    r.asymptote = f[3];
    r.method = f[4];
    r.regime = f[5];
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json sweep_to_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
  nlohmann::json out;
  out["c"] = cfg.c;
  out["beta"] = cfg.beta;
  auto& list = out["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    list.push_back({{"n", r.n},
                    {"m", r.m},
                    {"p2", r.p2},
                    {"asymptote", r.asymptote},
                    {"method", r.method},
                    {"regime", r.regime}});
  }
  return out;
}

std::string sweep_plot_script(const SweepConfig& cfg, const std::string& data_path) {
  std::ostringstream s;
  s << "# m = round(" << cfg.c << " * n^" << cfg.beta << ")\n"
    << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set xlabel 'n'\n"
    << "set ylabel 'P2(m,n)'\n"
    << "plot '" << data_path << "' using 1:3 with linespoints title 'P2', \\\n"
    << "     '" << data_path << "' using 1:4 with lines dashtype 2 title 'asymptote'\n";
  return s.str();
}

}  // namespace bosonic
