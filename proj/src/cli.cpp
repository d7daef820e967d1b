#include "dmt/cli.hpp"

#include "dmt/hk.hpp"
#include "dmt/multilevel.hpp"
#include "dmt/outage.hpp"
#include "dmt/outer.hpp"
#include "dmt/special.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dmt {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numbers go through format_number so JSON and CSV carry the same digits.
double rounded(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<ordered_json> row) { rows_.push_back(std::move(row)); }

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
      os << '\n';
    }
  }

  ordered_json to_json() const {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows_) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = row[i];
      arr.push_back(obj);
    }
    return arr;
  }

 private:
  static std::string cell(const ordered_json& v) {
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<ordered_json>> rows_;
};

ordered_json num(double x) { return rounded(x); }

// key=value lines; blank lines and '#' comments are skipped. Keys already
// given on the command line win.
void apply_config(const std::string& path, std::vector<std::string>& args) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::string line;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = "--" + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == key || a.rfind(key + "=", 0) == 0;
    });
    if (!given) extra.push_back(key + "=" + value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
}

std::string config_path(std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      std::string p = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      return p;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      std::string p = args[i].substr(9);
      args.erase(args.begin() + i);
      return p;
    }
  }
  return {};
}

struct Common {
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<CurveRow> curve_rows(double alpha, double d_min, double d_max, double d_step,
                                 bool three_level, double three_level_step) {
  if (!(d_min >= 0.0 && d_min <= d_max && d_max <= 1.0))
    throw std::invalid_argument("curve: need 0 <= d-min <= d-max <= 1");
  if (!(d_step > 0.0)) throw std::invalid_argument("curve: d-step must be > 0");
  if (!(alpha >= 0.0)) throw std::invalid_argument("curve: alpha must be >= 0");

  std::vector<double> ds;
  const auto n = static_cast<long>(std::floor((d_max - d_min) / d_step + 1e-9));
  for (long k = 0; k <= n; ++k) ds.push_back(std::min(d_max, d_min + static_cast<double>(k) * d_step));
  if (ds.back() < d_max - 1e-12) ds.push_back(d_max);

  std::vector<CurveRow> rows;
  for (double d : ds) {
    const SymDmtQuery q{alpha, d};
    const TableRate t = hk_table_rate(q);
    CurveRow row{d, t.rate, worst_case_outer(q), std::nullopt, std::string(t.regime)};
    if (three_level) row.r_three_level = optimize_three_level(q, three_level_step).rate;
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diversity-multiplexing tradeoff of the two-user interference channel", "dmt"};
  app.require_subcommand(1);

  // curve
  Common curve_c;
  double c_alpha = 0, c_dmin = 0, c_dmax = 1, c_dstep = 0.01, c_step = kDefaultThreeLevelStep;
  bool c_three = false;
  auto* curve = app.add_subcommand("curve", "Symmetric DMT curves at one alpha");
  curve->add_option("--alpha", c_alpha)->required();
  curve->add_option("--d-min", c_dmin, "")->capture_default_str();
  curve->add_option("--d-max", c_dmax, "")->capture_default_str();
  curve->add_option("--d-step", c_dstep, "")->capture_default_str();
  curve->add_flag("--three-level", c_three, "Add the optimized three-level rate");
  curve->add_option("--step", c_step, "Three-level optimizer grid step")->capture_default_str();
  add_common(curve, curve_c);

  // simulate
  Common sim_c;
  double s_d = 0;
  std::vector<double> s_snr = {20, 30, 40, 50, 60};
  std::int64_t s_samples = 1000000;
  std::uint64_t s_seed = 1;
  std::string s_dist = "rayleigh";
  double s_m = 1.0;
  std::optional<double> s_kh, s_kg;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo outage probability and slope");
  sim->add_option("--d", s_d)->required();
  sim->add_option("--snr-db", s_snr, "SNR list in dB")->delimiter(',')->capture_default_str();
  sim->add_option("--samples", s_samples)->capture_default_str()->check(CLI::PositiveNumber);
  sim->add_option("--seed", s_seed)->capture_default_str();
  sim->add_option("--dist", s_dist, "rayleigh | nakagami-m")->capture_default_str();
  sim->add_option("--m", s_m, "Nakagami shape")->capture_default_str();
  sim->add_option("--kappa-h", s_kh, "Defaults to the distribution's exponent");
  sim->add_option("--kappa-g", s_kg, "Defaults to the distribution's exponent");
  add_common(sim, sim_c);

  // z-region
  Common z_c;
  double z_alpha = 0, z_d = 0;
  auto* zr = app.add_subcommand("z-region", "Z channel inner and outer regions");
  zr->add_option("--alpha1", z_alpha)->required();
  zr->add_option("--d", z_d)->required();
  add_common(zr, z_c);

  // crosslink
  Common x_c;
  double x_alpha = 0, x_d = 0;
  auto* xl = app.add_subcommand("crosslink", "Channel with fading cross links only");
  xl->add_option("--alpha", x_alpha)->required();
  xl->add_option("--d", x_d)->required();
  add_common(xl, x_c);

  // optimize
  Common o_c;
  double o_alpha = 0, o_d = 0;
  std::optional<double> o_step;
  int o_levels = 2;
  bool o_unequal = false;
  auto* opt = app.add_subcommand("optimize", "Optimize the power split");
  opt->add_option("--alpha", o_alpha)->required();
  opt->add_option("--d", o_d)->required();
  opt->add_option("--levels", o_levels)->capture_default_str()->check(CLI::IsMember({2, 3}));
  opt->add_option("--step", o_step, "Grid step (1e-3 for two levels, 1/152 for three)");
  opt->add_flag("--unequal-splits", o_unequal, "Search v1 != v2 (two levels)");
  add_common(opt, o_c);

  // Accepted everywhere so one config file can drive every command.
  std::uint64_t unused_seed = 0;
  for (auto* cmd : {curve, zr, xl, opt}) cmd->add_option("--seed", unused_seed)->group("");

  try {
    const std::string config = config_path(args);
    if (!config.empty()) apply_config(config, args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream os;
  const auto emit = [&](const Common& c, const Table& t) {
    if (c.format == "json")
      os << t.to_json().dump(2) << '\n';
    else
      t.write_csv(os);
  };

  try {
    if (curve->parsed()) {
      if (!(c_dmin >= 0.0 && c_dmin <= c_dmax && c_dmax <= 1.0) || !(c_dstep > 0.0)) {
        err << "error: need 0 <= d-min <= d-max <= 1 and d-step > 0\n";
        return 2;
      }
      std::vector<std::string> cols = {"d", "r_hk", "r_outer"};
      if (c_three) cols.push_back("r_3l");
      cols.push_back("regime");
      Table t(cols);
      for (const auto& r : curve_rows(c_alpha, c_dmin, c_dmax, c_dstep, c_three, c_step)) {
        std::vector<ordered_json> row = {num(r.d), num(r.r_hk), num(r.r_outer)};
        if (r.r_three_level) row.push_back(num(*r.r_three_level));
        row.push_back(r.regime);
        t.add(row);
      }
      emit(curve_c, t);
    } else if (sim->parsed()) {
      const auto dist = FadingDistribution::from_name(s_dist, s_m);
      const OutageSpec spec{s_kh.value_or(dist.near_zero_exponent()),
                            s_kg.value_or(dist.near_zero_exponent()), s_d};
      Table t({"snr_db", "prob", "n_samples", "seed"});
      std::vector<OutageEstimate> fit;
      for (double snr : s_snr) {
        const OutageEstimate e = estimate_outage(spec, snr, s_samples, s_seed, dist);
        t.add({num(e.snr_db), num(e.prob), e.n_samples, e.seed});
        if (e.prob > 0.0)
          fit.push_back(e);
        else
          err << "warning: zero outage at " << format_number(snr)
              << " dB; left out of the slope fit (increase samples or lower SNR)\n";
      }
      const double slope = fit_diversity_slope(fit);
      if (sim_c.format == "json") {
        ordered_json j = {{"rows", t.to_json()}, {"slope", num(slope)}};
        os << j.dump(2) << '\n';
      } else {
        t.write_csv(os);
        os << "slope," << format_number(slope) << '\n';
      }
    } else if (zr->parsed()) {
      if (!(z_d >= 0.0 && z_d <= 1.0)) {
        err << "error: need 0 <= d <= 1\n";
        return 2;
      }
      const auto in = z_inner_region(1, 1, z_alpha, z_d, z_d);
      const auto outr = z_outer_region(1, 1, z_alpha, z_d, z_d);
      const bool match = z_regions_match(z_alpha, z_d);
      Table t({"bound", "r1_max", "r2_max", "sum_max"});
      t.add({"inner", num(in.r1_max), num(in.r2_max), num(in.sum_max)});
      t.add({"outer", num(outr.r1_max), num(outr.r2_max), num(outr.sum_max)});
      if (z_c.format == "json") {
        ordered_json j = {{"regions", t.to_json()}, {"match", match}};
        os << j.dump(2) << '\n';
      } else {
        t.write_csv(os);
        os << "match=" << (match ? "true" : "false") << '\n';
      }
    } else if (xl->parsed()) {
      if (!(x_alpha >= 0.0 && x_d >= 0.0)) {
        err << "error: need alpha >= 0 and d >= 0\n";
        return 2;
      }
      const auto r = crosslink_scheme_rates(x_alpha, x_d);
      Table t({"orthogonal", "tin", "hk", "optimum"});
      t.add({num(r.orthogonal), num(r.tin), num(r.hk), num(crosslink_dmt(x_alpha, x_d))});
      emit(x_c, t);
    } else if (opt->parsed()) {
      if (o_step && !(*o_step > 0.0)) {
        err << "error: --step must be > 0\n";
        return 2;
      }
      if (!(o_d >= 0.0)) {
        err << "error: need d >= 0\n";
        return 2;
      }
      const SymDmtQuery q{o_alpha, o_d};
      if (o_levels == 2) {
        const auto r = optimize_power_split(q, o_step.value_or(kDefaultStep), !o_unequal);
        Table t({"levels", "v1", "v2", "rate", "all_public"});
        t.add({2, num(r.split.v1), num(r.split.v2), num(r.rate), r.all_public});
        emit(o_c, t);
      } else {
        const auto r = optimize_three_level(q, o_step.value_or(kDefaultThreeLevelStep));
        Table t({"levels", "v1", "v2", "gamma", "rate", "all_public"});
        t.add({3, num(r.params.v1), num(r.params.v2), num(r.params.gamma), num(r.rate),
               r.all_public});
        emit(o_c, t);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  out << os.str();
  return 0;
}

}  // namespace dmt
