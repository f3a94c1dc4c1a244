// altsum: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "altsum/altsum.hpp"

using namespace altsum;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string id_list() {
  std::string s;
  for (const auto& e : kRegistry) s += (s.empty() ? "" : ", ") + std::string(e.id);
  return s;
}

FunctionDescriptor require_function(const std::string& id) {
  auto f = parse_function(id);
  if (!f) throw UsageError("unknown function '" + id + "'; known ids: " + id_list() + " (prefix 1/ for reciprocals)");
  return *f;
}

std::vector<std::uint64_t> grid_of(const Config& c) { return power_of_two_grid(c.grid_lo, c.grid_hi); }

void require_cap(std::uint64_t x, const Config& c) {
  if (x > c.sieve_cap) throw CapacityError("x = " + std::to_string(x) + " exceeds sieve cap " + std::to_string(c.sieve_cap));
}

/// Runs tasks on `jobs` threads; results keep task order.
std::vector<std::string> run_parallel(const std::vector<std::function<std::string()>>& tasks, unsigned jobs) {
  std::vector<std::string> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) out[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::min<std::size_t>(jobs, tasks.size()); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string csv_header() { return "function,mode,x,exact,predicted,residual,normalized"; }

std::string csv_rows(const SumReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.grid.size(); ++i)
    os << r.function << ',' << to_string(r.mode) << ',' << r.grid[i] << ',' << to_string(r.exact[i]) << ','
       << format_real(r.predicted[i]) << ',' << format_real(r.residual[i]) << ',' << format_real(r.normalized[i])
       << '\n';
  return os.str();
}

ordered_json summary_json(const AsymptoticModel& m, const SumReport& r) {
  ordered_json j;
  j["function"] = r.function;
  j["mode"] = to_string(r.mode);
  j["model"] = m.formula;
  j["asserted"] = m.asserted;
  j["theory_exponent"] = static_cast<double>(m.error.x_power);
  if (r.fitted_exponent) j["fitted_exponent"] = static_cast<double>(*r.fitted_exponent);
  else j["fitted_exponent"] = nullptr;
  static const char* verdicts[] = {"ok", "warning", "failure", "undefined"};
  j["exponent_check"] = verdicts[static_cast<int>(check_exponent(m, r))];
  return j;
}

// ---- verify ----------------------------------------------------------------

struct CheckLine {
  bool pass;
  std::string text;
};

std::vector<CheckLine> verify_model(const AsymptoticModel& m, const Config& c) {
  std::vector<CheckLine> lines;
  const auto grid = grid_of(c);
  require_cap(grid.back(), c);
  const SumReport r = run_report(m, grid);
  const std::string tag = m.function + " " + to_string(m.mode);
  const ExponentVerdict v = check_exponent(m, r);
  const std::string fitted = r.fitted_exponent ? format_real(*r.fitted_exponent, 4) : "undefined";
  if (m.asserted) {
    lines.push_back({v != ExponentVerdict::failure,
                     tag + " exponent fitted=" + fitted + " theory=" + format_real(m.error.x_power, 4) +
                         (v == ExponentVerdict::warning ? " (warning)" : "")});
    const std::size_t last = r.grid.size() - 1;
    if (m.shape == Shape::quadratic || m.shape == Shape::quadratic_log) {
      const Real ratio = to_real(r.exact[last]) / r.predicted[last];
      lines.push_back({std::fabs(ratio - 1) <= 1e-2L,
                       tag + " ratio at x=" + std::to_string(r.grid[last]) + " is " + format_real(ratio, 10)});
    } else if (m.shape == Shape::log_plus_const) {
      lines.push_back({std::fabs(r.residual[last]) <= 1e-2L,
                       tag + " residual at x=" + std::to_string(r.grid[last]) + " is " + format_real(r.residual[last], 6)});
    }
  } else {
    lines.push_back({true, tag + " exploratory, fitted exponent " + fitted});
  }
  return lines;
}

std::vector<CheckLine> verify_function(const FunctionDescriptor& f, SumMode mode, std::uint64_t x, const Config& c) {
  std::vector<CheckLine> lines;
  require_cap(x, c);
  if (mode == SumMode::alternating) {
    const ValueTable t = sieve_values(f, x, c.sieve_cap);
    const ConvolutionReport conv = verify_convolution_report(t);
    lines.push_back({conv.holds, f.id() + " convolution identity to " + std::to_string(x) +
                                     (conv.holds ? "" : " fails at n=" + std::to_string(*conv.first_failure))});
    const Value direct = alternating_sum_direct(t, x), kernel = alternating_sum_via_kernel(t, x);
    lines.push_back({to_mpq(direct) == to_mpq(kernel), f.id() + " direct sum " + to_string(direct) + " kernel sum " +
                                                           to_string(kernel)});
  }
  if (const AsymptoticModel* m = find_model(f.id(), mode)) {
    auto more = verify_model(*m, c);
    lines.insert(lines.end(), more.begin(), more.end());
  } else {
    lines.push_back({true, f.id() + " " + to_string(mode) + " has no registered main-term model"});
  }
  return lines;
}

std::string render(const std::vector<CheckLine>& lines, bool& ok) {
  std::string s;
  for (const auto& l : lines) {
    ok = ok && l.pass;
    s += (l.pass ? "PASS " : "FAIL ") + l.text + "\n";
  }
  return s;
}

// ---- explore ---------------------------------------------------------------

int explore(const std::string& topic, const Config& c, std::vector<std::uint64_t> xs) {
  if (topic == "kk-sign") {
    if (xs.empty()) xs = {1, 2, 10, 100, 1000, 10000, 100000, 1000000};
    for (auto x : xs) require_cap(x, c);
    std::cout << "x,K_altern,K,ratio\n";
    for (const auto& p : kk_sign_probe(xs))
      std::cout << p.x << ',' << format_real(to_real(p.altern)) << ',' << format_real(to_real(p.plain)) << ','
                << format_real(p.ratio) << '\n';
    return kExitOk;
  }
  std::string fid;
  if (topic == "sigma_star") fid = "1/sigma_star";
  else if (topic == "phi_star") fid = "1/phi_star";
  else if (topic == "tau_e") fid = "tau_e";
  else if (topic == "abelian") fid = "1/abelian";
  else if (topic == "beta") fid = "1/beta";
  else throw UsageError("unknown topic '" + topic + "'; topics: kk-sign, sigma_star, phi_star, tau_e, abelian, beta");
  const AsymptoticModel* m = find_model(fid, SumMode::alternating);
  const auto grid = grid_of(c);
  require_cap(grid.back(), c);
  const SumReport r = run_report(*m, grid);
  std::cout << csv_header() << '\n' << csv_rows(r);
  std::cout << "# model " << m->formula << '\n';
  std::cout << "# fitted_exponent " << (r.fitted_exponent ? format_real(*r.fitted_exponent, 6) : "undefined") << '\n';
  if (topic == "tau_e") {
    const Real ratio = mean_value_alternating(fn(Fn::tau_e), c.prime_limit).value /
                       mean_value(fn(Fn::tau_e), c.prime_limit).value;
    const Real K = named_constant("K").value;
    std::cout << "# M_altern/M " << format_real(ratio) << " 2/(1+K)-1 " << format_real(2 / (1 + K) - 1) << '\n';
  }
  return kExitOk;
}

std::vector<std::uint64_t> parse_q(const std::string& s) {
  std::vector<std::uint64_t> q;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      q.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw UsageError("--q expects a comma-separated list of primes");
    }
  }
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating sums of multiplicative arithmetic functions"};
  app.require_subcommand(1);
  std::string config_path, format_flag, grid_flag;
  unsigned jobs = 0;
  std::uint64_t sieve_cap = 0, prime_limit = 0;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--jobs", jobs, "worker threads");
  app.add_option("--sieve-cap", sieve_cap, "largest x that may be sieved");
  app.add_option("--prime-limit", prime_limit, "primes used in Euler products");
  app.add_option("--format", format_flag, "plain, csv or json");
  app.add_option("--grid", grid_flag, "lo:hi, grid x = 2^lo .. 2^hi");

  auto* eval_cmd = app.add_subcommand("eval", "exact value f(n)");
  std::string eval_fn;
  std::uint64_t eval_n = 0;
  eval_cmd->add_option("function", eval_fn)->required();
  eval_cmd->add_option("n", eval_n)->required();

  auto* alt_cmd = app.add_subcommand("altsum", "exact signed partial sum");
  std::string alt_fn, alt_mode = "direct", alt_q;
  std::uint64_t alt_x = 0;
  bool alt_plain = false;
  alt_cmd->add_option("--function", alt_fn)->required();
  alt_cmd->add_option("--x", alt_x)->required();
  alt_cmd->add_option("--mode", alt_mode, "direct, kernel or both")->check(CLI::IsMember({"direct", "kernel", "both"}));
  alt_cmd->add_option("--q", alt_q, "comma-separated primes for the t_Q sign");
  alt_cmd->add_flag("--plain", alt_plain, "unsigned sum");

  auto* bell_cmd = app.add_subcommand("bell", "coefficients b_nu of 1/S_f(x), S_f the Bell series at p = 2");
  std::string bell_fn;
  std::size_t bell_n = 8;
  bool bell_recip = false, bell_kernel = false, bell_coeffs_only = false;
  bell_cmd->add_option("--function", bell_fn)->required();
  bell_cmd->add_option("--n", bell_n);
  bell_cmd->add_flag("--reciprocal", bell_recip, "use 1/f");
  bell_cmd->add_flag("--coeffs", bell_coeffs_only, "print a_nu = f(2^nu) instead");
  bell_cmd->add_flag("--kernel", bell_kernel, "print the convolution kernel h_f(2^nu) instead");

  auto* const_cmd = app.add_subcommand("constants", "named constants");
  bool const_list = false, const_all = false;
  std::vector<std::string> const_ids;
  const_cmd->add_flag("--list", const_list);
  const_cmd->add_flag("--all", const_all);
  const_cmd->add_option("--id", const_ids);
  const_cmd->add_option("--prime-limit", prime_limit, "primes used in Euler products");

  auto* verify_cmd = app.add_subcommand("verify", "identity and main-term checks");
  std::string verify_fn, verify_mode = "alternating";
  std::uint64_t verify_x = 10000;
  bool verify_all = false;
  verify_cmd->add_option("--function", verify_fn);
  verify_cmd->add_option("--mode", verify_mode)->check(CLI::IsMember({"plain", "alternating"}));
  verify_cmd->add_option("--x", verify_x, "range for the exact identities");
  verify_cmd->add_flag("--all", verify_all, "every registered model");

  auto* report_cmd = app.add_subcommand("report", "residual report against the main term");
  std::string report_fn, report_mode = "alternating", report_q, summary_out;
  report_cmd->add_option("--function", report_fn)->required();
  report_cmd->add_option("--mode", report_mode)->check(CLI::IsMember({"plain", "alternating", "tq"}));
  report_cmd->add_option("--q", report_q, "primes for --mode tq (sigma only)");
  report_cmd->add_option("--grid", grid_flag, "lo:hi");
  report_cmd->add_option("--format", format_flag, "csv or json");
  report_cmd->add_option("--summary-out", summary_out, "write the JSON summary here");

  auto* explore_cmd = app.add_subcommand("explore", "exploratory data");
  std::string topic;
  std::vector<std::uint64_t> explore_x;
  explore_cmd->add_option("--topic", topic)->required();
  explore_cmd->add_option("--x", explore_x, "x values (kk-sign)");
  explore_cmd->add_option("--grid", grid_flag, "lo:hi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = load_config(config_path, cfg);
    if (jobs) cfg.jobs = jobs;
    if (sieve_cap) cfg.sieve_cap = sieve_cap;
    if (prime_limit) cfg.prime_limit = prime_limit;
    if (!format_flag.empty()) apply_setting(cfg, "format", format_flag);
    if (!grid_flag.empty()) apply_setting(cfg, "grid", grid_flag);
    validate(cfg);

    if (*eval_cmd) {
      const auto f = require_function(eval_fn);
      if (eval_n == 0) throw UsageError("n must be positive");
      std::cout << to_string(eval(f, eval_n, std::max<std::uint64_t>(cfg.sieve_cap, 2))) << '\n';
      return kExitOk;
    }

    if (*alt_cmd) {
      const auto f = require_function(alt_fn);
      require_cap(alt_x, cfg);
      const ValueTable t = sieve_values(f, alt_x, cfg.sieve_cap);
      std::vector<Value> out;
      if (!alt_q.empty()) {
        const QSet q = QSet::of(parse_q(alt_q));
        if (alt_mode != "kernel") out.push_back(tq_sum(t, q, alt_x));
        if (alt_mode != "direct") {
          if (f != fn(Fn::sigma)) throw UsageError("kernel t_Q sums are available for sigma only");
          out.push_back(tq_sum_sigma_kernel(t, q, alt_x));
        }
      } else if (alt_plain) {
        out.push_back(partial_sum(t, alt_x, Sign::plain()));
      } else {
        if (alt_mode != "kernel") out.push_back(alternating_sum_direct(t, alt_x));
        if (alt_mode != "direct") out.push_back(alternating_sum_via_kernel(t, alt_x));
      }
      for (const auto& v : out) std::cout << to_string(v) << '\n';
      if (out.size() == 2 && to_mpq(out[0]) != to_mpq(out[1])) return kExitVerify;
      return kExitOk;
    }

    if (*bell_cmd) {
      auto f = require_function(bell_fn);
      if (bell_recip) f.reciprocal = !f.reciprocal;
      CoefficientSeries s = bell_coeffs(f, bell_n);
      if (bell_kernel) s = kernel_of(f, bell_n).values;
      else if (!bell_coeffs_only) s = reciprocal_coeffs(s);
      for (std::size_t nu = 0; nu < s.size(); ++nu) std::cout << nu << ' ' << s[nu].get_str() << '\n';
      return kExitOk;
    }

    if (*const_cmd) {
      if (const_list) {
        for (const auto& c : constant_list()) std::cout << c.id << "  " << c.description << '\n';
        return kExitOk;
      }
      if (const_all)
        for (const auto& c : constant_list()) const_ids.emplace_back(c.id);
      if (const_ids.empty()) throw UsageError("constants: give --list, --all or --id");
      for (const auto& id : const_ids) {
        bool known = false;
        for (const auto& c : constant_list()) known = known || c.id == id;
        if (!known) throw UsageError("unknown constant id '" + id + "' (see constants --list)");
      }
      std::vector<std::function<std::string()>> tasks;
      for (const auto& id : const_ids)
        tasks.push_back([id, &cfg] { return format_constant(id, named_constant(id, cfg.prime_limit)); });
      for (const auto& line : run_parallel(tasks, cfg.jobs)) std::cout << line << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<std::function<std::string()>> tasks;
      std::atomic<bool> all_ok{true};
      if (verify_all) {
        for (const auto& m : models())
          tasks.push_back([&m, &cfg, &all_ok] {
            bool ok = true;
            std::string s = render(verify_model(m, cfg), ok);
            if (!ok) all_ok = false;
            return s;
          });
      } else {
        if (verify_fn.empty()) throw UsageError("verify: give --function or --all");
        const auto f = require_function(verify_fn);
        const SumMode mode = *parse_mode(verify_mode);
        tasks.push_back([f, mode, verify_x, &cfg, &all_ok] {
          bool ok = true;
          std::string s = render(verify_function(f, mode, verify_x, cfg), ok);
          if (!ok) all_ok = false;
          return s;
        });
      }
      for (const auto& s : run_parallel(tasks, cfg.jobs)) std::cout << s;
      return all_ok ? kExitOk : kExitVerify;
    }

    if (*report_cmd) {
      const auto f = require_function(report_fn);
      const SumMode mode = *parse_mode(report_mode);
      AsymptoticModel tq_model;
      const AsymptoticModel* m = nullptr;
      if (mode == SumMode::tq) {
        if (f != fn(Fn::sigma)) throw UsageError("report --mode tq is available for sigma only");
        if (report_q.empty()) throw UsageError("report --mode tq needs --q");
        tq_model = sigma_q_model(QSet::of(parse_q(report_q)));
        m = &tq_model;
      } else {
        m = find_model(f.id(), mode);
        if (!m) throw UsageError("no model registered for " + f.id() + " " + report_mode);
      }
      const auto grid = grid_of(cfg);
      require_cap(grid.back(), cfg);
      const SumReport r = run_report(*m, grid);
      const ordered_json summary = summary_json(*m, r);
      if (cfg.format == OutputFormat::json) {
        ordered_json j = summary;
        j["rows"] = ordered_json::array();
        for (std::size_t i = 0; i < r.grid.size(); ++i)
          j["rows"].push_back({{"x", r.grid[i]},
                               {"exact", to_string(r.exact[i])},
                               {"predicted", format_real(r.predicted[i])},
                               {"residual", format_real(r.residual[i])},
                               {"normalized", format_real(r.normalized[i])}});
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << csv_header() << '\n' << csv_rows(r);
      }
      if (!summary_out.empty()) {
        std::FILE* fp = std::fopen(summary_out.c_str(), "w");
        if (!fp) throw UsageError("cannot write " + summary_out);
        std::fputs((summary.dump(2) + "\n").c_str(), fp);
        std::fclose(fp);
      }
      return kExitOk;
    }

    if (*explore_cmd) return explore(topic, cfg, explore_x);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InternalError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitOk;
}
