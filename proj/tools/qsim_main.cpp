// Command-line entry point: parameter sweeps to CSV, rate fits, sudden-death
// extraction, and the full verification suite.
#include "qsim/acceptance.hpp"
#include "qsim/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int run_sweep_command(const std::string& state, const std::string& channel,
                      const std::vector<int>& n_list, double gamma_t_max, int points,
                      const std::vector<std::string>& methods, const std::string& out) {
  qsim::SweepConfig cfg;
  cfg.state = qsim::parse_state_family(state);
  cfg.channel = qsim::parse_channel_kind(channel);
  cfg.n_list = n_list;
  cfg.gamma_t_max = gamma_t_max;
  cfg.grid_points = points;
  for (const auto& m : methods) cfg.methods.push_back(qsim::parse_method(m));
  cfg.out_path = out;

  std::vector<qsim::MethodDiscrepancy> report;
  const auto curve = qsim::run_sweep(cfg, &report);
  qsim::emit_csv(curve, cfg.out_path);
  for (const auto& d : report) {
    std::cerr << "n=" << d.n << " max |" << qsim::to_string(d.a) << " - "
              << qsim::to_string(d.b) << "| = " << qsim::format_double(d.max_abs) << "\n";
  }
  std::cout << "wrote " << curve.size() << " points to " << out << "\n";
  return 0;
}

int run_rates_command(const std::string& in, const std::string& out) {
  const auto points = qsim::read_curve_csv(in);
  std::vector<qsim::RateFit> fits;
  for (const auto& [key, curve] : qsim::group_into_curves(points)) {
    fits.push_back(qsim::fit_decay_rate(curve));
  }
  qsim::emit_rates_csv(fits, out);
  std::cout << "wrote " << fits.size() << " fits to " << out << "\n";
  return 0;
}

int run_tsep_command(const std::string& in, const std::string& out) {
  const auto points = qsim::read_curve_csv(in);
  std::vector<qsim::TsepResult> results;
  for (const auto& [key, curve] : qsim::group_into_curves(points)) {
    results.push_back(
        {key.state, key.channel, key.n, key.method, qsim::detect_t_sep(curve)});
  }
  qsim::emit_tsep_csv(results, out);
  std::cout << "wrote " << results.size() << " rows to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GHZ/W decoherence sweeps and entanglement verification"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "evaluate e_gl curves onto a CSV grid");
  std::string state, channel, out_path;
  std::vector<int> n_list;
  std::vector<std::string> methods;
  double gamma_t_max = 3.0;
  int points = 101;
  sweep->add_option("--state", state, "ghz or w")->required();
  sweep->add_option("--channel", channel, "dissipative, dephasing or noisy")->required();
  sweep->add_option("--n", n_list, "qubit counts, e.g. 2,4,6,8")
      ->required()
      ->delimiter(',');
  sweep->add_option("--gamma-t-max", gamma_t_max, "grid upper end (default 3)");
  sweep->add_option("--points", points, "grid size (default 101)");
  sweep->add_option("--method", methods, "subset of closed,kraus,ode")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", out_path, "output CSV path")->required();

  // rates
  auto* rates = app.add_subcommand("rates", "fit decay rates per curve in a CSV");
  std::string rates_in, rates_out;
  rates->add_option("--in", rates_in, "curve CSV")->required();
  rates->add_option("--out", rates_out, "rates CSV")->required();

  // tsep
  auto* tsep = app.add_subcommand("tsep", "locate sudden-death times per curve");
  std::string tsep_in, tsep_out;
  tsep->add_option("--in", tsep_in, "curve CSV")->required();
  tsep->add_option("--out", tsep_out, "t_sep CSV")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sweep->parsed()) {
      return run_sweep_command(state, channel, n_list, gamma_t_max, points, methods,
                               out_path);
    }
    if (rates->parsed()) {
      return run_rates_command(rates_in, rates_out);
    }
    if (tsep->parsed()) {
      return run_tsep_command(tsep_in, tsep_out);
    }
    if (verify->parsed()) {
      return qsim::run_acceptance_and_report(std::cout) == 0 ? 0 : 3;
    }
  } catch (const qsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qsim::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const qsim::NumericError& e) {
    std::cerr << "numeric invariant violation: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
