// Experiment orchestration: parameter sweeps over gamma*t with up to three
// methods per curve, decay-rate fitting, sudden-death detection and CSV
// emission.
#pragma once

#include "qsim/channels.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateFamily { Ghz, W };
enum class Method { Closed, Kraus, Ode };

std::string to_string(StateFamily s);
std::string to_string(Method m);
StateFamily parse_state_family(const std::string& name);
Method parse_method(const std::string& name);

struct SweepConfig {
  StateFamily state = StateFamily::W;
  ChannelKind channel = ChannelKind::Dephasing;
  std::vector<int> n_list;
  double gamma_t_max = 3.0;
  int grid_points = 101;
  std::vector<Method> methods;
  std::string out_path;  // consumed by the CLI, not by run_sweep
};

struct CurvePoint {
  StateFamily state;
  ChannelKind channel;
  int n;
  double gamma_t;
  double e_gl;
  Method method;
};

struct RateFit {
  StateFamily state;
  ChannelKind channel;
  int n;
  Method method;
  double alpha;       // decay rate in units of gamma: e_gl ~ exp(-alpha * gamma t)
  double residual;    // RMS of the log-fit residuals
  int points_used;
};

struct TsepResult {
  StateFamily state;
  ChannelKind channel;
  int n;
  Method method;
  std::optional<double> t_sep;
};

struct MethodDiscrepancy {
  int n;
  Method a;
  Method b;
  double max_abs;
};

/// Closed-form e_gl where one exists (W any channel; GHZ dephasing).
std::optional<double> closed_e_gl(StateFamily state, ChannelKind channel, int n,
                                  double gamma_t);

/// Evaluate the configured grid. Points come back sorted by
/// (state, channel, n, method, gamma_t). Curves are checked for
/// monotone decay, and whenever two methods are requested their maximum
/// pointwise discrepancy is checked (kraus/ode 1e-7, kraus/closed 1e-9)
/// and reported through `report` when non-null.
std::vector<CurvePoint> run_sweep(const SweepConfig& config,
                                  std::vector<MethodDiscrepancy>* report = nullptr);

/// Least-squares slope of ln(e_gl) vs gamma*t over one curve; points with
/// e_gl <= 1e-6 are excluded, and fewer than 3 usable points is an error.
RateFit fit_decay_rate(std::span<const CurvePoint> curve);

/// First grid gamma*t with e_gl <= 1e-12, bisection-refined against the
/// closed form when that is the generating method; nullopt if the curve
/// never reaches zero on the grid.
std::optional<double> detect_t_sep(std::span<const CurvePoint> curve);

struct CurveKey {
  StateFamily state;
  ChannelKind channel;
  int n;
  Method method;

  bool operator<(const CurveKey& o) const;
};

/// Split a point list into per-curve groups, each sorted by gamma_t.
std::map<CurveKey, std::vector<CurvePoint>> group_into_curves(
    std::span<const CurvePoint> points);

void emit_csv(std::span<const CurvePoint> points, const std::string& path);
void emit_rates_csv(std::span<const RateFit> fits, const std::string& path);
void emit_tsep_csv(std::span<const TsepResult> results, const std::string& path);
std::vector<CurvePoint> read_curve_csv(const std::string& path);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace qsim
