#include "qsim/runner.hpp"

#include "qsim/closed_form.hpp"
#include "qsim/integrator.hpp"
#include "qsim/measures.hpp"
#include "qsim/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

namespace qsim {

namespace {

constexpr double kZeroTol = 1e-12;      // e_gl at or below this counts as dead
constexpr double kFitFloor = 1e-6;      // log fits exclude points at or below
constexpr double kMonotoneSlack = 1e-10;
constexpr double kKrausOdeTol = 1e-7;
constexpr double kKrausClosedTol = 1e-9;
constexpr int kClosedOnlyMaxQubits = 64;

double kraus_e_gl(StateFamily state, ChannelKind channel, int n, double gamma_t) {
  const double p = std::exp(-gamma_t);
  const SingleQubitKraus chan = kraus_for(channel, p);
  if (state == StateFamily::W) {
    const DensityMatrix evolved =
        apply_uniform_channel(density_from_pure(w_state(n)), chan);
    return ge_w_tangle_route(partial_trace(evolved, {0, 1}), n);
  }
  const DensityMatrix evolved =
      apply_uniform_channel(density_from_pure(ghz_state(n)), chan);
  return ge_ghz_tangle_route(evolved);
}

double ode_e_gl(StateFamily state, ChannelKind channel, int n, double gamma_t) {
  const double gamma = 1.0;
  const LindbladSpec spec = lindblad_generator(channel, gamma);
  const IntegrationConfig config(gamma_t, IntegrationConfig::default_steps(gamma, gamma_t));
  const DensityMatrix rho0 = density_from_pure(
      state == StateFamily::W ? w_state(n) : ghz_state(n));
  const DensityMatrix evolved = evolve(rho0, spec, config);
  if (state == StateFamily::W) {
    return ge_w_tangle_route(partial_trace(evolved, {0, 1}), n);
  }
  return ge_ghz_tangle_route(evolved);
}

std::string key_string(StateFamily state, ChannelKind channel) {
  return to_string(state) + "/" + to_string(channel);
}

void validate_config(const SweepConfig& config) {
  if (config.n_list.empty()) throw ConfigError("sweep: empty qubit-count list");
  if (config.methods.empty()) throw ConfigError("sweep: no methods requested");
  if (config.grid_points < 2) throw ConfigError("sweep: need at least 2 grid points");
  if (!(config.gamma_t_max > 0.0)) throw ConfigError("sweep: gamma_t_max must be > 0");

  const bool wants_closed =
      std::find(config.methods.begin(), config.methods.end(), Method::Closed) !=
      config.methods.end();
  const bool wants_matrix =
      std::find_if(config.methods.begin(), config.methods.end(), [](Method m) {
        return m != Method::Closed;
      }) != config.methods.end();

  if (wants_closed && config.state == StateFamily::Ghz &&
      config.channel != ChannelKind::Dephasing) {
    throw ConfigError("sweep: " + key_string(config.state, config.channel) +
                      " has no closed form; valid methods are kraus, ode");
  }
  for (int n : config.n_list) {
    if (n < 2) throw ConfigError("sweep: qubit counts must be >= 2");
    if (wants_matrix) {
      if (n > kMaxQubits) {
        throw ConfigError("sweep: kraus/ode methods support at most 12 qubits");
      }
      if (config.state == StateFamily::Ghz && n % 2 != 0) {
        throw ConfigError("sweep: ghz tangle-route methods require even qubit counts");
      }
    } else if (n > kClosedOnlyMaxQubits) {
      throw ConfigError("sweep: closed-form sweeps support at most 64 qubits");
    }
  }
}

void check_monotone(const std::vector<CurvePoint>& curve) {
  for (size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].e_gl > curve[i - 1].e_gl + kMonotoneSlack) {
      std::ostringstream msg;
      msg << "sweep: e_gl increased along " << key_string(curve[i].state, curve[i].channel)
          << " n=" << curve[i].n << " method=" << to_string(curve[i].method)
          << " at gamma_t=" << curve[i].gamma_t;
      throw NumericError(msg.str());
    }
  }
}

}  // namespace

std::string to_string(StateFamily s) {
  return s == StateFamily::Ghz ? "ghz" : "w";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::Kraus: return "kraus";
    case Method::Ode: return "ode";
  }
  throw std::invalid_argument("to_string: bad Method");
}

StateFamily parse_state_family(const std::string& name) {
  if (name == "ghz") return StateFamily::Ghz;
  if (name == "w") return StateFamily::W;
  throw ConfigError("unknown state family: " + name);
}

Method parse_method(const std::string& name) {
  if (name == "closed") return Method::Closed;
  if (name == "kraus") return Method::Kraus;
  if (name == "ode") return Method::Ode;
  throw ConfigError("unknown method: " + name);
}

std::optional<double> closed_e_gl(StateFamily state, ChannelKind channel, int n,
                                  double gamma_t) {
  if (state == StateFamily::W) {
    return w_ge_closed(channel, n, gamma_t);
  }
  if (channel == ChannelKind::Dephasing) {
    return ghz_ge_dephasing_closed(n, gamma_t);
  }
  return std::nullopt;
}

bool CurveKey::operator<(const CurveKey& o) const {
  return std::make_tuple(to_string(state), to_string(channel), n, to_string(method)) <
         std::make_tuple(to_string(o.state), to_string(o.channel), o.n, to_string(o.method));
}

std::vector<CurvePoint> run_sweep(const SweepConfig& config,
                                  std::vector<MethodDiscrepancy>* report) {
  validate_config(config);

  std::vector<Method> methods = config.methods;
  std::sort(methods.begin(), methods.end(),
            [](Method a, Method b) { return to_string(a) < to_string(b); });
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

  std::vector<double> grid(config.grid_points);
  for (int i = 0; i < config.grid_points; ++i) {
    grid[i] = config.gamma_t_max * i / (config.grid_points - 1);
  }

  std::vector<int> n_list = config.n_list;
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());

  std::vector<CurvePoint> points;
  points.reserve(n_list.size() * methods.size() * grid.size());
  std::map<Method, std::vector<double>> per_method;

  for (int n : n_list) {
    per_method.clear();
    for (Method method : methods) {
      std::vector<CurvePoint> curve;
      curve.reserve(grid.size());
      for (double gt : grid) {
        double e = 0.0;
        switch (method) {
          case Method::Closed:
            e = closed_e_gl(config.state, config.channel, n, gt).value();
            break;
          case Method::Kraus:
            e = kraus_e_gl(config.state, config.channel, n, gt);
            break;
          case Method::Ode:
            e = ode_e_gl(config.state, config.channel, n, gt);
            break;
        }
        curve.push_back({config.state, config.channel, n, gt, e, method});
      }
      check_monotone(curve);
      auto& column = per_method[method];
      for (const auto& pt : curve) column.push_back(pt.e_gl);
      points.insert(points.end(), curve.begin(), curve.end());
    }

    auto pair_max = [&](Method a, Method b) {
      double worst = 0.0;
      for (size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(per_method[a][i] - per_method[b][i]));
      }
      return worst;
    };
    auto check_pair = [&](Method a, Method b, double tol) {
      if (!per_method.count(a) || !per_method.count(b)) return;
      const double worst = pair_max(a, b);
      if (report != nullptr) report->push_back({n, a, b, worst});
      if (worst > tol) {
        std::ostringstream msg;
        msg << "sweep: " << to_string(a) << "/" << to_string(b) << " discrepancy "
            << worst << " exceeds " << tol << " for "
            << key_string(config.state, config.channel) << " n=" << n;
        throw NumericError(msg.str());
      }
    };
    check_pair(Method::Kraus, Method::Ode, kKrausOdeTol);
    check_pair(Method::Kraus, Method::Closed, kKrausClosedTol);
  }

  std::sort(points.begin(), points.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return std::make_tuple(to_string(a.state), to_string(a.channel), a.n,
                           to_string(a.method), a.gamma_t) <
           std::make_tuple(to_string(b.state), to_string(b.channel), b.n,
                           to_string(b.method), b.gamma_t);
  });
  return points;
}

RateFit fit_decay_rate(std::span<const CurvePoint> curve) {
  if (curve.empty()) throw ConfigError("fit_decay_rate: empty curve");
  for (const auto& pt : curve) {
    if (pt.state != curve[0].state || pt.channel != curve[0].channel ||
        pt.n != curve[0].n || pt.method != curve[0].method) {
      throw ConfigError("fit_decay_rate: points span more than one curve");
    }
  }

  std::vector<double> xs, ys;
  for (const auto& pt : curve) {
    if (pt.e_gl > kFitFloor) {
      xs.push_back(pt.gamma_t);
      ys.push_back(std::log(pt.e_gl));
    }
  }
  if (xs.size() < 3) {
    throw ConfigError("fit_decay_rate: fewer than 3 points above the 1e-6 floor");
  }

  const size_t m = xs.size();
  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw ConfigError("fit_decay_rate: degenerate gamma_t values");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;

  double ss = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss += r * r;
  }
  return {curve[0].state, curve[0].channel, curve[0].n, curve[0].method,
          -slope, std::sqrt(ss / m), static_cast<int>(m)};
}

std::optional<double> detect_t_sep(std::span<const CurvePoint> curve) {
  if (curve.empty()) throw ConfigError("detect_t_sep: empty curve");
  for (size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].gamma_t < curve[i - 1].gamma_t) {
      throw ConfigError("detect_t_sep: points must be sorted by gamma_t");
    }
  }

  size_t hit = curve.size();
  for (size_t i = 0; i < curve.size(); ++i) {
    if (curve[i].e_gl <= kZeroTol) {
      hit = i;
      break;
    }
  }
  if (hit == curve.size()) return std::nullopt;
  if (hit == 0) return 0.0;

  const CurvePoint& first = curve[0];
  if (first.method != Method::Closed) return curve[hit].gamma_t;

  // Refine against the generating closed form.
  double lo = curve[hit - 1].gamma_t;
  double hi = curve[hit].gamma_t;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    const auto e = closed_e_gl(first.state, first.channel, first.n, mid);
    if (!e.has_value()) return curve[hit].gamma_t;
    if (*e > kZeroTol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

std::map<CurveKey, std::vector<CurvePoint>> group_into_curves(
    std::span<const CurvePoint> points) {
  std::map<CurveKey, std::vector<CurvePoint>> groups;
  for (const auto& pt : points) {
    groups[{pt.state, pt.channel, pt.n, pt.method}].push_back(pt);
  }
  for (auto& [key, curve] : groups) {
    std::sort(curve.begin(), curve.end(),
              [](const CurvePoint& a, const CurvePoint& b) { return a.gamma_t < b.gamma_t; });
  }
  return groups;
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void emit_csv(std::span<const CurvePoint> points, const std::string& path) {
  std::vector<CurvePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return std::make_tuple(to_string(a.state), to_string(a.channel), a.n,
                           to_string(a.method), a.gamma_t) <
           std::make_tuple(to_string(b.state), to_string(b.channel), b.n,
                           to_string(b.method), b.gamma_t);
  });
  auto out = open_for_write(path);
  out << "state,channel,n,gamma_t,e_gl,method\n";
  for (const auto& pt : sorted) {
    out << to_string(pt.state) << ',' << to_string(pt.channel) << ',' << pt.n << ','
        << format_double(pt.gamma_t) << ',' << format_double(pt.e_gl) << ','
        << to_string(pt.method) << '\n';
  }
  finish_write(out, path);
}

void emit_rates_csv(std::span<const RateFit> fits, const std::string& path) {
  auto out = open_for_write(path);
  out << "state,channel,n,method,alpha,residual,points_used\n";
  for (const auto& f : fits) {
    out << to_string(f.state) << ',' << to_string(f.channel) << ',' << f.n << ','
        << to_string(f.method) << ',' << format_double(f.alpha) << ','
        << format_double(f.residual) << ',' << f.points_used << '\n';
  }
  finish_write(out, path);
}

void emit_tsep_csv(std::span<const TsepResult> results, const std::string& path) {
  auto out = open_for_write(path);
  out << "state,channel,n,method,t_sep\n";
  for (const auto& r : results) {
    out << to_string(r.state) << ',' << to_string(r.channel) << ',' << r.n << ','
        << to_string(r.method) << ',';
    if (r.t_sep.has_value()) {
      out << format_double(*r.t_sep);
    } else {
      out << "none";
    }
    out << '\n';
  }
  finish_write(out, path);
}

std::vector<CurvePoint> read_curve_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);

  std::string line;
  if (!std::getline(in, line) || line != "state,channel,n,gamma_t,e_gl,method") {
    throw ConfigError("curve csv: bad header in " + path);
  }

  auto parse_double = [&](const std::string& field) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
      throw ConfigError("curve csv: bad numeric field '" + field + "' in " + path);
    }
    return v;
  };

  std::vector<CurvePoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) {
      throw ConfigError("curve csv: expected 6 fields per row in " + path);
    }
    CurvePoint pt;
    pt.state = parse_state_family(fields[0]);
    pt.channel = parse_channel_kind(fields[1]);
    pt.n = static_cast<int>(parse_double(fields[2]));
    pt.gamma_t = parse_double(fields[3]);
    pt.e_gl = parse_double(fields[4]);
    pt.method = parse_method(fields[5]);
    points.push_back(pt);
  }
  return points;
}

}  // namespace qsim
