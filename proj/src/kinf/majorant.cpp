// kinf/majorant.cpp
#include "kinf/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "kinf/quadrature.hpp"
#include "kinf/stable_sum.hpp"

namespace kinf {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;
constexpr double kGridFloorLog2 = -60.0;  // validation grids span [2^-60, 1]

void check_domain(double t) {
  if (!(t > 0.0) || t > 1.0) throw std::domain_error("majorant argument must lie in (0, 1]");
}

}  // namespace

double Majorant::operator()(double t) const {
  check_domain(t);
  double v = fn_(t);
  if (!std::isfinite(v) || v <= 0.0)
    throw std::domain_error("majorant value must be finite and positive");
  return v;
}

double Majorant::at_dyadic(int j) const {
  if (j < 1) throw std::domain_error("dyadic level must be >= 1");
  if (dyadic_) return dyadic_(j);
  return (*this)(std::ldexp(1.0, -j));
}

std::string Majorant::spec_string() const {
  if (label_ == "constant") return "const";
  std::string out = label_;
  char sep = ':';
  for (const auto& [key, value] : params_) {
    out += sep;
    out += key + "=" + std::to_string(value);
    sep = ',';
  }
  return out;
}

Majorant Majorant::phi1(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("phi1 exponent must lie in (0, 1)");
  Majorant m;
  m.label_ = "phi1";
  m.params_ = {{"alpha", alpha}};
  m.fn_ = [alpha](double t) { return std::pow(t, alpha); };
  m.dyadic_ = [alpha](int j) { return std::exp2(-alpha * j); };
  return m;
}

Majorant Majorant::phi2(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("phi2 epsilon must be positive");
  Majorant m;
  m.label_ = "phi2";
  m.params_ = {{"eps", eps}};
  m.fn_ = [eps](double t) { return std::pow(std::log(2.0 / t), -1.0 - eps); };
  m.dyadic_ = [eps](int j) { return std::pow((j + 1) * kLn2, -1.0 - eps); };
  return m;
}

Majorant Majorant::phi3(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("phi3 epsilon must be positive");
  Majorant m;
  m.label_ = "phi3";
  m.params_ = {{"eps", eps}};
  m.fn_ = [eps](double t) {
    double outer = std::log(3.0 / t);
    return std::pow(std::log(outer), -1.0 - eps) / outer;
  };
  m.dyadic_ = [eps](int j) {
    double outer = std::log(3.0) + j * kLn2;
    return std::pow(std::log(outer), -1.0 - eps) / outer;
  };
  return m;
}

Majorant Majorant::constant() {
  Majorant m;
  m.label_ = "constant";
  m.fn_ = [](double) { return 1.0; };
  m.dyadic_ = [](int) { return 1.0; };
  return m;
}

Majorant Majorant::custom(std::string label, std::function<double(double)> f) {
  if (!f) throw std::invalid_argument("custom majorant needs a function");
  Majorant m;
  m.label_ = std::move(label);
  m.fn_ = std::move(f);
  return m;
}

Majorant builtin_majorant(const std::string& label,
                          const std::map<std::string, double>& params) {
  auto want = [&params](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing majorant parameter");
    return it->second;
  };
  if (label == "phi1") return Majorant::phi1(want("alpha"));
  if (label == "phi2") return Majorant::phi2(want("eps"));
  if (label == "phi3") return Majorant::phi3(want("eps"));
  if (label == "constant" || label == "const") return Majorant::constant();
  throw std::invalid_argument("unknown majorant label: " + label);
}

Majorant Majorant::parse(const std::string& spec) {
  auto colon = spec.find(':');
  std::string label = spec.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("majorant spec wants key=value parameters: " + spec);
      std::size_t used = 0;
      double value;
      try {
        value = std::stod(item.substr(eq + 1), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad majorant parameter value: " + spec);
      }
      if (used != item.size() - eq - 1)
        throw std::invalid_argument("bad majorant parameter value: " + spec);
      params[item.substr(0, eq)] = value;
      pos = comma == std::string::npos ? rest.size() : comma + 1;
    }
  }
  return builtin_majorant(label, params);
}

MajorantValidation validate_majorant(const Majorant& phi) {
  constexpr int kGridSize = 1024;
  std::vector<double> t(kGridSize);
  std::vector<double> v(kGridSize);
  for (int i = 0; i < kGridSize; ++i) {
    t[static_cast<std::size_t>(i)] =
        std::exp2(kGridFloorLog2 * (1.0 - static_cast<double>(i) / (kGridSize - 1)));
    double value;
    try {
      value = phi(t[static_cast<std::size_t>(i)]);
    } catch (const std::domain_error&) {
      return MajorantValidation{false, t[static_cast<std::size_t>(i)],
                                t[static_cast<std::size_t>(i)], "positive"};
    }
    v[static_cast<std::size_t>(i)] = value;
  }
  constexpr double kTol = 1e-12;
  for (int i = 0; i + 1 < kGridSize; ++i) {
    double t0 = t[static_cast<std::size_t>(i)];
    double t1 = t[static_cast<std::size_t>(i) + 1];
    double v0 = v[static_cast<std::size_t>(i)];
    double v1 = v[static_cast<std::size_t>(i) + 1];
    if (v0 > v1 * (1.0 + kTol)) return MajorantValidation{false, t0, t1, "nondecreasing"};
    if (v1 / t1 > (v0 / t0) * (1.0 + kTol))
      return MajorantValidation{false, t0, t1, "ratio-nonincreasing"};
  }
  return MajorantValidation{true, 0.0, 0.0, ""};
}

namespace {

double upper_type_grid_max(const Majorant& phi, double gamma, int m) {
  std::vector<double> x(static_cast<std::size_t>(m));
  std::vector<double> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    x[static_cast<std::size_t>(i)] =
        std::exp2(kGridFloorLog2 * (1.0 - static_cast<double>(i) / (m - 1)));
    v[static_cast<std::size_t>(i)] = phi(x[static_cast<std::size_t>(i)]);
  }
  // Admissible pairs (s, t) with s >= 1, t <= 1/s reparametrized as
  // st = x_i, t = x_k with k <= i, so s = x_i / x_k.
  double best = 0.0;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= i; ++k) {
      double s = x[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(k)];
      double ratio = v[static_cast<std::size_t>(i)] /
                     (std::pow(s, gamma) * v[static_cast<std::size_t>(k)]);
      best = std::max(best, ratio);
    }
  return best;
}

}  // namespace

UpperTypeEstimate upper_type_estimate(const Majorant& phi, double gamma) {
  if (!(gamma >= 0.0) || !(gamma <= 1.0))
    throw std::invalid_argument("upper-type exponent must lie in [0, 1]");
  double prev = upper_type_grid_max(phi, gamma, 64);
  double cur = prev;
  bool stable = false;
  for (int m = 128; m <= 1024; m *= 2) {
    cur = upper_type_grid_max(phi, gamma, m);
    if (std::isfinite(cur) && std::abs(cur - prev) <= 0.01 * cur) {
      stable = true;
      break;
    }
    prev = cur;
  }
  return UpperTypeEstimate{gamma, cur, stable && std::isfinite(cur)};
}

std::vector<double> dyadic_sum(const Majorant& phi, int levels) {
  if (levels < 1) throw std::invalid_argument("dyadic sum needs at least one level");
  std::vector<double> partial(static_cast<std::size_t>(levels));
  StableSum sum;
  for (int j = 1; j <= levels; ++j) {
    sum.add(phi.at_dyadic(j));
    partial[static_cast<std::size_t>(j) - 1] = sum.get();
  }
  return partial;
}

IntegralTest integral_test(const Majorant& phi, int levels, double quad_tol) {
  if (levels < 1) throw std::invalid_argument("integral test needs at least one level");
  if (!(quad_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  IntegralTest out;
  out.dyadic_partial = dyadic_sum(phi, levels);
  out.integral_partial.resize(static_cast<std::size_t>(levels));
  auto integrand = [&phi](double t) { return phi(t) / t; };
  double per_interval = quad_tol / levels;
  StableSum total;
  out.sandwich_ok = true;
  out.first_violation = 0;
  for (int j = 1; j <= levels; ++j) {
    double lo = std::ldexp(1.0, -j);
    double hi = std::ldexp(1.0, -j + 1);
    total.add(adaptive_simpson(integrand, lo, hi, per_interval));
    double integral = total.get();
    out.integral_partial[static_cast<std::size_t>(j) - 1] = integral;
    double sum = out.dyadic_partial[static_cast<std::size_t>(j) - 1];
    bool lower = kLn2 * sum <= integral + quad_tol;
    bool upper = integral <= 2.0 * kLn2 * sum + quad_tol;
    if (!(lower && upper) && out.sandwich_ok) {
      out.sandwich_ok = false;
      out.first_violation = j;
    }
  }
  out.integral = total.get();
  // Tail heuristic: geometric extrapolation of the dyadic terms.
  double last = phi.at_dyadic(levels);
  double prev = levels > 1 ? phi.at_dyadic(levels - 1) : last;
  double r = prev > 0.0 ? last / prev : 1.0;
  if (r < 1.0 - 1e-9) {
    double tail = last * r / (1.0 - r);
    out.converged = tail <= 1e-6 * std::max(out.dyadic_partial.back(), 1e-300);
  } else {
    out.converged = false;
  }
  return out;
}

double xphi_norm(const ZeroSequence& seq, const std::vector<Complex>& w, const Majorant& phi) {
  if (w.size() != static_cast<std::size_t>(seq.n()))
    throw std::invalid_argument("trace length must match the zero count");
  double best = 0.0;
  for (int j = 0; j < seq.n(); ++j)
    best = std::max(best, std::abs(w[static_cast<std::size_t>(j)]) / phi(seq.at(j).gap));
  return best;
}

}  // namespace kinf
