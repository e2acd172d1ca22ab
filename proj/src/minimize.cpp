#include "qdiss/minimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qdiss/errors.hpp"

namespace qdiss {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  // fmod of a value just below a multiple of the period can round up to it.
  if (r >= period) r -= period;
  return r;
}

struct Vertex {
  double theta;
  double phi;
  double value;
};

class CountingObjective {
 public:
  explicit CountingObjective(const AngleObjective& f) : f_(f) {}

  double operator()(double theta, double phi) {
    ++count_;
    const double v = f_(BasisAngles(theta, phi));
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "objective returned non-finite value " << v << " at theta=" << theta << ", phi=" << phi;
      throw NumericalError(msg.str());
    }
    return v;
  }

  int count() const { return count_; }

 private:
  const AngleObjective& f_;
  int count_ = 0;
};

double diameter(const std::array<Vertex, 3>& s) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) d = std::max(d, std::hypot(s[i].theta - s[j].theta, s[i].phi - s[j].phi));
  }
  return d;
}

Vertex nelder_mead(CountingObjective& f, Vertex start, double step, const MinimizerSettings& settings) {
  std::array<Vertex, 3> s{start, Vertex{start.theta + step, start.phi, 0.0}, Vertex{start.theta, start.phi + step, 0.0}};
  s[1].value = f(s[1].theta, s[1].phi);
  s[2].value = f(s[2].theta, s[2].phi);
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };

  for (int iter = 0; iter < settings.refine_iters; ++iter) {
    std::stable_sort(s.begin(), s.end(), by_value);
    if (diameter(s) < settings.xtol || s[2].value - s[0].value <= 1e-3 * settings.tol) break;

    const double ct = 0.5 * (s[0].theta + s[1].theta);
    const double cp = 0.5 * (s[0].phi + s[1].phi);
    auto along = [&](double coef) {
      Vertex v{ct + coef * (s[2].theta - ct), cp + coef * (s[2].phi - cp), 0.0};
      v.value = f(v.theta, v.phi);
      return v;
    };

    const Vertex reflected = along(-1.0);
    if (reflected.value < s[0].value) {
      const Vertex expanded = along(-2.0);
      s[2] = expanded.value < reflected.value ? expanded : reflected;
    } else if (reflected.value < s[1].value) {
      s[2] = reflected;
    } else {
      const bool outside = reflected.value < s[2].value;
      const Vertex contracted = along(outside ? -0.5 : 0.5);
      if (contracted.value < (outside ? reflected.value : s[2].value)) {
        s[2] = contracted;
      } else {
        for (std::size_t i = 1; i < 3; ++i) {
          s[i].theta = s[0].theta + 0.5 * (s[i].theta - s[0].theta);
          s[i].phi = s[0].phi + 0.5 * (s[i].phi - s[0].phi);
          s[i].value = f(s[i].theta, s[i].phi);
        }
      }
    }
  }
  return *std::min_element(s.begin(), s.end(), by_value);
}

}  // namespace

BasisAngles::BasisAngles(double theta, double phi) : theta_(wrap(theta, kTwoPi)), phi_(wrap(phi, kTwoPi)) {}

BasisAngles BasisAngles::canonical() const {
  BasisAngles c;
  c.theta_ = wrap(theta_, std::numbers::pi);
  c.phi_ = phi_;
  return c;
}

void MinimizerSettings::validate() const {
  if (grid_n < 1) throw ArgumentError("grid size must be at least 1");
  if (refine_iters < 0) throw ArgumentError("refinement iterations must be non-negative");
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  if (!(xtol > 0.0)) throw ArgumentError("simplex diameter tolerance must be positive");
}

AngleMinimum minimize_over_angles(const AngleObjective& objective, const MinimizerSettings& settings) {
  settings.validate();
  CountingObjective f(objective);
  const double step = kTwoPi / settings.grid_n;

  Vertex best{0.0, 0.0, f(0.0, 0.0)};
  for (int i = 0; i < settings.grid_n; ++i) {
    for (int j = 0; j < settings.grid_n; ++j) {
      if (i == 0 && j == 0) continue;
      const double theta = i * step;
      const double phi = j * step;
      const double v = f(theta, phi);
      if (v < best.value) best = Vertex{theta, phi, v};
    }
  }

  if (settings.refine_iters > 0) {
    const Vertex refined = nelder_mead(f, best, step, settings);
    if (refined.value < best.value) best = refined;
  }
  return AngleMinimum{best.value, BasisAngles(best.theta, best.phi).canonical(), f.count()};
}

}  // namespace qdiss
