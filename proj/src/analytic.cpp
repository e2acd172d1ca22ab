// Closed-form evolved three-qubit density matrices for the tabulated
// (state, channel) pairs. These are an independent check on the Kraus path.
// Element indices are 1-based, |000> = 1 ... |111> = 8; only one element of
// each conjugate pair is listed and the other is filled by symmetry.

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include "qdiss/channels.hpp"
#include "qdiss/errors.hpp"

namespace qdiss {

namespace {

using Slot = std::pair<int, int>;

class ElementTable {
 public:
  ElementTable() : rho_(8) {}

  void set(std::initializer_list<Slot> slots, double value) {
    for (auto [i, j] : slots) {
      rho_(i - 1, j - 1) = value;
      rho_(j - 1, i - 1) = value;
    }
  }

  void set_diagonal(std::initializer_list<int> indices, double value) {
    for (int i : indices) rho_(i - 1, i - 1) = value;
  }

  DensityMatrix take() && { return std::move(rho_); }

 private:
  DensityMatrix rho_;
};

bool is_q(const ChannelSpec& spec, double q) { return spec.family == ChannelFamily::GAD && spec.q == q; }

DensityMatrix ghz_gad_q1(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  const double v = 1.0 + g;
  t.set_diagonal({1}, v * (v * v + 3 * p * u * u) / 8);
  t.set_diagonal({2, 3, 5}, u * (v * v - p * u * (3 * g + 1)) / 8);
  t.set_diagonal({4, 6, 7}, u * u * (v + p * (3 * g - 1)) / 8);
  t.set_diagonal({8}, (1 + 3 * p) * u * u * u / 8);
  t.set({{1, 8}}, p / 2 * std::pow(u, 1.5));
  return std::move(t).take();
}

DensityMatrix w_gad_q1(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  const double v = 1.0 + g;
  t.set_diagonal({1}, (v * v * v + p * u * (g * g + 4 * g - 1)) / 8);
  t.set_diagonal({2, 3, 5}, u * (3 * v * v - p * (3 * g * g + 6 * g - 5)) / 24);
  t.set_diagonal({4, 6, 7}, (1 - p) * u * u * v / 8);
  t.set_diagonal({8}, (1 - p) * u * u * u / 8);
  t.set({{2, 3}, {2, 5}, {3, 5}}, p * u / 3);
  return std::move(t).take();
}

DensityMatrix sepmix_gad_q1(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  const double v = 1.0 + g;
  const double c = (1 - p) / 8;
  t.set_diagonal({1}, (v * v * v + p * u * (g * g + 4 * g + 7)) / 8);
  t.set({{1, 2}, {1, 3}, {1, 5}}, c * std::sqrt(u) * v * v);
  t.set({{1, 4}, {1, 6}, {1, 7}, {2, 3}, {2, 5}, {3, 5}}, c * (1 - g * g));
  t.set({{1, 8}, {2, 7}, {3, 6}, {4, 5}}, c * std::pow(u, 1.5));
  t.set_diagonal({2, 3, 5}, c * u * v * v);
  t.set({{2, 4}, {2, 6}, {3, 4}, {3, 7}, {5, 6}, {5, 7}}, c * std::sqrt(u) * (1 - g * g));
  t.set_diagonal({4, 6, 7}, c * u * u * v);
  t.set({{2, 8}, {3, 8}, {4, 6}, {4, 7}, {5, 8}, {6, 7}}, c * u * u);
  t.set({{4, 8}, {6, 8}, {7, 8}}, c * std::pow(u, 2.5));
  t.set_diagonal({8}, c * u * u * u);
  return std::move(t).take();
}

DensityMatrix bisep_gad_q1(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  const double v = 1.0 + g;
  const double w = v + p * u;
  t.set_diagonal({1}, v * v * w / 8);
  t.set_diagonal({2, 3}, (1 - g * g) * w / 8);
  t.set_diagonal({4}, u * u * w / 8);
  t.set_diagonal({5}, (1 - p) * u * v * v / 8);
  t.set_diagonal({6, 7}, (1 - p) * u * u * v / 8);
  t.set_diagonal({8}, (1 - p) * u * u * u / 8);
  t.set({{1, 4}}, p / 4 * u);
  t.set({{2, 3}}, -p / 4 * u);
  return std::move(t).take();
}

DensityMatrix ghz_gad_half(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  t.set_diagonal({1, 8}, (1 + 3 * p * u * u) / 8);
  t.set_diagonal({2, 3, 4, 5, 6, 7}, (1 - p * u * u) / 8);
  t.set({{1, 8}}, p / 2 * std::pow(u, 1.5));
  return std::move(t).take();
}

DensityMatrix w_gad_half(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  t.set_diagonal({1}, (1 - p * u * (g * g - 3 * g + 1)) / 8);
  t.set_diagonal({2, 3, 5}, (3 + p * u * (3 * g * g - 7 * g + 5)) / 24);
  t.set_diagonal({4, 6, 7}, (3 - p * u * (3 * g * g - 5 * g + 3)) / 24);
  t.set_diagonal({8}, (1 + p * u * (g * g - g - 1)) / 8);
  t.set({{2, 3}, {2, 5}, {3, 5}}, p / 6 * u * (2 - g));
  t.set({{4, 6}, {4, 7}, {6, 7}}, p / 6 * g * u);
  return std::move(t).take();
}

DensityMatrix sepmix_gad_half(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  const double c = (1 - p) / 8;
  t.set_diagonal({1}, (1 + p * u * (g * g - 5 * g + 7)) / 8);
  t.set_diagonal({2, 3, 5}, (1 - p * u * (g * g - 3 * g + 1)) / 8);
  t.set_diagonal({4, 6, 7}, (1 + p * u * (g * g - g - 1)) / 8);
  t.set_diagonal({8}, (1 + p * (g * g * g - 1)) / 8);
  t.set({{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 4}, {3, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}},
        c * std::sqrt(u));
  t.set({{1, 4}, {1, 6}, {1, 7}, {2, 3}, {2, 5}, {2, 8}, {3, 5}, {3, 8}, {4, 6}, {4, 7}, {5, 8}, {6, 7}}, c * u);
  t.set({{1, 8}, {2, 7}, {3, 6}, {4, 5}}, c * std::pow(u, 1.5));
  return std::move(t).take();
}

DensityMatrix ghz_dephasing(double p, double g) {
  ElementTable t;
  t.set_diagonal({1, 8}, (1 + 3 * p) / 8);
  t.set_diagonal({2, 3, 4, 5, 6, 7}, (1 - p) / 8);
  t.set({{1, 8}}, p / 2 * std::pow(1 - g, 1.5));
  return std::move(t).take();
}

DensityMatrix w_dephasing(double p, double g) {
  ElementTable t;
  t.set_diagonal({1, 4, 6, 7, 8}, (1 - p) / 8);
  t.set_diagonal({2, 3, 5}, (3 + 5 * p) / 24);
  t.set({{2, 3}, {2, 5}, {3, 5}}, p * (1 - g) / 3);
  return std::move(t).take();
}

DensityMatrix sepmix_dephasing(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  const double c = (1 - p) / 8;
  t.set_diagonal({1}, (1 + 7 * p) / 8);
  t.set_diagonal({2, 3, 4, 5, 6, 7, 8}, c);
  t.set({{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 4}, {3, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}},
        c * std::sqrt(u));
  t.set({{1, 4}, {1, 6}, {1, 7}, {2, 3}, {2, 5}, {2, 8}, {3, 5}, {3, 8}, {4, 6}, {4, 7}, {5, 8}, {6, 7}}, c * u);
  t.set({{1, 8}, {2, 7}, {3, 6}, {4, 5}}, c * std::pow(u, 1.5));
  return std::move(t).take();
}

DensityMatrix bisep_dephasing(double p, double g) {
  ElementTable t;
  t.set_diagonal({1, 2, 3, 4}, (1 + p) / 8);
  t.set_diagonal({5, 6, 7, 8}, (1 - p) / 8);
  t.set({{1, 4}}, p / 4 * (1 - g));
  t.set({{2, 3}}, -p / 4 * (1 - g));
  return std::move(t).take();
}

DensityMatrix ghz_depolarizing(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  t.set_diagonal({1, 8}, (1 + 3 * p * u * u) / 8);
  t.set_diagonal({2, 3, 4, 5, 6, 7}, (1 - p * u * u) / 8);
  t.set({{1, 8}}, p / 2 * u * u * u);
  return std::move(t).take();
}

DensityMatrix w_depolarizing(double p, double g) {
  ElementTable t;
  const double u = 1.0 - g;
  t.set_diagonal({1}, (1 - p * u * (g * g - 3 * g + 1)) / 8);
  t.set_diagonal({2, 3, 5}, (3 + p * u * (3 * g * g - 7 * g + 5)) / 24);
  t.set({{2, 3}, {2, 5}, {3, 5}}, p / 6 * (2 - g) * u * u);
  t.set_diagonal({4, 6, 7}, (3 - p * u * (3 * g * g - 5 * g + 3)) / 24);
  t.set({{4, 6}, {4, 7}, {6, 7}}, p / 6 * g * u * u);
  t.set_diagonal({8}, (1 + p * u * (g * g - g - 1)) / 8);
  return std::move(t).take();
}

}  // namespace

bool is_tabulated(StateKind kind, const ChannelSpec& spec) {
  switch (spec.family) {
    case ChannelFamily::GAD:
      if (spec.q == 1.0) return true;
      if (spec.q == 0.5) return kind != StateKind::MixedBiseparable;
      return false;
    case ChannelFamily::Dephasing: return true;
    case ChannelFamily::Depolarizing: return kind == StateKind::MixedGHZ || kind == StateKind::MixedW;
  }
  return false;
}

std::vector<TabulatedCombination> tabulated_combinations() {
  const ChannelSpec gad1{ChannelFamily::GAD, 1.0};
  const ChannelSpec gad_half{ChannelFamily::GAD, 0.5};
  const ChannelSpec deph{ChannelFamily::Dephasing, 1.0};
  const ChannelSpec depol{ChannelFamily::Depolarizing, 1.0};
  std::vector<TabulatedCombination> out;
  for (const ChannelSpec& ch : {gad1, gad_half, deph, depol}) {
    for (StateKind k : kAllStateKinds) {
      if (is_tabulated(k, ch)) out.push_back({k, ch});
    }
  }
  return out;
}

DensityMatrix analytic_state(const StateFamily& family, const ChannelSpec& spec, double gamma) {
  if (!is_tabulated(family.kind, spec)) {
    throw UnsupportedCombination("untabulated combination: " + std::string(state_name(family.kind)) + " under " +
                                 describe(spec));
  }
  if (!(family.p >= 0.0 && family.p <= 1.0)) throw ArgumentError("p must lie in [0,1]");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ArgumentError("gamma must lie in [0,1]");
  const double p = family.p;
  const double g = gamma;
  switch (spec.family) {
    case ChannelFamily::GAD:
      if (is_q(spec, 1.0)) {
        switch (family.kind) {
          case StateKind::MixedGHZ: return ghz_gad_q1(p, g);
          case StateKind::MixedW: return w_gad_q1(p, g);
          case StateKind::SeparableMixture: return sepmix_gad_q1(p, g);
          case StateKind::MixedBiseparable: return bisep_gad_q1(p, g);
        }
      }
      switch (family.kind) {
        case StateKind::MixedGHZ: return ghz_gad_half(p, g);
        case StateKind::MixedW: return w_gad_half(p, g);
        case StateKind::SeparableMixture: return sepmix_gad_half(p, g);
        case StateKind::MixedBiseparable: break;
      }
      break;
    case ChannelFamily::Dephasing:
      switch (family.kind) {
        case StateKind::MixedGHZ: return ghz_dephasing(p, g);
        case StateKind::MixedW: return w_dephasing(p, g);
        case StateKind::SeparableMixture: return sepmix_dephasing(p, g);
        case StateKind::MixedBiseparable: return bisep_dephasing(p, g);
      }
      break;
    case ChannelFamily::Depolarizing:
      if (family.kind == StateKind::MixedGHZ) return ghz_depolarizing(p, g);
      return w_depolarizing(p, g);
  }
  throw UnsupportedCombination("untabulated combination");
}

}  // namespace qdiss
