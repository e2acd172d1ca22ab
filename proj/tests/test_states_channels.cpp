#include <doctest.h>

#include <cmath>

#include "qdiss/channels.hpp"
#include "qdiss/errors.hpp"
#include "qdiss/states.hpp"
#include "qdiss/sweep.hpp"
#include "support.hpp"

using namespace qdiss;
using namespace qdiss::testing;

namespace {

double purity(const DensityMatrix& rho) { return trace(rho * rho).real(); }

// Sum over all 4^3 (or 2^3) Kraus products, built with explicit kron.
DensityMatrix brute_force_product(const DensityMatrix& rho, const KrausSet& k) {
  DensityMatrix out(8);
  for (const auto& a : k.ops) {
    for (const auto& b : k.ops) {
      for (const auto& c : k.ops) {
        const auto op = kron(kron(a, b), c);
        out += op * rho * dagger(op);
      }
    }
  }
  return out;
}

ChannelSpec random_channel() {
  const int f = static_cast<int>(uniform(0.0, 3.0));
  return ChannelSpec{kAllChannelFamilies[static_cast<std::size_t>(std::min(f, 2))], uniform(), kDefaultDecayRate};
}

}  // namespace

TEST_CASE("state names round-trip") {
  for (StateKind k : kAllStateKinds) CHECK(parse_state_kind(state_name(k)) == k);
  CHECK_THROWS_AS(parse_state_kind("bell"), ArgumentError);
}

TEST_CASE("initial states are unit-trace, Hermitian and PSD") {
  for (StateKind k : kAllStateKinds) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const auto rho = build_state({k, p});
      CHECK(std::abs(trace(rho) - Complex(1.0)) < 1e-15);
      CHECK(hermiticity_violation(rho) == 0.0);
      CHECK(min_eigenvalue(rho) > -1e-15);
    }
  }
}

TEST_CASE("p endpoints") {
  for (StateKind k : {StateKind::MixedGHZ, StateKind::MixedW, StateKind::MixedBiseparable}) {
    CHECK(max_abs_diff(build_state({k, 0.0}), 0.125 * ComplexMatrix::identity(8)) < 1e-16);
  }
  CHECK(purity(build_state({StateKind::MixedGHZ, 1.0})) == doctest::Approx(1.0));
  CHECK(purity(build_state({StateKind::MixedW, 1.0})) == doctest::Approx(1.0));
  // Equal mixture of two orthogonal pure states.
  CHECK(purity(build_state({StateKind::MixedBiseparable, 1.0})) == doctest::Approx(0.5));

  const auto ghz = build_state({StateKind::MixedGHZ, 1.0});
  CHECK(ghz(0, 7).real() == doctest::Approx(0.5).epsilon(1e-15));
  const auto w = build_state({StateKind::MixedW, 1.0});
  CHECK(w(1, 2).real() == doctest::Approx(1.0 / 3.0));
  CHECK(w(0, 0) == Complex(0));

  const auto sep1 = build_state({StateKind::SeparableMixture, 1.0});
  CHECK(sep1(0, 0) == Complex(1.0));
  CHECK(purity(sep1) == doctest::Approx(1.0));
  const auto sep0 = build_state({StateKind::SeparableMixture, 0.0});
  CHECK(purity(sep0) == doctest::Approx(1.0));
  CHECK(sep0(3, 5).real() == doctest::Approx(0.125));
}

TEST_CASE("mixed GHZ spectrum") {
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const auto e = hermitian_eigenvalues(build_state({StateKind::MixedGHZ, p}));
    for (std::size_t k = 0; k < 7; ++k) CHECK(std::abs(e[k] - (1.0 - p) / 8.0) < 1e-10);
    CHECK(std::abs(e[7] - (1.0 + 7.0 * p) / 8.0) < 1e-10);
  }
}

TEST_CASE("separable mixture endpoints are |000> and |+++>") {
  DensityMatrix ket000(8);
  ket000(0, 0) = 1.0;
  CHECK(build_state({StateKind::SeparableMixture, 1.0}) == ket000);
  const std::vector<Complex> plus(8, Complex(1.0 / std::sqrt(8.0)));
  CHECK(max_abs_diff(build_state({StateKind::SeparableMixture, 0.0}), ComplexMatrix::outer(plus)) < 1e-16);
}

TEST_CASE("W one-qubit marginals") {
  const auto w = build_state({StateKind::MixedW, 1.0});
  const std::vector<double> expect{2.0 / 3.0, 1.0 / 3.0};
  for (const QubitIndexSet& traced : {QubitIndexSet{1, 2}, QubitIndexSet{0, 2}, QubitIndexSet{0, 1}}) {
    CHECK(max_abs_diff(partial_trace(w, traced), ComplexMatrix::diagonal(expect)) < 1e-15);
  }
}

TEST_CASE("p outside [0,1] is rejected") {
  CHECK_THROWS_AS(build_state({StateKind::MixedW, -0.01}), ArgumentError);
  CHECK_THROWS_AS(build_state({StateKind::MixedW, 1.01}), ArgumentError);
}

TEST_CASE("channel names and labels") {
  for (ChannelFamily f : kAllChannelFamilies) CHECK(parse_channel_family(channel_name(f)) == f);
  CHECK_THROWS_AS(parse_channel_family("bitflip"), ArgumentError);
  CHECK(describe(ChannelSpec{ChannelFamily::GAD, 0.5}) == "gad(q=0.5)");
  CHECK(describe(ChannelSpec{ChannelFamily::Dephasing}) == "dephasing");
}

TEST_CASE("gamma from time") {
  CHECK(gamma_of_t(0.5, 0.0) == 0.0);
  CHECK(gamma_of_t(0.5, 2.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  CHECK(gamma_of_t(0.5, 1e-12) == doctest::Approx(0.5e-12).epsilon(1e-9));
  CHECK_THROWS_AS(gamma_of_t(0.5, -1.0), ArgumentError);
  CHECK_THROWS_AS(gamma_of_t(0.0, 1.0), ArgumentError);
}

TEST_CASE("Kraus completeness on random parameters") {
  for (int trial = 0; trial < 1000; ++trial) {
    const double g = uniform();
    CHECK(completeness_error(gad_kraus(uniform(), g)) < 1e-15);
    CHECK(completeness_error(dephasing_kraus(g)) < 1e-15);
    CHECK(completeness_error(depolarizing_kraus(g)) < 1e-15);
  }
  CHECK(gad_kraus(0.3, 0.2).ops.size() == 4);
  CHECK(dephasing_kraus(0.2).ops.size() == 2);
  CHECK(depolarizing_kraus(0.2).ops.size() == 4);
  CHECK_THROWS_AS(gad_kraus(1.5, 0.2), ArgumentError);
  CHECK_THROWS_AS(dephasing_kraus(-0.1), ArgumentError);
}

TEST_CASE("product channel preserves trace, Hermiticity and positivity") {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rho = random_density(8);
    const auto spec = random_channel();
    const auto out = apply_product_channel(rho, kraus_for(spec, uniform()));
    CHECK(std::abs(trace(out) - Complex(1.0)) < 1e-13);
    CHECK(hermiticity_violation(out) < 1e-14);
    CHECK(min_eigenvalue(out) > -1e-13);
  }
}

TEST_CASE("qubit-by-qubit evolution equals the full Kraus product sum") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = random_density(8);
    const auto k = kraus_for(random_channel(), uniform());
    CHECK(max_abs_diff(apply_product_channel(rho, k), brute_force_product(rho, k)) < 1e-14);
  }
}

TEST_CASE("channel fixed points") {
  const auto rho = random_density(8);
  CHECK(max_abs_diff(apply_product_channel(rho, gad_kraus(0.7, 0.0)), rho) < 1e-15);
  CHECK(max_abs_diff(apply_product_channel(rho, dephasing_kraus(0.0)), rho) < 1e-15);

  DensityMatrix ground(8);
  ground(0, 0) = 1.0;
  CHECK(max_abs_diff(apply_product_channel(rho, gad_kraus(1.0, 1.0)), ground) < 1e-14);
  CHECK(max_abs_diff(apply_product_channel(rho, depolarizing_kraus(1.0)), 0.125 * ComplexMatrix::identity(8)) < 1e-14);
  CHECK(max_abs_diff(apply_product_channel(rho, gad_kraus(0.5, 1.0)), 0.125 * ComplexMatrix::identity(8)) < 1e-14);

  // Full dephasing keeps exactly the diagonal.
  const auto dephased = apply_product_channel(rho, dephasing_kraus(1.0));
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      const Complex expect = r == c ? rho(r, c) : Complex{};
      CHECK(std::abs(dephased(r, c) - expect) < 1e-15);
    }
  }
  CHECK(max_abs_diff(apply_product_channel(0.125 * ComplexMatrix::identity(8), dephasing_kraus(0.4)),
                     0.125 * ComplexMatrix::identity(8)) < 1e-16);
}

TEST_CASE("dephasing composes multiplicatively in 1 - gamma") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = random_density(8);
    const double g1 = uniform();
    const double g2 = uniform();
    const auto twice = apply_product_channel(apply_product_channel(rho, dephasing_kraus(g1)), dephasing_kraus(g2));
    const auto once = apply_product_channel(rho, dephasing_kraus(g1 + g2 - g1 * g2));
    CHECK(max_abs_diff(twice, once) < 1e-12);
  }
}

TEST_CASE("single-qubit channel on one factor") {
  const auto a = random_density(2);
  const auto b = random_density(2);
  const auto k = gad_kraus(0.3, 0.6);
  DensityMatrix ka(2);
  for (const auto& op : k.ops) ka += op * a * dagger(op);
  CHECK(max_abs_diff(apply_single_qubit_channel(kron(b, a), k, 1), kron(b, ka)) < 1e-15);
  CHECK_THROWS_AS(apply_single_qubit_channel(kron(b, a), k, 2), ArgumentError);
}

TEST_CASE("thirteen tabulated combinations") {
  const auto combos = tabulated_combinations();
  CHECK(combos.size() == 13);
  for (const auto& c : combos) CHECK(is_tabulated(c.kind, c.channel));
  CHECK_FALSE(is_tabulated(StateKind::MixedBiseparable, ChannelSpec{ChannelFamily::Depolarizing}));
  CHECK_FALSE(is_tabulated(StateKind::MixedBiseparable, ChannelSpec{ChannelFamily::GAD, 0.5}));
  CHECK_FALSE(is_tabulated(StateKind::MixedGHZ, ChannelSpec{ChannelFamily::GAD, 0.3}));
  CHECK_THROWS_AS(analytic_state({StateKind::SeparableMixture, 0.5}, ChannelSpec{ChannelFamily::Depolarizing}, 0.1),
                  UnsupportedCombination);
}

TEST_CASE("closed forms agree with numerical evolution") {
  for (const auto& c : tabulated_combinations()) {
    CAPTURE(state_name(c.kind));
    CAPTURE(describe(c.channel));
    const auto rep = oracle_check(c.kind, c.channel);
    CHECK(rep.points == 55);
    CHECK(rep.max_deviation <= kOracleTolerance);

    // gamma = 0: both paths reproduce the initial state.
    const auto at_zero = oracle_check(c.kind, c.channel, linspace(0.0, 1.0, 5), {0.0});
    CHECK(at_zero.max_deviation <= 1e-15);

    // Off-grid points.
    for (int trial = 0; trial < 20; ++trial) {
      const double p = uniform();
      const double g = uniform();
      const auto numeric = apply_product_channel(build_state({c.kind, p}), kraus_for(c.channel, g));
      CHECK(max_abs_diff(numeric, analytic_state({c.kind, p}, c.channel, g)) <= kOracleTolerance);
    }
  }
  CHECK_THROWS_AS(oracle_check(StateKind::MixedBiseparable, ChannelSpec{ChannelFamily::Depolarizing}),
                  UnsupportedCombination);
}
