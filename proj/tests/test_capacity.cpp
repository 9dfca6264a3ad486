#include <doctest.h>

#include <cmath>

#include "boostcap/capacity.hpp"
#include "boostcap/errors.hpp"

using namespace boostcap;

TEST_CASE("identity and fully depolarizing channels") {
  const CapacityReport id = capacity_report(PauliLambda{});
  CHECK(id.classical == doctest::Approx(1.0));
  CHECK(id.hashing == doctest::Approx(1.0));
  CHECK(id.cerf == 0.0);
  CHECK_FALSE(id.entanglement_breaking);
  const CapacityReport dep = capacity_report(PauliLambda{0.0, 0.0, 0.0});
  CHECK(dep.classical == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(dep.hashing_raw == doctest::Approx(-1.0));
  CHECK(dep.hashing == 0.0);
  CHECK(dep.cerf_zero_capacity);
  CHECK(dep.entanglement_breaking);
}

TEST_CASE("classical capacity uses the largest |lambda|") {
  CHECK(classical_capacity({0.5, -0.5, 0.1}) ==
        doctest::Approx(0.18872187554086713609).epsilon(1e-13));
  CHECK(classical_capacity({0.1, -0.5, 0.5}) == classical_capacity({0.5, 0.1, 0.1}));
}

TEST_CASE("cerf indicator and threshold") {
  const PauliProbs p{0.5, 0.0, 0.5, 0.0};
  CHECK(cerf_indicator(p) == doctest::Approx(0.5));
  CHECK(cerf_zero_capacity(p));
  CHECK(hashing_bound(p).raw == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_FALSE(cerf_zero_capacity(PauliProbs{0.9, 0.05, 0.0, 0.05}));
}

TEST_CASE("entanglement breaking is the tetrahedron |l1|+|l2|+|l3| <= 1") {
  CHECK(is_entanglement_breaking({0.3, 0.3, 0.3}));
  CHECK(is_entanglement_breaking({1.0, 0.0, 0.0}));
  CHECK_FALSE(is_entanglement_breaking({0.5, 0.4, 0.3}));
  CHECK(choi_pt_min_eigenvalue({1.0, 1.0, 1.0}) == doctest::Approx(-0.5));
  const auto C = choi_matrix({0.2, -0.1, 0.6});
  CHECK(C.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("one-Pauli composite stays in Cerf territory") {
  for (int i = 0; i <= 10; ++i) {
    const DepolarizedCompositeReport r = depolarized_composite_check(0.1 * i);
    CHECK(r.passed);
    CHECK(r.hashing_p2 == 0.0);
    CHECK(r.cerf_composite >= 0.5 - 1e-12);
  }
  CHECK_THROWS_AS(depolarized_composite_check(1.5), DomainError);
}

TEST_CASE("thresholds") {
  const GammaThreshold g = gamma_threshold(0.0);
  CHECK(g.crossings.size() == 1);
  CHECK(g.inv_gamma == doctest::Approx(0.05481187).epsilon(1e-4));
  CHECK_THROWS_AS(gamma_threshold(-1.0), NotFoundError);
  const BoostThreshold b = boost_threshold(20.0);
  CHECK(b.zeta == doctest::Approx(-0.052399).epsilon(2e-3));
  CHECK_THROWS_AS(boost_threshold(1.0 / 0.3), PreconditionError);
}
