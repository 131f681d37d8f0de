#include "doctest.h"
#include "qpnorm/conditions.hpp"
#include "qpnorm/qubit.hpp"
#include "qpnorm/zoo.hpp"
#include "test_helpers.hpp"

using namespace qpnorm;
using namespace qpnorm::testing;

namespace {

Channel unitary_conjugated(const Channel& ch, const Matrix& v) {
  std::vector<Matrix> kraus;
  for (const Matrix& k : ch.kraus()) kraus.push_back(v.adjoint() * k * v);
  return Channel(std::move(kraus), ch.trace_preserving());
}

}  // namespace

TEST_SUITE_BEGIN("conditions");

TEST_CASE("condition_matrix of the identity channel is the identity") {
  for (Eigen::Index d : {2, 3}) {
    const ConditionMatrix x = condition_matrix(identity_channel(d), Matrix::Identity(d, d));
    CHECK(max_abs_diff(x.entries, Matrix::Identity(d * d, d * d)) < 1e-13);
  }
}

TEST_CASE("condition_matrix of a diagonal map is diagonal with |a_ik|^2") {
  Matrix a(2, 2);
  a << 2.0, -1.0, -1.0, 2.0;
  const Channel ch = diagonal_map(a);
  const ConditionMatrix x = condition_matrix(ch, Matrix::Identity(2, 2));
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index k = 0; k < 2; ++k)
      for (Eigen::Index j = 0; j < 2; ++j)
        for (Eigen::Index l = 0; l < 2; ++l) {
          const Complex got = x.entries(i * 2 + k, j * 2 + l);
          const double expect =
              (i == j && k == l) ? std::norm(a(i, k)) : 0.0;
          CHECK(std::abs(got - expect) < 1e-12);
        }
}

TEST_CASE("condition_matrix definition matches direct recomputation") {
  Rng rng(51);
  const Channel ch = random_channel(2, 2, 3, 52);
  const Matrix u = random_unitary(rng, 2);
  const ConditionMatrix x = condition_matrix(ch, u);
  // oracle: Tr Phi(F_ik)^dag Phi(F_jl) with F = U E U^dag
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index k = 0; k < 2; ++k)
      for (Eigen::Index j = 0; j < 2; ++j)
        for (Eigen::Index l = 0; l < 2; ++l) {
          const Matrix fik = ch.apply(u * matrix_unit(i, k, 2) * u.adjoint());
          const Matrix fjl = ch.apply(u * matrix_unit(j, l, 2) * u.adjoint());
          CHECK(std::abs(x.entries(i * 2 + k, j * 2 + l) - hs_inner(fik, fjl)) <= 1e-11);
        }
}

TEST_CASE("condition_matrix transform law under row-major pair flattening") {
  Rng rng(53);
  const Channel ch = random_channel(3, 3, 2, 54);
  const Matrix u = random_unitary(rng, 3);
  const Matrix x0 = condition_matrix(ch, Matrix::Identity(3, 3)).entries;
  const Matrix w = kron(u, u.conjugate());
  CHECK(max_abs_diff(condition_matrix(ch, u).entries, w.adjoint() * x0 * w) <= 1e-11);
  CHECK_THROWS_AS(condition_matrix(ch, Matrix::Identity(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(condition_matrix(ch, 2.0 * Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("condition matrix is Hermitian PSD for CP maps") {
  for (int trial = 0; trial < 5; ++trial) {
    const Channel ch = random_channel(3, 2, 2 + trial, 300 + trial);
    const Matrix x = condition_matrix(ch, Matrix::Identity(3, 3)).entries;
    CHECK(max_abs_diff(x, x.adjoint()) < 1e-12);
    CHECK(psd_check(x, 1e-10).is_psd);
  }
}

TEST_CASE("check_postr on the paper families") {
  Matrix a(2, 2);
  a << 2.0, -1.0, -1.0, 2.0;
  CHECK(check_postr(diagonal_map(a), Matrix::Identity(2, 2), 1e-9).holds);
  CHECK(check_postr(werner_holevo(3), Matrix::Identity(3, 3), 1e-9).holds);
  // qubit canonical with t1 = t2 = 0 (axes ordered |l1| >= |l2|)
  const Channel qb = qubit_canonical(Vector3(0, 0, 0.2), Vector3(0.6, 0.5, 0.4));
  CHECK(check_postr(qb, Matrix::Identity(2, 2), 1e-9).holds);
}

TEST_CASE("t1 = t2 = 0 with |lambda_2| > |lambda_1| needs a rotated basis") {
  // The E_01/E_10 condition entry is (l1^2 - l2^2)/2, negative here;
  // a z-axis basis rotation flips its sign.
  const Channel qb = qubit_canonical(Vector3(0, 0, 0.2), Vector3(0.5, 0.6, 0.4));
  const ConditionCheck at_id = check_postr(qb, Matrix::Identity(2, 2), 1e-9);
  CHECK_FALSE(at_id.holds);
  CHECK(at_id.min_entry == doctest::Approx((0.25 - 0.36) / 2.0).epsilon(1e-10));
  Matrix rot = Matrix::Zero(2, 2);
  rot(0, 0) = 1.0;
  rot(1, 1) = Complex(0.0, 1.0);
  CHECK(check_postr(qb, rot, 1e-9).holds);
  CHECK(search_basis(qb).holds);
}

TEST_CASE("check_postr fails for a generic random channel basis") {
  // Not a theorem, but generic maps have complex condition entries at
  // U = I; pin one seed as a regression reference.
  const Channel ch = random_channel(2, 2, 2, 5150);
  const ConditionCheck c = check_postr(ch, Matrix::Identity(2, 2), 1e-9);
  CHECK_FALSE(c.holds);
}

TEST_CASE("choi_entrywise_nonneg") {
  CHECK(choi_entrywise_nonneg(identity_channel(3), 1e-12));
  // qubit class lambda1 >= |lambda2|, t2 = 0, t1 >= 0
  const Channel qb = qubit_canonical(Vector3(0.2, 0.0, 0.1), Vector3(0.6, 0.3, 0.2));
  CHECK(choi_entrywise_nonneg(qb, 1e-10));
  Matrix a(2, 2);
  a << 2.0, -1.0, -1.0, 2.0;
  CHECK_FALSE(choi_entrywise_nonneg(diagonal_map(a), 1e-10));
  // sufficiency: entrywise-nonnegative Choi implies the condition test
  CHECK(check_postr(qb, Matrix::Identity(2, 2), 1e-9).holds);
}

TEST_CASE("search_basis finds the identity when it already works") {
  const Channel wh = werner_holevo(3);
  OptimizerConfig cfg = basis_search_defaults();
  cfg.restarts = 2;
  const BasisSearchResult res = search_basis(wh, cfg);
  CHECK(res.holds);
  CHECK(res.min_entry >= -1e-9);
}

TEST_CASE("search_basis recovers a hidden good basis") {
  Rng rng(55);
  const Channel qb = qubit_canonical(Vector3(0, 0, 0.25), Vector3(0.6, 0.45, 0.4));
  const Matrix v = random_unitary(rng, 2);
  const Channel rotated = unitary_conjugated(qb, v);
  // oracle: conjugating by V moves the good basis to V^dag
  CHECK(check_postr(rotated, v.adjoint(), 1e-9).holds);
  const BasisSearchResult res = search_basis(rotated);
  CHECK(res.holds);
  // reported minimum matches an independent recomputation
  const ConditionCheck again = check_postr(rotated, res.best_unitary, 1e-9);
  CHECK(res.min_entry == again.min_entry);
}

TEST_CASE("recognize_form on the named families") {
  // unnormalized transpose-complement map via Werner-Holevo scaling
  const Channel wh = werner_holevo(3);
  const auto params = recognize_form(wh);
  REQUIRE(params.has_value());
  const double c = 1.0 / 2.0;  // 1/(d-1)
  for (Eigen::Index j = 0; j < 3; ++j)
    for (Eigen::Index l = 0; l < 3; ++l) {
      CHECK(params->d_matrix(j, l) == doctest::Approx(j == l ? 0.0 : c).epsilon(1e-12));
      if (j != l) {
        CHECK(params->a_offdiag(j, l).real() == doctest::Approx(-c).epsilon(1e-12));
        CHECK(params->epsilon(j, l) == -1.0);
      }
    }

  // QC map: D recovered, a = 0
  RealMatrix d(2, 2);
  d << 0.3, 0.6, 0.7, 0.4;
  const auto qc_params = recognize_form(qc_map(d));
  REQUIRE(qc_params.has_value());
  CHECK((qc_params->d_matrix - d).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(qc_params->a_offdiag.cwiseAbs().maxCoeff() < 1e-12);

  // depolarizing d=3, lambda=0.5
  const auto dep = recognize_form(depolarizing(3, 0.5));
  REQUIRE(dep.has_value());
  for (Eigen::Index j = 0; j < 3; ++j)
    for (Eigen::Index l = 0; l < 3; ++l) {
      const double expect = 0.5 * (j == l ? 1.0 : 0.0) + 0.5 / 3.0;
      CHECK(dep->d_matrix(j, l) == doctest::Approx(expect).epsilon(1e-9));
      if (j != l) {
        CHECK(dep->a_offdiag(j, l).real() == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(dep->epsilon(j, l) == 1.0);
      }
    }

  // identity: a = 1, eps = +1, D = I
  const auto id = recognize_form(identity_channel(2));
  REQUIRE(id.has_value());
  CHECK(id->a_offdiag(0, 1).real() == doctest::Approx(1.0));
  CHECK(id->epsilon(0, 1) == 1.0);

  // a generic random channel does not have the structure
  CHECK_FALSE(recognize_form(random_channel(3, 3, 3, 404)).has_value());
}

TEST_CASE("recognized maps satisfy the condition test at U = I") {
  std::vector<Channel> family;
  family.push_back(werner_holevo(3));
  RealMatrix d(3, 3);
  d << 0.2, 0.5, 0.1, 0.3, 0.25, 0.6, 0.5, 0.25, 0.3;
  family.push_back(qc_map(d));
  family.push_back(depolarizing(3, 0.4));
  Rng rng(56);
  family.push_back(diagonal_map(random_psd(rng, 3)));
  for (const Channel& ch : family) {
    CHECK(recognize_form(ch).has_value());
    CHECK(check_postr(ch, Matrix::Identity(ch.dim_in(), ch.dim_in()), 1e-9).holds);
  }
}

TEST_CASE("recognize_form rejects near-miss structures") {
  // perturb a QC map with a tiny generic CP admixture
  RealMatrix d(2, 2);
  d << 0.3, 0.6, 0.7, 0.4;
  const Channel qc = qc_map(d);
  const Channel noise = random_channel(2, 2, 2, 777);
  std::vector<Matrix> kraus;
  for (const Matrix& k : qc.kraus()) kraus.push_back(std::sqrt(0.999) * k);
  for (const Matrix& k : noise.kraus()) kraus.push_back(std::sqrt(0.001) * k);
  CHECK_FALSE(recognize_form(Channel(std::move(kraus), true), 1e-9).has_value());
}

TEST_SUITE_END();
