#include "doctest.h"
#include "qpnorm/channel.hpp"
#include "qpnorm/zoo.hpp"
#include "test_helpers.hpp"

using namespace qpnorm;
using namespace qpnorm::testing;

namespace {

// (Tr M) I - M^T without the 1/(d-1) normalization.
Channel unnormalized_wh(Eigen::Index d) {
  std::vector<Matrix> kraus;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a + 1; b < d; ++b) {
      Matrix k = Matrix::Zero(d, d);
      k(a, b) = 1.0;
      k(b, a) = -1.0;
      kraus.push_back(std::move(k));
    }
  return Channel(std::move(kraus));
}

}  // namespace

TEST_SUITE_BEGIN("channel");

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Channel({}), std::invalid_argument);
  CHECK_THROWS_AS(Channel({Matrix::Zero(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(Channel({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}),
                  std::invalid_argument);
  // TP flag is checked eagerly.
  CHECK_THROWS_AS(Channel({2.0 * Matrix::Identity(2, 2)}, true), InvalidChannelError);
}

TEST_CASE("apply: identity, Werner-Holevo, trace preservation") {
  Rng rng(31);
  const Matrix a = ginibre(rng, 3, 3);
  CHECK(max_abs_diff(identity_channel(3).apply(a), a) < 1e-15);

  const Channel wh = werner_holevo(3);
  const Matrix rho = random_psd(rng, 3);
  const Matrix expect = 0.5 * (rho.trace() * Matrix::Identity(3, 3) - rho.transpose());
  CHECK(max_abs_diff(wh.apply(rho), expect) < 1e-13);

  const Channel ch = random_channel(3, 2, 4, 77);
  const Matrix x = ginibre(rng, 3, 3);
  CHECK(std::abs(ch.apply(x).trace() - x.trace()) <= 1e-12);
  CHECK_THROWS_AS(ch.apply(Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("apply preserves Hermiticity and positivity") {
  Rng rng(32);
  const Channel ch = random_channel(3, 3, 3, 5);
  const Matrix h = random_hermitian(rng, 3);
  const Matrix out = ch.apply(h);
  CHECK(max_abs_diff(out, out.adjoint()) < 1e-13);
  CHECK(psd_check(ch.apply(random_psd(rng, 3)), 1e-11).is_psd);
}

TEST_CASE("choi_of identity qubit channel") {
  const Matrix c = choi_of(identity_channel(2)).entries;
  Matrix expect(4, 4);
  expect << 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1;
  CHECK(max_abs_diff(c, expect) < 1e-15);
}

TEST_CASE("choi blocks of a diagonal-Kraus channel are a_jk E_jk") {
  const double theta = 0.7;
  Matrix k(2, 2);
  k << 1.0, 0.0, 0.0, std::exp(Complex(0.0, theta));
  const Channel ch({k});
  const auto blocks = block_decompose(choi_of(ch).entries, 2);
  // a_jk = k_jj conj(k_kk)
  for (Eigen::Index j = 0; j < 2; ++j)
    for (Eigen::Index l = 0; l < 2; ++l) {
      const Complex a = k(j, j) * std::conj(k(l, l));
      CHECK(max_abs_diff(blocks[j * 2 + l], a * matrix_unit(j, l, 2)) < 1e-15);
    }
}

TEST_CASE("choi of a random channel is PSD with trace dim_in") {
  const Channel ch = random_channel(3, 3, 4, 123);
  const ChoiMatrix c = choi_of(ch);
  const auto verdict = psd_check(c.entries, 1e-10);
  CHECK(verdict.is_psd);
  CHECK(verdict.min_eigenvalue >= -1e-10);
  CHECK(c.entries.trace().real() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("kraus_from_choi") {
  const Channel id2 = identity_channel(2);
  const Channel rebuilt = kraus_from_choi(choi_of(id2));
  CHECK(rebuilt.kraus().size() == 1);
  // single Kraus operator equals I up to a phase
  const Complex phase = rebuilt.kraus()[0](0, 0);
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
  CHECK(max_abs_diff(rebuilt.kraus()[0], phase * Matrix::Identity(2, 2)) < 1e-12);

  // rank-1 Choi -> extreme map with a single Kraus operator
  Rng rng(33);
  const Matrix k = ginibre(rng, 2, 3);
  const Channel extreme = kraus_from_choi(choi_of(Channel({k})));
  CHECK(extreme.kraus().size() == 1);

  // round trip compared through the Choi matrix (Kraus gauge freedom)
  const Channel ch = random_channel(3, 2, 5, 99);
  const ChoiMatrix c = choi_of(ch);
  const Channel round = kraus_from_choi(c, tol::kraus_rank_cut, true);
  CHECK(max_abs_diff(choi_of(round).entries, c.entries) <= 1e-9);

  Matrix bad = Matrix::Identity(4, 4);
  bad(3, 3) = -1.0;
  CHECK_THROWS_AS(kraus_from_choi({2, 2, bad}), InvalidChannelError);
}

TEST_CASE("superop_matrix") {
  for (Eigen::Index d : {2, 3}) {
    CHECK(max_abs_diff(superop_matrix(identity_channel(d)).entries,
                       Matrix::Identity(d * d, d * d)) < 1e-15);
  }
  const Channel extreme({diag2(1.0, 0.0)});
  Matrix sdiag = Matrix::Zero(4, 4);
  sdiag(0, 0) = 1.0;
  CHECK(max_abs_diff(superop_matrix(extreme).entries, sdiag) < 1e-15);

  Rng rng(34);
  const Channel ch = random_channel(3, 2, 3, 41);
  const Matrix s = superop_matrix(ch).entries;
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = ginibre(rng, 3, 3);
    CHECK((s * vec_rm(a) - vec_rm(ch.apply(a))).cwiseAbs().maxCoeff() <= 1e-12);
  }
  // columns are vec(Phi(E_jk))
  for (Eigen::Index j = 0; j < 3; ++j)
    for (Eigen::Index k = 0; k < 3; ++k)
      CHECK((s.col(j * 3 + k) - vec_rm(ch.apply(matrix_unit(j, k, 3)))).cwiseAbs().maxCoeff() <
            1e-13);
}

TEST_CASE("choi_from_superop inverts choi_of") {
  const Channel ch = random_channel(2, 3, 3, 7);
  CHECK(max_abs_diff(choi_from_superop(superop_matrix(ch)).entries, choi_of(ch).entries) < 1e-13);
}

TEST_CASE("adjoint channel") {
  Rng rng(35);
  const Channel id3 = identity_channel(3);
  CHECK(max_abs_diff(superop_matrix(id3.adjoint()).entries, Matrix::Identity(9, 9)) < 1e-15);

  const Channel wh = werner_holevo(3);
  CHECK(max_abs_diff(wh.apply_adjoint(Matrix::Identity(3, 3)), Matrix::Identity(3, 3)) < 1e-13);
  // WH is self-adjoint as a superoperator
  CHECK(max_abs_diff(superop_matrix(wh.adjoint()).entries, superop_matrix(wh).entries) < 1e-13);

  const Channel ch = random_channel(3, 2, 4, 55);
  CHECK(max_abs_diff(superop_matrix(ch.adjoint()).entries,
                     superop_matrix(ch).entries.adjoint()) < 1e-13);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = ginibre(rng, 3, 3), b = ginibre(rng, 2, 2);
    const Complex lhs = hs_inner(ch.apply(a), b);
    const Complex rhs = hs_inner(a, ch.apply_adjoint(b));
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
  // involution
  CHECK(max_abs_diff(superop_matrix(ch.adjoint().adjoint()).entries,
                     superop_matrix(ch).entries) < 1e-14);
}

TEST_CASE("tensor_channel") {
  CHECK(max_abs_diff(superop_matrix(tensor_channel(identity_channel(2), identity_channel(3))).entries,
                     Matrix::Identity(36, 36)) < 1e-15);
  Rng rng(36);
  const Channel phi = random_channel(2, 2, 3, 10);
  const Channel omega = random_channel(3, 3, 2, 11);
  const Channel both = tensor_channel(phi, omega);
  const Matrix rho = random_psd(rng, 2), sigma = random_psd(rng, 3);
  CHECK(max_abs_diff(both.apply(kron(rho, sigma)), kron(phi.apply(rho), omega.apply(sigma))) <=
        1e-12);
  // superop of the tensor acts like the tensor action on any input
  const Matrix s = superop_matrix(both).entries;
  const Matrix x = ginibre(rng, 6, 6);
  CHECK((s * vec_rm(x) - vec_rm(both.apply(x))).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("is_cp / is_tp / is_unital") {
  const Channel id2 = identity_channel(2);
  CHECK(is_cp(id2));
  CHECK(is_tp(id2));
  CHECK(is_unital(id2));

  const Channel wh = werner_holevo(3);
  CHECK(is_cp(wh));
  CHECK(is_tp(wh));
  CHECK(is_unital(wh));

  const Channel raw = unnormalized_wh(3);
  CHECK(is_cp(raw));
  CHECK_FALSE(is_tp(raw));  // trace scales by d-1
}

TEST_CASE("contraction inequality for blocks of PSD inputs") {
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix gamma = random_psd(rng, 6);
    const auto blocks = block_decompose(gamma, 2);
    const Channel omega = random_channel(3, 3, 1 + trial % 3, 1000 + trial);
    for (Eigen::Index j = 0; j < 2; ++j)
      for (Eigen::Index k = 0; k < 2; ++k) {
        const Matrix ojk = omega.apply(blocks[j * 2 + k]);
        const double lhs = hs_inner(ojk, ojk).real();
        const double rhs = schatten_norm(omega.apply(blocks[j * 2 + j]), 2.0) *
                           schatten_norm(omega.apply(blocks[k * 2 + k]), 2.0);
        CHECK(lhs <= rhs + 1e-11);
      }
  }
}

TEST_SUITE_END();
