#include <cmath>
#include <string>

#include "doctest.h"

#include "braket/repsl2c.hpp"
#include "support/check.hpp"
#include "support/oracles.hpp"
#include "support/reps.hpp"

using namespace braket;
using braket::testing::all_reps;
using braket::testing::expected_signature;
using braket::testing::levi_civita;

namespace {

const Complex kI{0.0, 1.0};

std::string name(const CoupledRep& rep) {
  return rep.diagonal ? "[" + std::to_string(rep.j1.twice()) + "/2]"
                      : "[" + std::to_string(rep.j1.twice()) + "/2," +
                            std::to_string(rep.j2.twice()) + "/2]";
}

ComplexMatrix casimir(const Triplet& t) { return t[0] * t[0] + t[1] * t[1] + t[2] * t[2]; }

bool su2_relations(const Triplet& j, double tol) {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix rhs = ComplexMatrix::Zero(j[0].rows(), j[0].cols());
      for (int c = 0; c < 3; ++c) rhs += kI * double(levi_civita(a, b, c)) * j[c];
      if (max_abs(commutator(j[a], j[b]) - rhs) > tol) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("weights") {
  CHECK(Weight::from_real(1.5).twice() == 3);
  CHECK(Weight(3).is_half_integer());
  CHECK(Weight(4).multiplicity() == 5);
  CHECK_ERROR_CODE(Weight(-1), ErrorCode::InvalidWeights);
  CHECK_ERROR_CODE(Weight::from_real(0.25), ErrorCode::InvalidWeights);
}

TEST_CASE("su2 generators") {
  const Su2Irrep zero = su2_generators(Weight(0));
  for (const auto& m : zero.J) {
    CHECK(m.rows() == 1);
    CHECK(m(0, 0) == Complex(0.0));
  }

  // j = 1/2: J+ has the single element sqrt(3/4 - (-1/2)(1/2)) = 1
  const Su2Irrep half = su2_generators(Weight(1));
  ComplexMatrix j1(2, 2), j2(2, 2), j3(2, 2);
  j1 << 0, 0.5, 0.5, 0;
  j2 << 0, -0.5 * kI, 0.5 * kI, 0;
  j3 << 0.5, 0, 0, -0.5;
  CHECK(max_abs(half.J[0] - j1) < 1e-15);
  CHECK(max_abs(half.J[1] - j2) < 1e-15);
  CHECK(max_abs(half.J[2] - j3) < 1e-15);

  for (int t = 0; t <= 6; ++t) {
    const Su2Irrep irr = su2_generators(Weight(t));
    const double j = t / 2.0;
    CHECK(max_abs(casimir(irr.J) - j * (j + 1) * identity(t + 1)) < 1e-12);
    CHECK(su2_relations(irr.J, 1e-12));
    for (int a = 0; a <= t; ++a) CHECK(irr.J[2](a, a) == Complex(j - a));
    // ladder elements: J1 + i J2 raises, entries are real and non-negative
    const ComplexMatrix raise = irr.J[0] + kI * irr.J[1];
    for (int a = 1; a <= t; ++a) {
      const double lam = j - a;
      CHECK(std::abs(raise(a - 1, a) - std::sqrt(j * (j + 1) - lam * (lam + 1))) < 1e-14);
    }
  }
}

TEST_CASE("build_rep shapes and signatures") {
  const CoupledRep r = build_rep(Weight(1), Weight(0));
  CHECK(r.dim() == 4);
  CHECK(rep_signature(r) == Signature{2, 2});
  for (auto [t1, t2] : {std::pair{2, 0}, {2, 1}, {3, 1}, {1, 4}}) {
    const CoupledRep rep = build_rep(Weight(t1), Weight(t2));
    CHECK(rep.dim() == 2 * (t1 + 1) * (t2 + 1));
    const int n = (t1 + 1) * (t2 + 1);
    CHECK(rep_signature(rep) == Signature{n, n});
  }
  CHECK(rep_signature(build_rep_diag(Weight(0))) == Signature{1, 0});
  CHECK(rep_signature(build_rep_diag(Weight(1))) == Signature{1, 3});
  CHECK(rep_signature(build_rep_diag(Weight(2))) == Signature{6, 3});
  CHECK(rep_signature(build_rep_diag(Weight(3))) == Signature{6, 10});
  CHECK(build_rep_diag(Weight(3)).dim() == 16);

  for (const CoupledRep& rep : all_reps(36)) {
    CAPTURE(name(rep));
    const auto [p, q] = expected_signature(rep.j1.twice(), rep.j2.twice());
    CHECK(rep_signature(rep) == Signature{p, q});
  }

  CHECK_ERROR_CODE(build_rep(Weight(1), Weight(1)), ErrorCode::EqualWeights);
  CHECK_ERROR_CODE(build_rep(Weight(1), Weight(0), 2), ErrorCode::InvalidWeights);
  CHECK_ERROR_CODE(build_rep_diag(Weight(1), 0), ErrorCode::InvalidWeights);
}

TEST_CASE("epsilon") {
  CHECK(default_epsilon(Weight(1), Weight(0)) == 1);
  CHECK(default_epsilon(Weight(2), Weight(1)) == -1);
  CHECK(default_epsilon(Weight(3), Weight(1)) == -1);
  CHECK(default_epsilon(Weight(4), Weight(2)) == 1);
  CHECK(default_epsilon(Weight(1)) == -1);
  CHECK(default_epsilon(Weight(2)) == 1);

  // flipping epsilon on [j] exchanges n_plus and n_minus
  const CoupledRep flipped = build_rep_diag(Weight(2), -1);
  CHECK(flipped.epsilon == -1);
  CHECK(rep_signature(flipped) == Signature{3, 6});
  CHECK(rep_signature(build_rep(Weight(1), Weight(0), -1)) == Signature{2, 2});
}

TEST_CASE("canonical metric layout") {
  // [1/2,0]: the two blocks are K^(1/2) (x) K^0 and K^0 (x) K^(1/2); the metric swaps them
  const CoupledRep r = build_rep(Weight(1), Weight(0));
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap.topRightCorner(2, 2) = identity(2);
  swap.bottomLeftCorner(2, 2) = identity(2);
  CHECK(r.metric.eta() == swap);

  // [1/2]: epsilon times the swap of the two tensor slots
  const CoupledRep d = build_rep_diag(Weight(1));
  ComplexMatrix slot = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) slot(a * 2 + b, b * 2 + a) = -1.0;
  CHECK(d.metric.eta() == slot);
}

TEST_CASE("generator relations for every rep up to dimension 16") {
  for (const CoupledRep& rep : all_reps(16)) {
    CAPTURE(name(rep));
    const MetricOperator& m = rep.metric;
    CHECK(su2_relations(rep.M, 1e-10));
    CHECK(su2_relations(rep.N, 1e-10));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) CHECK(max_abs(commutator(rep.M[a], rep.N[b])) < 1e-10);
      CHECK(max_abs(rep.I[a] - (rep.M[a] + rep.N[a])) < 1e-14);
      CHECK(max_abs(rep.K[a] + kI * (rep.M[a] - rep.N[a])) < 1e-14);
      // M_a^+ = eta N_a eta^-1 and the mirror relation
      CHECK(max_abs(rep.M[a].adjoint() - m.eta() * rep.N[a] * m.eta_inv()) < 1e-10);
      CHECK(max_abs(rep.N[a].adjoint() - m.eta() * rep.M[a] * m.eta_inv()) < 1e-10);
      CHECK(is_semi_hermitian({rep.I[a], OperatorKind::DownDown}, m));
      CHECK(is_semi_hermitian({rep.K[a], OperatorKind::DownDown}, m));
    }
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        ComplexMatrix ii = ComplexMatrix::Zero(rep.dim(), rep.dim());
        ComplexMatrix ik = ii;
        ComplexMatrix kk = ii;
        for (int c = 0; c < 3; ++c) {
          const double e = levi_civita(a, b, c);
          ii += kI * e * rep.I[c];
          ik += kI * e * rep.K[c];
          kk -= kI * e * rep.I[c];
        }
        CHECK(max_abs(commutator(rep.I[a], rep.I[b]) - ii) < 1e-10);
        CHECK(max_abs(commutator(rep.I[a], rep.K[b]) - ik) < 1e-10);
        CHECK(max_abs(commutator(rep.K[a], rep.K[b]) - kk) < 1e-10);
      }
    }
  }
}

TEST_CASE("chiral projectors") {
  for (const CoupledRep& rep : all_reps(16)) {
    if (rep.diagonal) {
      CHECK_ERROR_CODE(chiral_projectors(rep), ErrorCode::WrongRepShape);
      continue;
    }
    CAPTURE(name(rep));
    const ChiralPair c = chiral_projectors(rep);
    const Eigen::Index n = rep.dim();
    CHECK(c.left.rank() == n / 2);
    CHECK(c.right.rank() == n / 2);
    CHECK(max_abs(c.left.mat() + c.right.mat() - identity(n)) < 1e-12);
    CHECK(max_abs(c.left.mat() * c.right.mat()) < 1e-12);
    CHECK(max_abs(dirac_adjoint(c.left.op(), rep.metric).mat - c.right.mat()) < 1e-12);
    CHECK_FALSE(is_semi_hermitian(c.left.op(), rep.metric));
    // the chiral subspaces are invariant under M and N but not under eta
    for (int a = 0; a < 3; ++a) {
      CHECK(max_abs(c.left.mat() * rep.M[a] * c.left.mat() - rep.M[a] * c.left.mat()) < 1e-12);
    }
    const ComplexMatrix& eta = rep.metric.eta();
    CHECK(max_abs(eta * c.left.mat() - c.left.mat() * eta * c.left.mat()) > 0.5);
  }
}

TEST_CASE("rotation basis") {
  for (const CoupledRep& rep : all_reps(16)) {
    CAPTURE(name(rep));
    const RotatedRep rot = rotation_basis(rep);
    const CoupledRep& r = rot.rep;
    CHECK(r.basis == RepBasis::Rotation);
    REQUIRE(static_cast<Eigen::Index>(r.labels.size()) == r.dim());

    const ComplexMatrix i2 = casimir(r.I);
    for (Eigen::Index k = 0; k < r.dim(); ++k) {
      const double s = r.labels[k].twice_first / 2.0;
      const double sigma = r.labels[k].twice_second / 2.0;
      ComplexVector e = ComplexVector::Zero(r.dim());
      e(k) = 1.0;
      CHECK(max_abs(i2 * e - s * (s + 1) * e) < 1e-10);
      CHECK(max_abs(r.I[2] * e - sigma * e) < 1e-10);
      // same statement in canonical components
      const ComplexVector v = rot.change.col(k);
      CHECK(max_abs(casimir(rep.I) * v - s * (s + 1) * v) < 1e-10);
    }

    // metric two ways
    const ComplexMatrix congruent = rot.change.adjoint() * rep.metric.eta() * rot.change;
    CHECK(max_abs(r.metric.eta() - congruent) < 1e-10);
    CHECK(max_abs(spectral_rotation_metric(r) - congruent) < 1e-10);
    CHECK(rep_signature(r) == rep_signature(rep));
  }
  CHECK_ERROR_CODE(rotation_basis(rotation_basis(build_rep(Weight(1), Weight(0))).rep),
                   ErrorCode::WrongRepShape);
  CHECK_ERROR_CODE(spectral_rotation_metric(build_rep(Weight(1), Weight(0))),
                   ErrorCode::WrongRepShape);
}

TEST_CASE("rotation basis of [j]: spectral form with (-1)^(2j) (-1)^s") {
  for (int t = 0; t <= 3; ++t) {
    const CoupledRep rep = build_rep_diag(Weight(t));
    const CoupledRep r = rotation_basis(rep).rep;
    for (Eigen::Index k = 0; k < r.dim(); ++k) {
      const int twice_s = r.labels[k].twice_first;
      const double sign = ((t + twice_s / 2) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(r.metric.eta()(k, k) - rep.epsilon * sign) < 1e-10);
    }
  }
}

TEST_CASE("orthonormal basis") {
  const CoupledRep rot = rotation_basis(build_rep(Weight(1), Weight(0))).rep;
  const CoupledRep ortho = orthonormal_basis(rot);
  CHECK(ortho.basis == RepBasis::Orthonormal);
  int plus = 0;
  int minus = 0;
  for (Eigen::Index k = 0; k < 4; ++k) {
    for (Eigen::Index l = 0; l < 4; ++l) {
      if (k != l) CHECK(std::abs(ortho.metric.eta()(k, l)) < 1e-12);
    }
    const double d = ortho.metric.eta()(k, k).real();
    CHECK(std::abs(std::abs(d) - 1.0) < 1e-12);
    (d > 0 ? plus : minus) += 1;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);

  for (const CoupledRep& rep : all_reps(16)) {
    if (rep.diagonal) continue;
    CAPTURE(name(rep));
    const CoupledRep rr = rotation_basis(rep).rep;
    const CoupledRep o = orthonormal_basis(rr);
    const Eigen::Index n = o.dim();
    CHECK(max_abs(o.metric.eta() - ComplexMatrix(o.metric.eta().diagonal().asDiagonal())) < 1e-10);
    CHECK(rep_signature(o) == rep_signature(rep));

    // (|(j1,j2)s,sigma> +- |(j2,j1)s,sigma>)/sqrt2 evaluated under the rotation metric
    const ComplexMatrix g = spectral_rotation_metric(rr);
    for (Eigen::Index k = 0; k < n / 2; ++k) {
      ComplexVector vp = ComplexVector::Zero(n);
      ComplexVector vm = ComplexVector::Zero(n);
      vp(k) = vm(k) = 1.0 / std::sqrt(2.0);
      vp(k + n / 2) = 1.0 / std::sqrt(2.0);
      vm(k + n / 2) = -1.0 / std::sqrt(2.0);
      const Complex np = vp.dot(g * vp);
      const Complex nm = vm.dot(g * vm);
      CHECK(std::abs(std::abs(np) - 1.0) < 1e-12);
      CHECK(std::abs(np + nm) < 1e-12);
      CHECK(std::abs(vp.dot(g * vm)) < 1e-12);
      CHECK(std::abs(o.metric.eta()(k, k) - np) < 1e-10);
      CHECK(o.labels[k].parity == 1);
      CHECK(o.labels[k + n / 2].parity == -1);
    }
  }

  CHECK_ERROR_CODE(orthonormal_basis(rotation_basis(build_rep_diag(Weight(1))).rep),
                   ErrorCode::WrongRepShape);
  CHECK_ERROR_CODE(orthonormal_basis(build_rep(Weight(1), Weight(0))), ErrorCode::WrongRepShape);
  CHECK_ERROR_CODE(chiral_projectors(ortho), ErrorCode::WrongRepShape);
}

TEST_CASE("basis names") {
  for (RepBasis b : {RepBasis::Canonical, RepBasis::Rotation, RepBasis::Orthonormal})
    CHECK(rep_basis_from_string(to_string(b)) == b);
  CHECK_ERROR_CODE(rep_basis_from_string("spherical"), ErrorCode::SchemaError);
}
