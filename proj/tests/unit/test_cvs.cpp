#include "doctest.h"

#include "braket/cvs.hpp"
#include "support/check.hpp"
#include "support/random.hpp"

using namespace braket;
using braket::testing::Rng;
using braket::testing::random_metric;
using braket::testing::random_vector;

namespace {

ComplexVector vec(std::initializer_list<Complex> xs) {
  ComplexVector v(xs.size());
  Eigen::Index k = 0;
  for (Complex x : xs) v(k++) = x;
  return v;
}

const Complex kI{0.0, 1.0};

}  // namespace

TEST_CASE("metric operator construction") {
  const MetricOperator m = MetricOperator::diagonal({1, -1});
  CHECK(m.dim() == 2);
  CHECK(approx_equal(m.eta() * m.eta_inv(), identity(2), 1e-15));

  ComplexMatrix bad(2, 2);
  bad << 1, 2, 0, 1;
  CHECK_ERROR_CODE(MetricOperator(bad), ErrorCode::NotHermitian);
  ComplexMatrix singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK_ERROR_CODE(MetricOperator(singular), ErrorCode::Singular);
}

TEST_CASE("relate_bra") {
  const VarVector b = relate_bra({vec({1, kI}), Variance::KetDown});
  CHECK(b.variance == Variance::BraDown);
  CHECK(b.components == vec({1, -kI}));

  const VarVector r = relate_bra({vec({2, -3}), Variance::KetUp});
  CHECK(r.variance == Variance::BraUp);
  CHECK(r.components == vec({2, -3}));

  CHECK_ERROR_CODE(relate_bra(b), ErrorCode::WrongVariance);

  const VarVector back = relate_ket(b);
  CHECK(back.variance == Variance::KetDown);
  CHECK(back.components == vec({1, kI}));
  CHECK_ERROR_CODE(relate_ket(VarVector{vec({1}), Variance::KetUp}), ErrorCode::WrongVariance);
}

TEST_CASE("relate_bra is anti-linear") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(1, 5);
    const Complex alpha = rng.complex();
    const Complex beta = rng.complex();
    const ComplexVector x = random_vector(n, rng);
    const ComplexVector y = random_vector(n, rng);
    for (Variance v : {Variance::KetDown, Variance::KetUp}) {
      const VarVector lhs = relate_bra({alpha * x + beta * y, v});
      const ComplexVector rhs = std::conj(alpha) * relate_bra({x, v}).components +
                                std::conj(beta) * relate_bra({y, v}).components;
      CHECK(max_abs(lhs.components - rhs) < 1e-14);
    }
  }
}

TEST_CASE("couple") {
  const VarVector x{vec({1, 1}), Variance::KetDown};
  const VarVector u = couple(MetricOperator::unit(2), x);
  CHECK(u.variance == Variance::KetUp);
  CHECK(u.components == x.components);

  const VarVector c = couple(MetricOperator::diagonal({1, -1}), x);
  CHECK(c.variance == Variance::KetUp);
  CHECK(c.components == vec({1, -1}));

  CHECK_ERROR_CODE(couple(MetricOperator::unit(2), relate_bra(x)), ErrorCode::WrongVariance);
  CHECK_ERROR_CODE(couple(MetricOperator::unit(3), x), ErrorCode::DimensionMismatch);

  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(1, 5);
    const MetricOperator m = random_metric(n, rng);
    const VarVector y{random_vector(n, rng), Variance::KetDown};
    const VarVector round = couple(m, couple(m, y));
    CHECK(round.variance == Variance::KetDown);
    CHECK(max_abs(round.components - y.components) < 1e-10);
  }
}

TEST_CASE("dual_form") {
  const VarVector x{vec({1, 0}), Variance::KetDown};
  const VarVector yhat{vec({1, 0}), Variance::KetUp};
  CHECK(dual_form(relate_bra(yhat), x) == Complex(1.0));

  // basis duality <(i)|(j)> = delta
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      ComplexVector ei = ComplexVector::Zero(3);
      ComplexVector ej = ComplexVector::Zero(3);
      ei(i) = 1.0;
      ej(j) = 1.0;
      const Complex v = dual_form({ei, Variance::BraUp}, {ej, Variance::KetDown});
      CHECK(v == Complex(i == j ? 1.0 : 0.0));
    }
  }

  CHECK_ERROR_CODE(dual_form(relate_bra(x), x), ErrorCode::VarianceMismatch);
  CHECK_ERROR_CODE(dual_form(relate_bra(yhat), yhat), ErrorCode::VarianceMismatch);
  CHECK_ERROR_CODE(dual_form(x, x), ErrorCode::VarianceMismatch);
}

TEST_CASE("dual forms are hermitian") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(1, 5);
    const VarVector y{random_vector(n, rng), Variance::KetDown};
    const VarVector xhat{random_vector(n, rng), Variance::KetUp};
    // <y|x^> versus <x^|y>*
    const Complex a = dual_form(relate_bra(y), xhat);
    const Complex b = dual_form(relate_bra(xhat), y);
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
  }
}

TEST_CASE("scalar_product") {
  const MetricOperator mink = MetricOperator::diagonal({1, -1, -1, -1});
  const VarVector t{vec({1, 0, 0, 0}), Variance::KetDown};
  CHECK(scalar_product(mink, t, t) == Complex(1.0));

  // a non-zero vector whose "squared norm" vanishes
  const MetricOperator m = MetricOperator::diagonal({1, -1});
  const VarVector x{vec({1, 1}), Variance::KetDown};
  CHECK(scalar_product(m, x, x) == Complex(0.0));

  CHECK_ERROR_CODE(scalar_product(m, x, couple(m, x)), ErrorCode::VarianceMismatch);
  CHECK_ERROR_CODE(scalar_product(m, relate_bra(x), relate_bra(x)), ErrorCode::VarianceMismatch);
}

TEST_CASE("scalar products: hermiticity and the coupling isometry") {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 5);
    const MetricOperator m = random_metric(n, rng);
    const VarVector x{random_vector(n, rng), Variance::KetDown};
    const VarVector y{random_vector(n, rng), Variance::KetDown};
    const VarVector xhat = couple(m, x);
    const VarVector yhat = couple(m, y);

    const Complex hxy = scalar_product(m, x, y);
    CHECK(std::abs(hxy - std::conj(scalar_product(m, y, x))) < 1e-10);
    CHECK(std::abs(scalar_product(m, xhat, yhat) -
                   std::conj(scalar_product(m, yhat, xhat))) < 1e-10);

    // eta is an isometry
    CHECK(std::abs(scalar_product(m, xhat, yhat) - hxy) < 1e-10);
    // the mixed dual form reproduces h
    CHECK(std::abs(dual_form(relate_bra(xhat), y) - hxy) < 1e-10);

    // independent evaluation of h(x,y) = sum conj(x^i) eta_ij y^j
    Complex direct = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        direct += std::conj(x.components(i)) * m.eta()(i, j) * y.components(j);
    CHECK(std::abs(direct - hxy) < 1e-12);
  }
}

TEST_CASE("a non-hermitian metric candidate breaks hermiticity of h") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(2, 4);
    const ComplexMatrix c = braket::testing::random_invertible(n, rng);
    if (max_abs(c - c.adjoint()) < 0.1) continue;
    bool broken = false;
    for (int pair = 0; pair < 50 && !broken; ++pair) {
      const ComplexVector x = random_vector(n, rng);
      const ComplexVector y = random_vector(n, rng);
      const Complex hxy = x.dot(c * y);
      const Complex hyx = y.dot(c * x);
      broken = std::abs(hxy - std::conj(hyx)) > 1e-6;
    }
    CHECK(broken);
    CHECK_ERROR_CODE(MetricOperator(c), ErrorCode::NotHermitian);
  }
}

TEST_CASE("raise_lower_index") {
  const ComplexVector x = vec({{1, 2}, {3, -1}});
  CHECK(raise_lower_index(MetricOperator::unit(2), x, IndexDirection::Lower) == x);
  CHECK(raise_lower_index(MetricOperator::unit(2), x, IndexDirection::Raise) == x);
  CHECK(raise_lower_index(MetricOperator::diagonal({1, -1}), x, IndexDirection::Lower) ==
        vec({{1, 2}, {-3, 1}}));
  CHECK_ERROR_CODE(raise_lower_index(MetricOperator::unit(3), x, IndexDirection::Lower),
                   ErrorCode::DimensionMismatch);

  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(1, 5);
    const MetricOperator m = random_metric(n, rng);
    const ComplexVector y = random_vector(n, rng);
    const ComplexVector low = raise_lower_index(m, y, IndexDirection::Lower);
    CHECK(max_abs(raise_lower_index(m, low, IndexDirection::Raise) - y) < 1e-10);
  }
}

TEST_CASE("variance names") {
  for (Variance v : {Variance::KetDown, Variance::KetUp, Variance::BraDown, Variance::BraUp}) {
    CHECK(variance_from_string(to_string(v)) == v);
  }
  CHECK_ERROR_CODE(variance_from_string("sideways"), ErrorCode::SchemaError);
}
