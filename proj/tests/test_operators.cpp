#include "support.hpp"

#include "shl/cohomology.hpp"

#include <doctest.h>

using shl::Form;
using shl::GradedOperator;
using shl::HodgeComplex;
using shl::MatrixQ;
using shl::Rational;
using test_support::form;
using test_support::load_complex;

TEST_CASE("torus operators vanish") {
  HodgeComplex hc = load_complex("torus4.mfd");
  CHECK(hc.d_lambda().is_zero());
  CHECK(hc.laplacian_d().is_zero());
  CHECK(hc.laplacian_bc(1).is_zero());
  CHECK(hc.laplacian_aeppli(1).is_zero());
  auto pj = hc.p_j();
  CHECK(pj.domain.dim() == 5);
  CHECK(pj.matrix.is_zero());
  CHECK(pj.kernel_dim() == 5);
}

TEST_CASE("d-lambda identities") {
  for (const char* name : {"kt.mfd", "fil4.mfd", "nil6.mfd", "free2step6.mfd"}) {
    HodgeComplex hc = load_complex(name);
    const auto& ak = hc.structure();
    CHECK(hc.d_lambda().apply(ak.omega()).is_zero());
    CHECK((hc.d_lambda() * hc.d_lambda()).is_zero());
    CHECK((hc.d() * hc.d_lambda() + hc.d_lambda() * hc.d()).is_zero());
    CHECK(hc.d_lambda() == hc.d() * ak.Lambda() - ak.Lambda() * hc.d());
  }
  HodgeComplex kt = load_complex("kt.mfd");
  Form a = form("e34", 4, 2);
  CHECK(kt.d_lambda().apply(kt.d_lambda().apply(a)).is_zero());
}

TEST_CASE("d-lambda matches the Poisson contraction of the oracle") {
  for (const char* name : {"kt.mfd", "fil4.mfd", "nil6.mfd", "free2step6.mfd"}) {
    HodgeComplex hc = load_complex(name);
    oracle::Model m = test_support::to_oracle(hc.structure());
    for (int k = 2; k <= hc.dim(); ++k) {
      oracle::Mat lam = oracle::lambda_matrix(m, k);
      const MatrixQ& ours = hc.structure().Lambda().block(k);
      REQUIRE(ours.rows() == lam.size());
      bool same = true;
      for (std::size_t i = 0; i < ours.rows(); ++i)
        for (std::size_t j = 0; j < ours.cols(); ++j) same = same && ours(i, j) == lam[i][j];
      CHECK(same);
    }
  }
}

TEST_CASE("adjoints") {
  HodgeComplex hc = load_complex("free2step6.mfd");
  const auto& ak = hc.structure();
  CHECK(shl::adjoint(ak, GradedOperator(6, 1)).is_zero());
  CHECK(shl::adjoint(ak, hc.d_adjoint()) == hc.d());
  CHECK(shl::adjoint(ak, ak.L()) == ak.Lambda());
  for (const char* name : {"kt.mfd", "free2step6.mfd"}) {
    HodgeComplex h = load_complex(name);
    const auto& s = h.structure();
    for (int k = 1; k <= h.dim(); ++k)
      CHECK(h.d_adjoint().block(k) == -(s.star(h.dim() - k + 1) * h.d().block(h.dim() - k) * s.star(k)));
  }
}

TEST_CASE("Riemannian Laplacian") {
  HodgeComplex kt = load_complex("kt.mfd");
  CHECK(shl::kernel(kt.laplacian_d().block(1)).dim() == 3);
  CHECK(kt.laplacian_d().apply(kt.structure().volume()).is_zero());
  CHECK(kt.laplacian_d() == shl::laplacian_d(kt.structure()));
}

TEST_CASE("fourth-order Laplacians") {
  for (const char* name : {"kt.mfd", "fil4.mfd", "free2step6.mfd"}) {
    HodgeComplex hc = load_complex(name);
    for (int k = 0; k <= hc.dim(); ++k) {
      auto bc = shl::kernel(hc.laplacian_bc(1).block(k));
      auto ae = shl::kernel(hc.laplacian_aeppli(1).block(k));
      for (Rational lambda : {Rational(2), Rational(1, 3)}) {
        CHECK(shl::kernel(hc.laplacian_bc(lambda).block(k)) == bc);
        CHECK(shl::kernel(hc.laplacian_aeppli(lambda).block(k)) == ae);
      }
      CHECK(bc.dim() == shl::h_bc(hc, k, shl::CohomologyMode::kQuotient).dim);
    }
    CHECK(shl::kernel(hc.laplacian_aeppli(1).block(0)).dim() == 1);
  }
  HodgeComplex kt = load_complex("kt.mfd");
  CHECK_THROWS_AS(kt.laplacian_bc(0), std::invalid_argument);
  CHECK_THROWS_AS(kt.laplacian_aeppli(Rational(-1, 2)), std::invalid_argument);
  CHECK(kt.laplacian_bc(2) == shl::laplacian_bc(kt.structure(), 2));
}

TEST_CASE("P_J removes the omega component") {
  for (const char* name : {"kt.mfd", "fil4.mfd", "nil6.mfd", "free2step6.mfd"}) {
    HodgeComplex hc = load_complex(name);
    const auto& ak = hc.structure();
    auto pj = hc.p_j();
    CHECK(pj.domain == shl::primitive_subspace(ak, 2));
    for (std::size_t i = 0; i < pj.domain.dim(); ++i) {
      shl::VectorQ image = pj.domain.basis().apply(pj.matrix.column(i));
      CHECK(ak.inner(Form(ak.dim(), 2, image), ak.omega()) == 0);
    }
    // The kernel is the primitive harmonic forms, one less than b2.
    CHECK(pj.kernel_dim() + 1 == shl::betti(ak.model(), 2));
  }
}
