#include "support.hpp"

#include <doctest.h>

using shl::Form;
using shl::MatrixQ;
using shl::Rational;
using shl::StructureErrorKind;
using test_support::form;

namespace {

StructureErrorKind failure_kind(const char* text) {
  try {
    shl::build_structure(shl::parse_model(text));
  } catch (const shl::StructureError& e) {
    return e.kind();
  }
  FAIL("structure accepted: " << text);
  return StructureErrorKind::kShape;
}

}  // namespace

TEST_CASE("flat torus structure") {
  auto ak = shl::build_structure(test_support::load_spec("torus4.mfd"));
  // Je1 = e2, Je3 = e4.
  CHECK(ak.J() == MatrixQ{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  CHECK(ak.volume() == form("e1234", 4, 4));
}

TEST_CASE("Kodaira-Thurston J is derived from omega and the metric") {
  auto ak = shl::build_structure(test_support::load_spec("kt.mfd"));
  const MatrixQ& j = ak.J();
  CHECK(j.column(0) == shl::VectorQ{0, 0, 0, 1});
  CHECK(j.column(1) == shl::VectorQ{0, 0, 1, 0});
  CHECK(j * j == -MatrixQ::identity(4));
}

TEST_CASE("invalid structures are rejected by kind") {
  CHECK(failure_kind("dim = 4\nstructure = (0,0,0,12)\nomega = e12 + e34\n") == StructureErrorKind::kNotClosed);
  CHECK(failure_kind("dim = 4\nomega = e12\n") == StructureErrorKind::kDegenerate);
  CHECK(failure_kind("dim = 4\nomega = e12 + e34\nmetric = rows [ [1,0,0,0], [0,-1,0,0], [0,0,1,0], [0,0,0,1] ]\n") ==
        StructureErrorKind::kMetricNotPositive);
  CHECK(failure_kind("dim = 4\nomega = e12 + e34\nmetric = rows [ [2,0,0,0], [0,1,0,0], [0,0,1,0], [0,0,0,1] ]\n") ==
        StructureErrorKind::kJNotComplex);
  CHECK(failure_kind("dim = 4\nomega = e12 + e34\nJ = rows [ [1,0,0,0], [0,1,0,0], [0,0,1,0], [0,0,0,1] ]\n") ==
        StructureErrorKind::kJNotComplex);
  // Je1 = e3, Je2 = −e4: J² = −1 but ω(Je1, Je2) = −1.
  CHECK(failure_kind("dim = 4\nomega = e12 + e34\nJ = rows [ [0,0,-1,0], [0,0,0,1], [1,0,0,0], [0,-1,0,0] ]\n") ==
        StructureErrorKind::kOmegaNotJInvariant);
  // J = −J_std preserves ω but ω(·, J·) is negative definite.
  CHECK(failure_kind("dim = 4\nomega = e12 + e34\nJ = rows [ [0,1,0,0], [-1,0,0,0], [0,0,0,1], [0,0,-1,0] ]\n") ==
        StructureErrorKind::kIncompatibleMetric);
  // Solvable but not unimodular: de2 = e12.
  CHECK(failure_kind("dim = 4\nd e2 = e12\nomega = e12 + e34\n") == StructureErrorKind::kNotUnimodular);
}

TEST_CASE("hodge star") {
  auto ak = shl::build_structure(test_support::load_spec("torus4.mfd"));
  CHECK(shl::hodge_star(ak, 2).apply(form("e12", 4, 2).coords()) == form("e34", 4, 2).coords());
  CHECK(ak.star(0).apply({1}) == ak.volume().coords());
  CHECK(ak.star(3) * ak.star(1) == -MatrixQ::identity(4));
  auto nil = shl::build_structure(test_support::load_spec("free2step6.mfd"));
  for (int k = 0; k <= 6; ++k) {
    const Rational sign = k % 2 ? -1 : 1;
    CHECK(nil.star(6 - k) * nil.star(k) == sign * MatrixQ::identity(shl::form_space_size(6, k)));
  }
}

TEST_CASE("Lefschetz operators") {
  auto ak = shl::build_structure(test_support::load_spec("torus4.mfd"));
  auto [L, Lambda] = shl::lefschetz_maps(ak);
  CHECK(Lambda.apply(ak.omega()) == Form::scalar(4, 2));
  CHECK(Lambda.block(0).rows() == 0);
  CHECK(Lambda.block(1).rows() == 0);
  CHECK(Lambda.apply(form("e12", 4, 2)) == Form::scalar(4, 1));
  CHECK(ak.inner(ak.omega(), ak.omega()) == 2);
  for (int k = 2; k <= 4; ++k)
    CHECK(Lambda.block(k) == ak.star_inverse(k - 2) * shl::wedge_matrix(ak.omega(), 4 - k) * ak.star(k));
}

TEST_CASE("primitive forms") {
  auto ak = shl::build_structure(test_support::load_spec("kt.mfd"));
  CHECK(shl::primitive_subspace(ak, 0).dim() == 1);
  CHECK(shl::primitive_subspace(ak, 1).dim() == 4);
  CHECK(shl::primitive_subspace(ak, 2).dim() == 5);
  CHECK(shl::primitive_subspace(ak, 3).dim() == 0);
  auto six = shl::build_structure(test_support::load_spec("nil6.mfd"));
  CHECK(shl::primitive_subspace(six, 2).dim() == 14);
  CHECK(shl::primitive_subspace(six, 3).dim() == 14);
}

TEST_CASE("Lefschetz decomposition") {
  auto ak = shl::build_structure(test_support::load_spec("torus4.mfd"));
  auto parts = shl::lefschetz_decomposition(ak, ak.omega());
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].r == 1);
  CHECK(parts[0].primitive == Form::scalar(4, 1));

  Form prim = form("e13", 4, 2);
  parts = shl::lefschetz_decomposition(ak, prim);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].r == 0);
  CHECK(parts[0].primitive == prim);

  parts = shl::lefschetz_decomposition(ak, form("e12", 4, 2));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].r == 0);
  CHECK(parts[0].primitive == form("1/2 e12 - 1/2 e34", 4, 2));
  CHECK(parts[1].r == 1);
  CHECK(parts[1].primitive == Form::scalar(4, Rational(1, 2)));
}

TEST_CASE("J-split of 2-forms") {
  auto ak = shl::build_structure(test_support::load_spec("kt.mfd"));
  auto split = shl::j_split_2forms(ak);
  CHECK(split.plus_J.dim() == 4);
  CHECK(split.minus_J.dim() == 2);
  CHECK(split.plus_J.contains(ak.omega().coords()));
  auto six = shl::j_split_2forms(shl::build_structure(test_support::load_spec("free2step6.mfd")));
  CHECK(six.plus_J.dim() == 9);
  CHECK(six.minus_J.dim() == 6);
  CHECK_FALSE(six.plus_g.has_value());
}

TEST_CASE("self-dual split for the identity metric") {
  auto ak = shl::build_structure(test_support::load_spec("torus4.mfd"));
  auto [plus, minus] = shl::sd_asd_split(ak);
  auto span = [](std::vector<const char*> forms) {
    std::vector<shl::VectorQ> v;
    for (auto f : forms) v.push_back(form(f, 4, 2).coords());
    return shl::Subspace::span(6, v);
  };
  CHECK(plus == span({"e12 + e34", "e13 - e24", "e14 + e23"}));
  CHECK(minus == span({"e12 - e34", "e13 + e24", "e14 - e23"}));
  CHECK(plus.contains(ak.omega().coords()));
  CHECK_THROWS_AS(shl::sd_asd_split(shl::build_structure(test_support::load_spec("torus6.mfd"))), shl::DimensionError);
}
