#pragma once

#include "oracle.hpp"

#include "shl/operators.hpp"
#include "shl/corpus.hpp"

#include <string>

#ifndef SHL_TEST_CORPUS_DIR
#define SHL_TEST_CORPUS_DIR "corpus"
#endif

namespace test_support {

inline shl::ManifoldSpec load_spec(const std::string& name) {
  return shl::parse_model(shl::read_file(std::string(SHL_TEST_CORPUS_DIR) + "/" + name));
}

inline shl::HodgeComplex load_complex(const std::string& name) {
  return shl::HodgeComplex(shl::build_structure(load_spec(name)));
}

/// Raw structure constants and (ω, J) of a built structure, as oracle input.
inline oracle::Model to_oracle(const shl::AKStructure& ak) {
  oracle::Model m;
  m.dim = ak.dim();
  const auto sz = static_cast<std::size_t>(m.dim);
  for (const auto& f : ak.model().d_on_coframe()) {
    std::map<std::pair<int, int>, oracle::Q> terms;
    for (const auto& idx : shl::enumerate_basis(m.dim, 2)) {
      const auto& c = f.coefficient(idx);
      if (c != 0) terms[{idx.indices()[0], idx.indices()[1]}] = c;
    }
    m.de.push_back(terms);
  }
  m.omega.assign(sz, oracle::Vec(sz));
  for (const auto& idx : shl::enumerate_basis(m.dim, 2)) {
    const auto i = static_cast<std::size_t>(idx.indices()[0] - 1), j = static_cast<std::size_t>(idx.indices()[1] - 1);
    m.omega[i][j] = ak.omega().coefficient(idx);
    m.omega[j][i] = -m.omega[i][j];
  }
  m.J.assign(sz, oracle::Vec(sz));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) m.J[i][j] = ak.J()(i, j);
  return m;
}

inline shl::Form form(const std::string& text, int dim, int degree) { return shl::parse_form(text, dim, degree); }

}  // namespace test_support
