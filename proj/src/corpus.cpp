#include "shl/corpus.hpp"

#include "shl/almost_kahler.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace shl {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi]; modulo bias is irrelevant here and keeps the
  /// stream identical across standard libraries.
  int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool chance(int numerator, int denominator) { return uniform(1, denominator) <= numerator; }

 private:
  std::mt19937_64 engine_;
};

std::vector<Form> random_constants(int dim, Rng& rng) {
  std::vector<Form> d;
  for (int m = 1; m <= dim; ++m) {
    Form f(dim, 2);
    for (int i = 1; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (rng.chance(1, dim == 4 ? 2 : 4)) f.add_term(MultiIndex::from_indices({i, j}), rng.chance(1, 2) ? 1 : -1);
    d.push_back(std::move(f));
  }
  return d;
}

Rational pairing(const MatrixQ& omega, const VectorQ& u, const VectorQ& v) { return dot(u, omega.apply(v)); }

/// Columns v1, w1, v2, w2, … with ω(v_i, w_i) = 1 and all other pairings zero.
MatrixQ symplectic_frame(const MatrixQ& omega, Rng& rng) {
  const std::size_t dim = omega.rows();
  MatrixQ u = MatrixQ::identity(dim);
  for (std::size_t s = 0; s < dim + 2; ++s) {
    auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(dim) - 1));
    auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(dim) - 1));
    if (a == b) continue;
    const int c = rng.chance(1, 2) ? 1 : -1;
    for (std::size_t r = 0; r < dim; ++r) u(r, a) += c * u(r, b);
  }
  std::vector<VectorQ> pool;
  for (std::size_t c = 0; c < dim; ++c) pool.push_back(u.column(c));

  std::vector<VectorQ> frame;
  while (!pool.empty()) {
    VectorQ v = pool.front();
    pool.erase(pool.begin());
    auto partner = std::find_if(pool.begin(), pool.end(), [&](const VectorQ& w) { return !is_zero(pairing(omega, v, w)); });
    if (partner == pool.end()) throw std::logic_error("symplectic_frame: degenerate form");
    VectorQ w = *partner;
    pool.erase(partner);
    Rational scale = 1 / pairing(omega, v, w);
    for (auto& x : w) x *= scale;
    for (auto& x : pool) {
      Rational a = pairing(omega, x, w);
      Rational b = pairing(omega, x, v);
      for (std::size_t r = 0; r < dim; ++r) x[r] = x[r] - a * v[r] + b * w[r];
    }
    frame.push_back(std::move(v));
    frame.push_back(std::move(w));
  }
  return MatrixQ::from_columns(dim, frame);
}

MatrixQ standard_j(std::size_t dim) {
  MatrixQ j(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  return j;
}

Form transform(const MatrixQ& power, const Form& f) { return Form(f.dim(), f.degree(), power.apply(f.coords())); }

}  // namespace

ManifoldSpec random_structure(int dim, std::uint64_t seed) {
  if (dim != 4 && dim != 6) throw std::invalid_argument("random_structure: dimension must be 4 or 6");
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(dim));
  const int n = dim / 2;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Form> constants = random_constants(dim, rng);
    if (!check_complex(dim, constants).passed) continue;
    LieModel model(dim, constants);

    Subspace closed = kernel(model.differential(2));
    std::optional<Form> omega;
    for (int tries = 0; tries < 8 && !omega; ++tries) {
      VectorQ coords(closed.ambient_dim());
      for (std::size_t i = 0; i < closed.dim(); ++i) {
        const int c = rng.uniform(-2, 2);
        if (c == 0) continue;
        VectorQ b = closed.basis_vector(i);
        for (std::size_t r = 0; r < coords.size(); ++r) coords[r] += c * b[r];
      }
      Form candidate(dim, 2, coords);
      Form top = Form::scalar(dim, 1);
      for (int i = 0; i < n; ++i) top = wedge(top, candidate);
      if (!top.is_zero()) omega = candidate;
    }
    if (!omega) continue;

    const MatrixQ omega_mat = two_form_matrix(*omega);
    const MatrixQ frame = symplectic_frame(omega_mat, rng);
    const auto sz = static_cast<std::size_t>(dim);
    const MatrixQ frame_inv = inverse(frame);

    ManifoldSpec spec;
    if (seed % 2 == 0) {
      // Re-express everything in the Darboux coframe dual to `frame`.
      const MatrixQ t1 = frame.transpose();
      const MatrixQ t2 = exterior_power(t1, 2);
      std::vector<Form> darboux;
      for (std::size_t a = 0; a < sz; ++a) {
        Form da(dim, 2);
        for (std::size_t i = 0; i < sz; ++i)
          if (!is_zero(frame_inv(a, i))) da += frame_inv(a, i) * constants[i];
        darboux.push_back(transform(t2, da));
      }
      spec.model = LieModel(dim, std::move(darboux));
      spec.omega = transform(t2, *omega);
      spec.J = standard_j(sz);
      spec.metric = MatrixQ::identity(sz);
    } else {
      spec.model = model;
      spec.omega = *omega;
      spec.J = frame * standard_j(sz) * frame_inv;
      spec.metric = frame_inv.transpose() * frame_inv;
    }
    try {
      build_structure(spec);
    } catch (const StructureError&) {
      continue;
    }
    return spec;
  }
  throw std::runtime_error("random_structure: no valid structure found");
}

std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count4, std::size_t count6) {
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count4 + count6; ++i) {
    const int dim = i < count4 ? 4 : 6;
    const std::uint64_t s = seed * 1000003ULL + i;
    out.push_back({"random" + std::to_string(dim) + "-" + std::to_string(seed) + "-" + std::to_string(i), random_structure(dim, s)});
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".mfd") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back({f.stem().string(), parse_model(read_file(f))});
  return out;
}

}  // namespace shl
