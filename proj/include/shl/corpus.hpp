#pragma once

#include "shl/manifold_spec.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace shl {

/// Random compatible almost-Kähler structure on a random nilpotent model of
/// the given dimension (4 or 6), reproducible from `seed`. Structure
/// constants are sparse small integers with d² = 0 enforced by rejection; ω is
/// a random closed nondegenerate 2-form; (J, g) come from a symplectic
/// Gram–Schmidt of a random unimodular frame. Even seeds are expressed in the
/// resulting Darboux coframe (metric = identity), odd seeds in the original
/// coframe with a non-identity metric.
ManifoldSpec random_structure(int dim, std::uint64_t seed);

struct CorpusEntry {
  std::string name;
  ManifoldSpec spec;
};

/// count4 structures of dimension 4 followed by count6 of dimension 6.
std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count4, std::size_t count6);

/// All `*.mfd` files in a directory, sorted by file name.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);

}  // namespace shl
