#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "clonesub/reductions.hpp"

namespace testrand {

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline clonesub::DirectedGraph graph(std::mt19937_64& rng, unsigned maxVertices) {
  clonesub::DirectedGraph g;
  const unsigned n = 2 + static_cast<unsigned>(below(rng, maxVertices - 1));
  for (unsigned i = 0; i < n; ++i) g.vertices.insert("v" + std::to_string(i));
  const unsigned m = static_cast<unsigned>(below(rng, 2 * n));
  for (unsigned i = 0; i < m; ++i) {
    g.edges.emplace("v" + std::to_string(below(rng, n)), "v" + std::to_string(below(rng, n)));
  }
  g.source = "v" + std::to_string(below(rng, n));
  g.target = "v" + std::to_string(below(rng, n));
  return g;
}

inline clonesub::Hypergraph hypergraph(std::mt19937_64& rng, unsigned maxVertices) {
  clonesub::Hypergraph h;
  const unsigned n = 2 + static_cast<unsigned>(below(rng, maxVertices - 1));
  auto v = [&] { return "v" + std::to_string(below(rng, n)); };
  for (unsigned i = 0; i < n; ++i) h.vertices.insert("v" + std::to_string(i));
  const unsigned m = static_cast<unsigned>(below(rng, 2 * n));
  for (unsigned i = 0; i < m; ++i) {
    auto a = v();
    auto b = v();
    h.edges.push_back({{a, b}, v()});
  }
  const unsigned sources = 1 + static_cast<unsigned>(below(rng, 3));
  for (unsigned i = 0; i < sources; ++i) h.sources.insert(v());
  h.target = v();
  return h;
}

}  // namespace testrand
