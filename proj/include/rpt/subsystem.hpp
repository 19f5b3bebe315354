#pragma once

#include <vector>

#include "rpt/root_system.hpp"

namespace rpt {

struct DiagramComponent {
  std::vector<int> simple_pos;  // positions into Subsystem::simple_ids
  Family family;
  int rank;
  // bourbaki[p] = position (into simple_pos) of Bourbaki node p+1;
  // lexicographically least matching bijection.
  std::vector<int> bourbaki;
};

// A root subsystem closed under negation, described by its standard positive
// system Psi cap Phi+.
struct Subsystem {
  const RootSystem* parent = nullptr;
  std::vector<int> pos_ids;     // sorted ids into parent positive roots
  std::vector<int> simple_ids;  // simple system of the standard positive system
  std::vector<DiagramComponent> components;

  bool contains_pos(int id) const;
  int rank() const;  // rank of the span
};

// Minimal root subsystem containing the generators (closure under all
// reflections s_beta, beta in the closure).
Subsystem subsystem_of(const RootSystem& rs, const std::vector<Root>& generators);

// Wraps an already-closed set given by its positive part.
Subsystem subsystem_from_positive(const RootSystem& rs, std::vector<int> pos_ids);

struct ExtendedDiagram {
  // Nodes 0..n-1 are the simple roots, node n is -theta;
  // bond[i][j] = |<x_i, x_j^v>| (0 when orthogonal).
  std::vector<std::vector<int>> bond;
  // 1-based indices of the simple roots alpha such that the diagram induced
  // on (Pi minus {alpha}) plus {-theta} stays connected, i.e. the alphas
  // whose standard parabolic face is a facet.
  std::vector<int> facet_alphas;
};

ExtendedDiagram extended_diagram(const RootSystem& rs);

}  // namespace rpt
