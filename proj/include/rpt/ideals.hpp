#pragma once

#include <string>
#include <vector>

#include "rpt/geometry.hpp"
#include "rpt/subsystem.hpp"

namespace rpt {

// A subset of the positive roots, usually upward closed.
struct RootIdeal {
  const RootSystem* rs = nullptr;
  std::vector<int> members;  // sorted ids into rs->positive_roots()

  bool contains(int id) const;
  int size() const { return static_cast<int>(members.size()); }
};

struct IdealFlags {
  bool ad_nilpotent = false;
  bool abelian = false;
  bool nilradical = false;
};

// Principal ad-nilpotent ideal (beta^<=) = { gamma : beta <= gamma }.
RootIdeal principal_ideal(const RootSystem& rs, const Root& beta);

IdealFlags classify_ideal(const RootSystem& rs, const std::vector<int>& members);

// All abelian ideals, i.e. upward-closed sum-free subsets of the positive
// system. Two independent strategies; enumerate_abelian_ideals forwards to
// the antichain one. Rank is guarded at 7.
std::vector<RootIdeal> enumerate_abelian_ideals(const RootSystem& rs);
std::vector<RootIdeal> enumerate_abelian_ideals_antichain(const RootSystem& rs);
std::vector<RootIdeal> enumerate_abelian_ideals_filter(const RootSystem& rs);

struct NilradicalType {
  Family family = Family::A;
  int rank = 0;
  int k = 0;  // canonical representative of the diagram-automorphism class

  std::string str() const;  // e.g. "D8,1"
  bool same_as(const NilradicalType& other) const;
};

struct FacetIdeal {
  RootIdeal ideal;
  int alpha = 0;  // 1-based Bourbaki index of the defining simple root
  int mu_id = -1;
  Subsystem equal_rank;  // the standard equal-rank subsystem for alpha
  NilradicalType type;

  // Simple system {mu} u (Pi minus {alpha}) of the equal-rank subsystem;
  // slot 0 is mu, then the remaining simples in Bourbaki order.
  std::vector<int> primed_simple_ids;
  // Node of the defining simple root in the model used for triangulation
  // orders (for family A this is the high-side representative of k).
  int model_k = 0;
  // model_to_primed[p] = position in primed_simple_ids of model Bourbaki
  // node p+1.
  std::vector<int> model_to_primed;
};

std::vector<FacetIdeal> facet_ideals(const RootSystem& rs);

struct FaceData {
  std::vector<int> S;  // 1-based simple indices
  RootIdeal ideal;
  int mu_id = -1;
  int dim = 0;
};

FaceData face_ideal(const RootSystem& rs, const std::vector<int>& S);  // EmptyS

struct InvolutionMap {
  std::vector<int> word;                       // 1-based simple reflection indices
  std::vector<std::vector<int>> matrix;        // columns = images of the simples
  std::vector<std::pair<int, int>> mapping;    // member id -> member id
  bool involutive = false;
  bool order_reversing = false;
  bool swaps_theta_mu = false;
};

// The order involution w_{0, Pi minus S} restricted to the face ideal of S.
InvolutionMap order_involution(const RootSystem& rs, const std::vector<int>& S);

// Applies the matrix of an involution/Weyl word to a coefficient vector.
std::vector<int> apply_matrix(const std::vector<std::vector<int>>& m, const std::vector<int>& v);

struct SliceComponent {
  std::vector<int> component_pos_ids;  // positive roots of the component
  std::vector<int> simple_ids;         // its simple system
  std::vector<int> nilradical;         // members of I inside the component
  int generator_id = -1;               // the multiplicity-1 simple generating it
};

// Cuts an abelian nilradical I by a linear hyperplane and certifies that each
// component of Phi cap H meets I in an abelian nilradical.
// Throws CertificationFailure when the certified structure fails.
std::vector<SliceComponent> intersect_with_hyperplane(const RootSystem& rs, const RootIdeal& I,
                                                      const Hyperplane& H);

}  // namespace rpt
