#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rpt/dynkin.hpp"
#include "rpt/rational.hpp"

namespace rpt {

struct RootSystemSpec {
  Family family;
  int rank;

  void validate() const;  // throws IllegalRank
  std::string name() const;
  static RootSystemSpec parse(const std::string& text);  // "E8", "A12", ...
};

// A root stored as its integer coefficient vector over the simple basis
// (Bourbaki order), with the squared length cached.
struct Root {
  std::vector<int> coeffs;
  long long len2 = 0;

  int height() const;
  bool positive() const;  // all coefficients >= 0, not zero
  bool negative() const;

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
};

// Standard partial order: componentwise on coefficient vectors.
bool std_leq(const Root& a, const Root& b);
bool std_leq(const std::vector<int>& a, const std::vector<int>& b);

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const;
};

class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<long long>>& form() const { return form_; }
  const std::vector<long long>& symmetrizer_d() const { return d_; }

  // Positive roots in (height, then lexicographic) order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  const Root& root(int id) const { return positive_[id]; }
  int theta_id() const { return theta_id_; }
  const Root& theta() const { return positive_[theta_id_]; }
  const std::vector<int>& marks() const { return theta().coeffs; }

  // coweights()[k] = coordinates of the k-th fundamental coweight over Pi.
  const RatMat& coweights() const { return coweights_; }

  // Exact bilinear form on coefficient vectors.
  long long inner(const std::vector<int>& a, const std::vector<int>& b) const;
  long long len2_of(const std::vector<int>& a) const;
  long long max_len2() const { return max_len2_; }
  long long min_len2() const { return min_len2_; }
  bool is_long(const Root& r) const { return r.len2 == max_len2_; }
  bool is_short(const Root& r) const { return r.len2 < max_len2_; }

  // <beta, gamma^v>; both arguments must be roots.
  int pairing(const Root& beta, const Root& gamma) const;
  // <c, alpha_i^v> for an arbitrary integer vector c (0-based i).
  long long pairing_with_simple(const std::vector<int>& c, int i) const;
  // s_beta(x) = x - <x, beta^v> beta; beta must be a root.
  Root reflect(const Root& beta, const Root& x) const;

  int id_of(const std::vector<int>& coeffs) const;  // -1 when not a positive root
  bool is_root(const std::vector<int>& coeffs) const;
  Root make_root(const std::vector<int>& coeffs) const;  // throws NotARoot
  int simple_id(int i) const { return simple_ids_[i]; }   // id of alpha_{i+1}
  Root simple_root(int i) const { return positive_[simple_ids_[i]]; }

 private:
  RootSystemSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<long long> d_;
  std::vector<std::vector<long long>> form_;
  std::vector<Root> positive_;
  std::unordered_map<std::vector<int>, int, VecHash> index_;
  std::vector<int> simple_ids_;
  int theta_id_ = -1;
  long long max_len2_ = 0, min_len2_ = 0;
  RatMat coweights_;
};

}  // namespace rpt
