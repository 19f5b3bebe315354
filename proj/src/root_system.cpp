#include "rpt/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "rpt/error.hpp"
#include "rpt/linalg.hpp"

namespace rpt {

void RootSystemSpec::validate() const {
  if (!legal_rank(family, rank)) throw IllegalRank(name() + " is not a legal type");
}

std::string RootSystemSpec::name() const {
  return std::string(1, family_char(family)) + std::to_string(rank);
}

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
  if (text.size() < 2) throw IllegalRank("cannot parse system name '" + text + "'");
  Family f = family_from_char(text[0]);
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw IllegalRank("cannot parse system name '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) throw IllegalRank("rank out of range in '" + text + "'");
  }
  RootSystemSpec spec{f, rank};
  spec.validate();
  return spec;
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool Root::negative() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c > 0) return false;
    if (c < 0) nonzero = true;
  }
  return nonzero;
}

bool std_leq(const std::vector<int>& a, const std::vector<int>& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool std_leq(const Root& a, const Root& b) { return std_leq(a.coeffs, b.coeffs); }

std::size_t VecHash::operator()(const std::vector<int>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
  spec_.validate();
  const int n = spec_.rank;
  cartan_ = standard_cartan(spec_.family, n);
  d_ = symmetrizer(cartan_);
  form_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) form_[i][j] = d_[j] * cartan_[i][j];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) assert(form_[i][j] == form_[j][i]);

  // Positive roots by height-increasing closure with root strings:
  // beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0, where p is the
  // depth of the alpha_i-string below beta.
  std::map<std::vector<int>, int> seen;  // deterministic insertion bookkeeping
  std::vector<std::vector<int>> level;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, 1);
    level.push_back(e);
  }
  std::vector<std::vector<int>> all = level;
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : level) {
      for (int i = 0; i < n; ++i) {
        bool is_simple_i = false;
        if (c[i] == 1) {
          is_simple_i = true;
          for (int j = 0; j < n && is_simple_i; ++j)
            if (j != i && c[j] != 0) is_simple_i = false;
        }
        if (is_simple_i) continue;  // 2*alpha_i is never a root
        int p = 0;
        std::vector<int> down = c;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        long long pair = 0;
        for (int j = 0; j < n; ++j) pair += static_cast<long long>(c[j]) * cartan_[j][i];
        if (p - pair > 0) {
          std::vector<int> up = c;
          up[i] += 1;
          if (!seen.count(up)) {
            seen.emplace(up, 1);
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    level = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  positive_.reserve(all.size());
  for (auto& c : all) {
    Root r;
    r.len2 = len2_of(c);
    r.coeffs = std::move(c);
    index_.emplace(r.coeffs, static_cast<int>(positive_.size()));
    positive_.push_back(std::move(r));
  }
  simple_ids_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    simple_ids_[i] = index_.at(e);
  }

  // theta: the unique <=-maximal positive root.
  int candidates = 0;
  for (int i = 0; i < num_positive(); ++i) {
    bool maximal = true;
    for (int j = 0; j < num_positive() && maximal; ++j) {
      if (j != i && std_leq(positive_[i], positive_[j])) maximal = false;
    }
    if (maximal) {
      ++candidates;
      theta_id_ = i;
    }
  }
  if (candidates != 1) throw Error("root system has no unique highest root");

  max_len2_ = 0;
  min_len2_ = positive_[0].len2;
  for (const Root& r : positive_) {
    max_len2_ = std::max(max_len2_, r.len2);
    min_len2_ = std::min(min_len2_, r.len2);
  }

  // Fundamental coweights: columns of form^{-1}.
  RatMat f(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f[i][j] = form_[i][j];
  coweights_.assign(n, RatVec(n));
  for (int k = 0; k < n; ++k) {
    RatVec rhs(n, Rat(0)), x;
    rhs[k] = 1;
    bool ok = solve_rat(f, rhs, x);
    if (!ok) throw Error("bilinear form is singular");
    coweights_[k] = std::move(x);
  }
}

long long RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  const int n = rank();
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += a[i] * form_[i][j] * b[j];
  }
  return s;
}

long long RootSystem::len2_of(const std::vector<int>& a) const { return inner(a, a); }

int RootSystem::pairing(const Root& beta, const Root& gamma) const {
  if (!is_root(beta.coeffs)) throw NotARoot("pairing: beta is not a root");
  if (!is_root(gamma.coeffs)) throw NotARoot("pairing: gamma is not a root");
  long long num = 2 * inner(beta.coeffs, gamma.coeffs);
  long long den = len2_of(gamma.coeffs);
  assert(num % den == 0);
  return static_cast<int>(num / den);
}

long long RootSystem::pairing_with_simple(const std::vector<int>& c, int i) const {
  long long s = 0;
  for (int j = 0; j < rank(); ++j) s += static_cast<long long>(c[j]) * cartan_[j][i];
  return s;
}

Root RootSystem::reflect(const Root& beta, const Root& x) const {
  if (!is_root(beta.coeffs)) throw NotARoot("reflect: beta is not a root");
  long long num = 2 * inner(x.coeffs, beta.coeffs);
  long long den = len2_of(beta.coeffs);
  assert(num % den == 0);
  long long k = num / den;
  Root out;
  out.coeffs = x.coeffs;
  for (int i = 0; i < rank(); ++i) out.coeffs[i] -= static_cast<int>(k) * beta.coeffs[i];
  out.len2 = x.len2 ? x.len2 : len2_of(out.coeffs);
  return out;
}

int RootSystem::id_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const std::vector<int>& coeffs) const {
  if (id_of(coeffs) >= 0) return true;
  std::vector<int> neg(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  return id_of(neg) >= 0;
}

Root RootSystem::make_root(const std::vector<int>& coeffs) const {
  if (!is_root(coeffs)) throw NotARoot("make_root: not a root");
  Root r;
  r.coeffs = coeffs;
  r.len2 = len2_of(coeffs);
  return r;
}

}  // namespace rpt
