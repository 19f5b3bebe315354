#include "rpt/dynkin.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "rpt/error.hpp"
#include "rpt/rational.hpp"

namespace rpt {

char family_char(Family f) { return static_cast<char>(f); }

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw IllegalRank(std::string("unknown family letter '") + c + "'");
  }
}

bool legal_rank(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::vector<std::vector<int>> standard_cartan(Family f, int rank) {
  if (!legal_rank(f, rank)) {
    throw IllegalRank(std::string(1, family_char(f)) + std::to_string(rank) +
                      " is not a legal type");
  }
  const int n = rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      // alpha_n short: <alpha_{n-1}, alpha_n^v> = -2
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      // alpha_n long
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 2);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4.
      chain(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case Family::F:
      chain(0, 1);
      chain(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case Family::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

std::vector<long long> symmetrizer(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  // Propagate d along edges within each component, as exact rationals, then
  // scale the component to minimal positive integers.
  std::vector<Rat> d(n, Rat(0));
  std::vector<long long> out(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    std::vector<int> comp;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan[i][j] == 0) continue;
        // symmetry of d[j]*a[i][j] forces d[j]/d[i] = a[j][i]/a[i][j]
        Rat dj = d[i] * Rat(cartan[j][i]) / Rat(cartan[i][j]);
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw Error("symmetrizer: inconsistent Cartan matrix");
        }
      }
    }
    Int lcm = 1, g = 0;
    for (int i : comp) lcm = lcm / gcd(lcm, denominator(d[i])) * denominator(d[i]);
    for (int i : comp) {
      Rat v = d[i] * lcm;
      assert(denominator(v) == 1);
      g = gcd(g, numerator(v));
    }
    for (int i : comp) {
      Rat v = d[i] * lcm / g;
      out[i] = static_cast<long long>(numerator(v));
      assert(out[i] > 0);
    }
  }
  return out;
}

namespace {

// Per-node invariant used to prune the bijection search: sorted multiset of
// (a[i][j], a[j][i]) over neighbours.
std::vector<std::pair<int, int>> node_signature(const std::vector<std::vector<int>>& a, int i) {
  std::vector<std::pair<int, int>> sig;
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    if (j != i && a[i][j] != 0) sig.emplace_back(a[i][j], a[j][i]);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

void match_recurse(const std::vector<std::vector<int>>& model,
                   const std::vector<std::vector<int>>& given,
                   const std::vector<std::vector<std::pair<int, int>>>& sig_given,
                   const std::vector<std::vector<std::pair<int, int>>>& sig_model,
                   std::vector<int>& map, std::vector<bool>& used, int p,
                   std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(model.size());
  if (p == n) {
    out.push_back(map);
    return;
  }
  for (int q = 0; q < n; ++q) {
    if (used[q] || sig_model[p] != sig_given[q]) continue;
    bool ok = true;
    for (int p2 = 0; p2 < p && ok; ++p2) {
      if (model[p][p2] != given[q][map[p2]] || model[p2][p] != given[map[p2]][q]) ok = false;
    }
    if (!ok) continue;
    map[p] = q;
    used[q] = true;
    match_recurse(model, given, sig_given, sig_model, map, used, p + 1, out);
    used[q] = false;
  }
}

std::vector<std::vector<int>> match_cartan(const std::vector<std::vector<int>>& model,
                                           const std::vector<std::vector<int>>& given) {
  const int n = static_cast<int>(model.size());
  std::vector<std::vector<std::pair<int, int>>> sg(n), sm(n);
  for (int i = 0; i < n; ++i) {
    sg[i] = node_signature(given, i);
    sm[i] = node_signature(model, i);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  match_recurse(model, given, sg, sm, map, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TypeMatch identify_cartan(const std::vector<std::vector<int>>& given) {
  const int n = static_cast<int>(given.size());
  static constexpr std::array<Family, 7> order = {Family::A, Family::B, Family::C, Family::D,
                                                  Family::E, Family::F, Family::G};
  for (Family f : order) {
    if (!legal_rank(f, n)) continue;
    auto model = standard_cartan(f, n);
    auto maps = match_cartan(model, given);
    if (!maps.empty()) return TypeMatch{f, n, std::move(maps)};
  }
  throw UnknownType("identify_cartan: no standard type matches (rank " + std::to_string(n) + ")");
}

}  // namespace rpt
