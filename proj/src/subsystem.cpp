#include "rpt/subsystem.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "rpt/error.hpp"

namespace rpt {

bool Subsystem::contains_pos(int id) const {
  return std::binary_search(pos_ids.begin(), pos_ids.end(), id);
}

int Subsystem::rank() const { return static_cast<int>(simple_ids.size()); }

namespace {

// Simple system of the standard positive system: the members that are not a
// sum of two members.
std::vector<int> simples_of(const RootSystem& rs, const std::vector<int>& pos_ids) {
  std::set<std::vector<int>> members;
  for (int id : pos_ids) members.insert(rs.root(id).coeffs);
  std::vector<int> out;
  for (int id : pos_ids) {
    const auto& c = rs.root(id).coeffs;
    bool decomposable = false;
    for (int jd : pos_ids) {
      const auto& a = rs.root(jd).coeffs;
      std::vector<int> rest(c.size());
      bool nonneg = true;
      for (std::size_t t = 0; t < c.size(); ++t) {
        rest[t] = c[t] - a[t];
        if (rest[t] < 0) nonneg = false;
      }
      if (!nonneg || rest == std::vector<int>(c.size(), 0)) continue;
      if (members.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(id);
  }
  return out;
}

void fill_components(const RootSystem& rs, Subsystem& sub) {
  const int m = static_cast<int>(sub.simple_ids.size());
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < m; ++b) {
        if (comp[b] >= 0) continue;
        if (rs.inner(rs.root(sub.simple_ids[a]).coeffs, rs.root(sub.simple_ids[b]).coeffs) != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
      }
    }
    ++ncomp;
  }
  sub.components.clear();
  for (int c = 0; c < ncomp; ++c) {
    DiagramComponent dc;
    for (int i = 0; i < m; ++i) {
      if (comp[i] == c) dc.simple_pos.push_back(i);
    }
    const int k = static_cast<int>(dc.simple_pos.size());
    std::vector<std::vector<int>> cart(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        cart[a][b] = rs.pairing(rs.root(sub.simple_ids[dc.simple_pos[a]]),
                                rs.root(sub.simple_ids[dc.simple_pos[b]]));
      }
    }
    TypeMatch tm = identify_cartan(cart);
    dc.family = tm.family;
    dc.rank = tm.rank;
    dc.bourbaki = tm.bijections.front();
    sub.components.push_back(std::move(dc));
  }
  std::sort(sub.components.begin(), sub.components.end(),
            [](const DiagramComponent& a, const DiagramComponent& b) {
              return a.simple_pos.front() < b.simple_pos.front();
            });
}

}  // namespace

Subsystem subsystem_of(const RootSystem& rs, const std::vector<Root>& generators) {
  std::set<std::vector<int>> closure;
  std::vector<std::vector<int>> queue;
  for (const Root& g : generators) {
    if (!rs.is_root(g.coeffs)) throw NotARoot("subsystem_of: generator is not a root");
    if (closure.insert(g.coeffs).second) queue.push_back(g.coeffs);
  }
  // Reflection closure; the result is the minimal subsystem containing the
  // generators.
  auto reflect_once = [&](const std::vector<int>& mirror, long long mirror_len2,
                          const std::vector<int>& v) {
    long long k = 2 * rs.inner(v, mirror) / mirror_len2;
    std::vector<int> img(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) img[t] = v[t] - static_cast<int>(k) * mirror[t];
    if (closure.insert(img).second) queue.push_back(img);
  };
  while (!queue.empty()) {
    std::vector<int> x = queue.back();
    queue.pop_back();
    long long x_len2 = rs.len2_of(x);
    std::vector<std::vector<int>> snapshot(closure.begin(), closure.end());
    for (const auto& b : snapshot) {
      reflect_once(b, rs.len2_of(b), x);
      reflect_once(x, x_len2, b);
    }
  }
  std::vector<int> pos;
  for (const auto& c : closure) {
    int id = rs.id_of(c);
    if (id >= 0) pos.push_back(id);
  }
  std::sort(pos.begin(), pos.end());
  return subsystem_from_positive(rs, std::move(pos));
}

Subsystem subsystem_from_positive(const RootSystem& rs, std::vector<int> pos_ids) {
  Subsystem sub;
  sub.parent = &rs;
  std::sort(pos_ids.begin(), pos_ids.end());
  pos_ids.erase(std::unique(pos_ids.begin(), pos_ids.end()), pos_ids.end());
  sub.pos_ids = std::move(pos_ids);
  sub.simple_ids = simples_of(rs, sub.pos_ids);
  fill_components(rs, sub);
  return sub;
}

ExtendedDiagram extended_diagram(const RootSystem& rs) {
  const int n = rs.rank();
  ExtendedDiagram ed;
  ed.bond.assign(n + 1, std::vector<int>(n + 1, 0));
  std::vector<Root> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back(rs.simple_root(i));
  Root neg_theta = rs.theta();
  for (int& c : neg_theta.coeffs) c = -c;
  nodes.push_back(neg_theta);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      ed.bond[i][j] = std::abs(rs.pairing(nodes[i], nodes[j]));
    }
  }
  // alpha qualifies when the diagram on (Pi minus {alpha}) plus {-theta}
  // stays connected, i.e. Phi((Pi minus {alpha})^eo) is irreducible.
  for (int rm = 0; rm < n; ++rm) {
    std::vector<int> keep;
    for (int i = 0; i <= n; ++i) {
      if (i != rm) keep.push_back(i);
    }
    std::vector<bool> vis(keep.size(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < keep.size(); ++b) {
        if (!vis[b] && ed.bond[keep[a]][keep[b]] != 0) {
          vis[b] = true;
          stack.push_back(static_cast<int>(b));
          ++count;
        }
      }
    }
    if (count == static_cast<int>(keep.size())) ed.facet_alphas.push_back(rm + 1);
  }
  return ed;
}

}  // namespace rpt
