#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rpt/error.hpp"
#include "rpt/root_system.hpp"
#include "rpt/subsystem.hpp"
#include "test_oracles.hpp"

using namespace rpt;

namespace {

RootSystem make(const std::string& name) { return RootSystem(RootSystemSpec::parse(name)); }

std::vector<int> vec(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(RootSystemSpec::parse("C2"), IllegalRank);
  CHECK_THROWS_AS(RootSystemSpec::parse("D3"), IllegalRank);
  CHECK_THROWS_AS(RootSystemSpec::parse("E9"), IllegalRank);
  CHECK_THROWS_AS(RootSystemSpec::parse("F5"), IllegalRank);
  CHECK_THROWS_AS(RootSystemSpec::parse("H3"), IllegalRank);
  CHECK(RootSystemSpec::parse("A1").rank == 1);
}

TEST_CASE("A1 smallest case") {
  RootSystem rs = make("A1");
  CHECK(rs.num_positive() == 1);
  CHECK(rs.theta().coeffs == vec({1}));
  CHECK(rs.marks() == vec({1}));
}

TEST_CASE("G2 has six positive roots, matching the reflection-closure oracle") {
  RootSystem rs = make("G2");
  CHECK(rs.num_positive() == 6);
  auto oracle = test::closure_positive_roots(rs);
  CHECK(oracle.size() == 6);
}

TEST_CASE("E8 has 120 positive roots and the right marks") {
  RootSystem rs = make("E8");
  CHECK(rs.num_positive() == 120);
  CHECK(rs.marks() == vec({2, 3, 4, 6, 5, 4, 3, 2}));
  auto oracle = test::closure_positive_roots(rs);
  CHECK(oracle.size() == 120);
}

TEST_CASE("closure soundness for every supported system") {
  for (const auto& spec : test::supported_specs()) {
    RootSystem rs(spec);
    auto oracle = test::closure_positive_roots(rs);
    std::set<std::vector<int>> got;
    for (const Root& r : rs.positive_roots()) got.insert(r.coeffs);
    std::set<std::vector<int>> want(oracle.begin(), oracle.end());
    CAPTURE(spec.name());
    CHECK(got == want);
  }
}

TEST_CASE("theta is the maximum and marks are its coefficients") {
  for (const auto& spec : test::supported_specs()) {
    RootSystem rs(spec);
    for (const Root& r : rs.positive_roots()) CHECK(std_leq(r, rs.theta()));
  }
}

TEST_CASE("pairing examples") {
  RootSystem a2 = make("A2");
  CHECK(a2.pairing(a2.simple_root(0), a2.simple_root(1)) == -1);
  RootSystem g2 = make("G2");
  // alpha1 short, alpha2 long: <alpha2, alpha1^v> = -3
  CHECK(g2.pairing(g2.simple_root(1), g2.simple_root(0)) == -3);
  for (const Root& r : g2.positive_roots()) CHECK(g2.pairing(r, r) == 2);
  Root fake;
  fake.coeffs = vec({5, 5});
  CHECK_THROWS_AS(g2.pairing(fake, g2.simple_root(0)), NotARoot);
}

TEST_CASE("pairing sign symmetry") {
  for (const auto& name : {"B3", "G2", "A3"}) {
    RootSystem rs = make(name);
    for (const Root& b : rs.positive_roots()) {
      for (const Root& g : rs.positive_roots()) {
        int pq = rs.pairing(b, g), qp = rs.pairing(g, b);
        CHECK(((pq > 0) == (qp > 0)));
        CHECK(((pq < 0) == (qp < 0)));
      }
    }
  }
}

TEST_CASE("reflection examples") {
  RootSystem a2 = make("A2");
  Root a1 = a2.simple_root(0);
  CHECK(a2.reflect(a1, a1).coeffs == vec({-1, 0}));
  CHECK(a2.reflect(a1, a2.simple_root(1)).coeffs == vec({1, 1}));
  RootSystem b2 = make("B2");
  // alpha2 short: s_{alpha2}(alpha1) = alpha1 + 2 alpha2
  CHECK(b2.reflect(b2.simple_root(1), b2.simple_root(0)).coeffs == vec({1, 2}));
}

TEST_CASE("reflection is an involution preserving length") {
  for (const auto& name : {"A3", "B3", "C3", "G2"}) {
    RootSystem rs = make(name);
    for (const Root& b : rs.positive_roots()) {
      for (const Root& x : rs.positive_roots()) {
        Root y = rs.reflect(b, x);
        CHECK(rs.is_root(y.coeffs));
        CHECK(y.len2 == x.len2);
        CHECK(rs.reflect(b, y).coeffs == x.coeffs);
      }
    }
  }
}

TEST_CASE("standard order examples") {
  RootSystem a3 = make("A3");
  CHECK(std_leq(a3.simple_root(0), a3.theta()));
  CHECK_FALSE(std_leq(a3.simple_root(0), a3.simple_root(1)));
  Root r12 = a3.make_root(vec({1, 1, 0}));
  Root r23 = a3.make_root(vec({0, 1, 1}));
  CHECK_FALSE(std_leq(r12, r23));
}

TEST_CASE("prop: three summable roots have at least two pairwise sums (small scope)") {
  for (const auto& name : {"A3", "B3", "C3", "G2"}) {
    RootSystem rs = make(name);
    std::set<std::vector<int>> roots;
    for (const Root& r : rs.positive_roots()) {
      roots.insert(r.coeffs);
      std::vector<int> neg(r.coeffs.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -r.coeffs[i];
      roots.insert(neg);
    }
    auto is_root = [&](const std::vector<int>& v) { return roots.count(v) > 0; };
    std::vector<std::vector<int>> list(roots.begin(), roots.end());
    const int n = rs.rank();
    for (const auto& b1 : list) {
      for (const auto& b2 : list) {
        for (const auto& b3 : list) {
          std::vector<int> s(n);
          bool neg_pair = false;
          for (const auto* x : {&b1, &b2, &b3})
            for (const auto* y : {&b1, &b2, &b3}) {
              std::vector<int> z(n);
              bool zero = true;
              for (int t = 0; t < n; ++t) {
                z[t] = (*x)[t] + (*y)[t];
                if (z[t] != 0) zero = false;
              }
              if (x != y && zero) neg_pair = true;
            }
          if (neg_pair) continue;
          for (int t = 0; t < n; ++t) s[t] = b1[t] + b2[t] + b3[t];
          if (!is_root(s)) continue;
          int count = 0;
          std::vector<int> s12(n), s13(n), s23(n);
          for (int t = 0; t < n; ++t) {
            s12[t] = b1[t] + b2[t];
            s13[t] = b1[t] + b3[t];
            s23[t] = b2[t] + b3[t];
          }
          if (is_root(s12)) ++count;
          if (is_root(s13)) ++count;
          if (is_root(s23)) ++count;
          CAPTURE(name);
          CHECK(count >= 2);
        }
      }
    }
  }
}

TEST_CASE("cartan integers of summable pairs follow the three-case table") {
  for (const auto& name : {"B3", "C3", "G2", "A3", "D4"}) {
    RootSystem rs = make(name);
    std::vector<Root> all;
    for (const Root& r : rs.positive_roots()) {
      all.push_back(r);
      Root neg = r;
      for (int& c : neg.coeffs) c = -c;
      all.push_back(neg);
    }
    for (const Root& b : all) {
      for (const Root& g : all) {
        std::vector<int> s(rs.rank());
        for (int t = 0; t < rs.rank(); ++t) s[t] = b.coeffs[t] + g.coeffs[t];
        if (!rs.is_root(s)) continue;
        long long lb = rs.len2_of(b.coeffs), lg = rs.len2_of(g.coeffs), ls = rs.len2_of(s);
        int bg = rs.pairing(b, rs.make_root(g.coeffs));
        CAPTURE(name);
        if (lb == lg && lg == ls) {
          CHECK(bg == -1);
        } else if (lb == lg) {
          CHECK(lb < ls);
          if (ls == 2 * lb) CHECK(bg == 0);
          if (ls == 3 * lb) CHECK(bg == 1);
          CHECK((ls == 2 * lb || ls == 3 * lb));
        } else {
          long long lmin = std::min(lb, lg);
          CHECK(ls == lmin);
          const Root& shorter = (lb < lg) ? b : g;
          const Root& longer = (lb < lg) ? g : b;
          int lp = rs.pairing(rs.make_root(longer.coeffs), rs.make_root(shorter.coeffs));
          CHECK((lp == -2 || lp == -3));
          CHECK(lp == -(rs.len2_of(longer.coeffs) / rs.len2_of(shorter.coeffs)));
          CHECK(rs.pairing(rs.make_root(shorter.coeffs), rs.make_root(longer.coeffs)) == -1);
        }
        // (b,g) >= 0 iff |b| = |g| < |b+g|
        bool nonneg = rs.inner(b.coeffs, g.coeffs) >= 0;
        CHECK(nonneg == (lb == lg && lb < ls));
      }
    }
  }
}

TEST_CASE("subsystem examples") {
  RootSystem a3 = make("A3");
  SUBCASE("orthogonal simples give two A1 components") {
    Subsystem s = subsystem_of(a3, {a3.simple_root(0), a3.simple_root(2)});
    CHECK(s.components.size() == 2);
    for (const auto& c : s.components) {
      CHECK(c.family == Family::A);
      CHECK(c.rank == 1);
    }
  }
  SUBCASE("theta and -alpha2 in A3: orthogonal, so two A1 components") {
    Root neg2 = a3.simple_root(1);
    for (int& c : neg2.coeffs) c = -c;
    Subsystem s = subsystem_of(a3, {a3.theta(), neg2});
    CHECK(s.components.size() == 2);
    CHECK(s.pos_ids.size() == 2);
  }
  RootSystem b3 = make("B3");
  SUBCASE("B3 tail generates B2") {
    Subsystem s = subsystem_of(b3, {b3.simple_root(1), b3.simple_root(2)});
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].family == Family::B);
    CHECK(s.components[0].rank == 2);
    CHECK(s.pos_ids.size() == 4);
  }
}

TEST_CASE("subsystem closure is minimal (fixpoint check)") {
  RootSystem b3 = make("B3");
  Subsystem s = subsystem_of(b3, {b3.simple_root(1), b3.theta()});
  // closed under negation by construction; verify closure under reflection
  std::set<std::vector<int>> members;
  for (int id : s.pos_ids) {
    members.insert(b3.root(id).coeffs);
    std::vector<int> neg = b3.root(id).coeffs;
    for (int& c : neg) c = -c;
    members.insert(neg);
  }
  for (const auto& b : members) {
    for (const auto& x : members) {
      long long k = 2 * b3.inner(x, b) / b3.len2_of(b);
      std::vector<int> img(x.size());
      for (std::size_t t = 0; t < x.size(); ++t) img[t] = x[t] - static_cast<int>(k) * b[t];
      CHECK(members.count(img) == 1);
    }
  }
}

TEST_CASE("extended diagram facet criterion") {
  SUBCASE("A3: cycle, all three qualify") {
    RootSystem rs = make("A3");
    auto ed = extended_diagram(rs);
    CHECK(ed.facet_alphas == std::vector<int>({1, 2, 3}));
  }
  SUBCASE("B2: path of three nodes, only alpha1 qualifies") {
    RootSystem rs = make("B2");
    auto ed = extended_diagram(rs);
    CHECK(ed.facet_alphas == std::vector<int>({1}));
  }
  SUBCASE("E8: exactly alpha1 and alpha2") {
    RootSystem rs = make("E8");
    auto ed = extended_diagram(rs);
    CHECK(ed.facet_alphas == std::vector<int>({1, 2}));
  }
  SUBCASE("E7: alpha2 and alpha7") {
    RootSystem rs = make("E7");
    auto ed = extended_diagram(rs);
    CHECK(ed.facet_alphas == std::vector<int>({2, 7}));
  }
  SUBCASE("C4: only alpha4") {
    RootSystem rs = make("C4");
    auto ed = extended_diagram(rs);
    CHECK(ed.facet_alphas == std::vector<int>({4}));
  }
  SUBCASE("D5: alpha1, alpha4, alpha5") {
    RootSystem rs = make("D5");
    auto ed = extended_diagram(rs);
    CHECK(ed.facet_alphas == std::vector<int>({1, 4, 5}));
  }
}

TEST_CASE("known positive root counts") {
  CHECK(make("A5").num_positive() == 15);
  CHECK(make("B5").num_positive() == 25);
  CHECK(make("C5").num_positive() == 25);
  CHECK(make("D5").num_positive() == 20);
  CHECK(make("E6").num_positive() == 36);
  CHECK(make("E7").num_positive() == 63);
  CHECK(make("F4").num_positive() == 24);
}
