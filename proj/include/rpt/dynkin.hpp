#pragma once

#include <string>
#include <vector>

namespace rpt {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_char(Family f);
Family family_from_char(char c);  // throws IllegalRank on anything else

// Legal ranks: A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2.
bool legal_rank(Family f, int rank);

// Cartan matrix in Bourbaki numbering, entry [i][j] = <alpha_i, alpha_j^v>.
std::vector<std::vector<int>> standard_cartan(Family f, int rank);

// Minimal positive integers d with d[j]*cartan[i][j] symmetric; the bilinear
// form used everywhere is (alpha_i, alpha_j) = d[j]*cartan[i][j].
std::vector<long long> symmetrizer(const std::vector<std::vector<int>>& cartan);

struct TypeMatch {
  Family family;
  int rank;
  // Every bijection b with standard[p][q] == given[b[p]][b[q]]; b[p] is the
  // index of Bourbaki node p+1 inside the given matrix.
  std::vector<std::vector<int>> bijections;
};

// Identifies an irreducible abstract Cartan matrix, preferring lower family
// letter. Throws UnknownType when nothing matches.
TypeMatch identify_cartan(const std::vector<std::vector<int>>& given);

}  // namespace rpt
