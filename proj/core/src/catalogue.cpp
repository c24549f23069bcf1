#include "hadscheme/catalogue.hpp"

#include <algorithm>

namespace hadscheme {

namespace {

HadamardMatrix from_pattern(const std::vector<std::string> &rows) {
  std::vector<std::vector<int>> entries;
  for (const auto &r : rows) {
    std::vector<int> row;
    for (char c : r) row.push_back(c == '+' ? 1 : -1);
    entries.push_back(row);
  }
  return verify_hadamard(entries);
}

// Both order-4 rank >2 non-group entries live on the cycle 0-2-1-3: the
// point coordinates fix which of the order4_hadamards representatives fall
// into a common similarity class (H0 with H1 and H2 with H3).
AssociationScheme cycle4_scheme() {
  // distance classes: antipodal mates 0-1 and 2-3 get label 2
  std::vector<int> rel(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      rel[x * 4 + y] = x == y ? 0 : (y == (x ^ 1) ? 2 : 1);
  return verify_scheme(4, rel);
}

AssociationScheme thin_cycle4_scheme() {
  // thin C4, successor cycle 0 -> 2 -> 1 -> 3
  static const int g[4] = {2, 3, 1, 0};
  std::vector<int> rel(16);
  for (int x = 0; x < 4; ++x) {
    int z = x;
    for (int k = 0; k < 4; ++k) {
      rel[x * 4 + z] = k;
      z = g[z];
    }
  }
  return verify_scheme(4, rel);
}

} // namespace

std::vector<std::vector<int>> cyclic_table(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return t;
}

std::vector<std::vector<int>> elementary_abelian_table(int k) {
  int m = 1 << k;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = a ^ b;
  return t;
}

std::vector<std::vector<int>> direct_product_table(
    const std::vector<std::vector<int>> &a,
    const std::vector<std::vector<int>> &b) {
  int ma = (int)a.size(), mb = (int)b.size();
  int m = ma * mb;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      t[x][y] = a[x % ma][y % ma] + ma * b[x / ma][y / ma];
  return t;
}

std::vector<std::vector<int>> dihedral8_table() {
  // r^i s^j encoded i + 4j
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int i1 = x & 3, j1 = x >> 2, i2 = y & 3, j2 = y >> 2;
      int i = (i1 + (j1 ? 4 - i2 : i2)) & 3;
      t[x][y] = i + 4 * (j1 ^ j2);
    }
  return t;
}

std::vector<std::vector<int>> quaternion8_table() {
  // unit q in 1,i,j,k and sign s, encoded 2q + s
  static const int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int q1 = x >> 1, s1 = x & 1, q2 = y >> 1, s2 = y & 1;
      t[x][y] = 2 * unit[q1][q2] + (s1 ^ s2 ^ neg[q1][q2]);
    }
  return t;
}

std::vector<CatalogueScheme> order4_schemes() {
  std::vector<CatalogueScheme> v;
  v.push_back({"AS(4,1)", trivial_scheme(4)});
  v.push_back({"AS(4,2)", cycle4_scheme()});
  v.push_back({"AS(4,3)", thin_group_scheme(elementary_abelian_table(2))});
  v.push_back({"AS(4,4)", thin_cycle4_scheme()});
  return v;
}

std::vector<CatalogueScheme> order8_schemes() {
  std::vector<CatalogueScheme> v;
  v.push_back({"AS(8,1)", trivial_scheme(8)});
  v.push_back({"C2xC2xC2", thin_group_scheme(elementary_abelian_table(3))});
  v.push_back({"D4", thin_group_scheme(dihedral8_table())});
  v.push_back({"C4xC2",
               thin_group_scheme(direct_product_table(cyclic_table(4),
                                                      cyclic_table(2)))});
  v.push_back({"Q8", thin_group_scheme(quaternion8_table())});
  v.push_back({"C8", thin_group_scheme(cyclic_table(8))});
  return v;
}

std::optional<CatalogueScheme> find_catalogue_scheme(const std::string &name) {
  std::string key;
  for (char c : name)
    if (c != '(' && c != ')' && c != ',' && c != '^' && c != ' ')
      key.push_back((char)tolower(c));
  auto match = [&](const CatalogueScheme &cs) {
    std::string id;
    for (char c : cs.id)
      if (c != '(' && c != ')' && c != ',' && c != ' ')
        id.push_back((char)tolower(c));
    return id == key;
  };
  for (const auto &cs : order4_schemes())
    if (match(cs)) return cs;
  for (const auto &cs : order8_schemes())
    if (match(cs)) return cs;
  if (key == "trivial4") return CatalogueScheme{"AS(4,1)", trivial_scheme(4)};
  if (key == "trivial8" || key == "trivial")
    return CatalogueScheme{"AS(8,1)", trivial_scheme(8)};
  if (key == "c23" || key == "e8")
    return CatalogueScheme{"C2xC2xC2",
                           thin_group_scheme(elementary_abelian_table(3))};
  return std::nullopt;
}

std::vector<HadamardMatrix> order4_hadamards() {
  return {
      from_pattern({"++++", "++--", "+--+", "+-+-"}),
      from_pattern({"++++", "++--", "+-+-", "+--+"}),
      from_pattern({"++++", "+--+", "+-+-", "++--"}),
      from_pattern({"++++", "+--+", "++--", "+-+-"}),
  };
}

} // namespace hadscheme
