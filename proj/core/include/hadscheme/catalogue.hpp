#ifndef HADSCHEME_CATALOGUE_HPP
#define HADSCHEME_CATALOGUE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hadscheme/hadamard.hpp"
#include "hadscheme/scheme.hpp"

namespace hadscheme {

// Built-in base schemes: the four schemes of order 4 under their catalogue
// numbers, and for order 8 the rank-2 scheme plus the five thin group
// schemes of the groups of order 8.
struct CatalogueScheme {
  std::string id;
  AssociationScheme scheme;
};

std::vector<CatalogueScheme> order4_schemes();
std::vector<CatalogueScheme> order8_schemes();
std::optional<CatalogueScheme> find_catalogue_scheme(const std::string &name);

// Four normalized order-4 representatives (row reorderings of one matrix)
// that pick out the different similarity classes of the small base schemes.
std::vector<HadamardMatrix> order4_hadamards();

// multiplication tables, identity = 0
std::vector<std::vector<int>> cyclic_table(int m);
std::vector<std::vector<int>> elementary_abelian_table(int k);
std::vector<std::vector<int>> direct_product_table(
    const std::vector<std::vector<int>> &a,
    const std::vector<std::vector<int>> &b);
std::vector<std::vector<int>> dihedral8_table();
std::vector<std::vector<int>> quaternion8_table();

} // namespace hadscheme

#endif
