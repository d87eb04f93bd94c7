#ifndef SYLOWLAB_CATALOG_HPP_
#define SYLOWLAB_CATALOG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sylowlab/group_expr.hpp"
#include "sylowlab/perm_group.hpp"
#include "sylowlab/sylow.hpp"

namespace sylowlab {

struct CatalogEntry {
  // Short label (Q8, F21) or the canonical expression text.
  std::string name;
  GroupExpr expr;
  std::uint64_t order = 0;
  GroupMetadata meta;

  PermGroup group() const { return construct(expr); }
};

// The built-in desk-scale groups, sorted by (order, name).
const std::vector<CatalogEntry>& catalog();

// Entries with order <= max_order.
std::vector<CatalogEntry> catalog_up_to(std::uint64_t max_order);

// Entry whose name or canonical expression equals `name`.
const CatalogEntry* find_catalog_entry(const std::string& name);

std::vector<NamedGroup> named_groups(const std::vector<CatalogEntry>& entries);

}  // namespace sylowlab

#endif  // SYLOWLAB_CATALOG_HPP_
