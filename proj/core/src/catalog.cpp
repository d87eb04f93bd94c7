#include "sylowlab/catalog.hpp"

#include <algorithm>

namespace sylowlab {

namespace {

struct Listing {
  const char* label;  // nullptr: use the canonical expression
  const char* text;
};

const Listing kListings[] = {
    {nullptr, "C2"}, {nullptr, "C3"}, {nullptr, "C4"}, {nullptr, "C5"},
    {nullptr, "C6"}, {nullptr, "C7"}, {nullptr, "C8"}, {nullptr, "C9"},
    {nullptr, "C2 x C2"}, {nullptr, "C2 x C4"}, {nullptr, "C2 x C2 x C2"},
    {nullptr, "C3 x C3"}, {nullptr, "C2 x C6"}, {nullptr, "C5 x C5"},
    {nullptr, "C3 x C3 x C3"},
    {nullptr, "S3"}, {nullptr, "D8"}, {nullptr, "D10"}, {nullptr, "D12"},
    {nullptr, "D14"}, {nullptr, "D18"},
    {"Q8", "<(1 2 5 6)(3 8 7 4),(1 3 5 7)(2 4 6 8)>"},
    {"F20", "<(1 2 3 4 5),(2 3 5 4)>"},
    {"F21", "<(1 2 3 4 5 6 7),(2 3 5)(4 7 6)>"},
    {nullptr, "A4"}, {nullptr, "S4"}, {nullptr, "A5"}, {nullptr, "S5"},
    {nullptr, "A6"}, {nullptr, "A7"},
    {nullptr, "S3 x C2"}, {nullptr, "S3 x C3"}, {nullptr, "S3 x S3"},
    {nullptr, "A4 x C2"}, {nullptr, "A4 x C3"}, {nullptr, "S4 x C2"},
    {nullptr, "A5 x C2"},
    {nullptr, "C2 wr C2"}, {nullptr, "C2 wr C3"}, {nullptr, "C3 wr C2"},
    {nullptr, "S3 wr C2"}, {nullptr, "C3 wr C3"}, {nullptr, "C2 wr S3"},
    {nullptr, "SL(2,3)"}, {nullptr, "SL(2,4)"}, {nullptr, "SL(2,5)"},
    {nullptr, "SL(2,8)"},
    {nullptr, "PSL(2,7)"}, {nullptr, "PSL(2,9)"}, {nullptr, "PSL(2,11)"},
};

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& listing : kListings) {
      CatalogEntry entry;
      entry.expr = parse_group_expr(listing.text);
      entry.name = listing.label ? listing.label : to_string(entry.expr);
      entry.order = construct(entry.expr).order_u64();
      entry.meta = metadata(entry.expr);
      out.push_back(std::move(entry));
    }
    std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      return a.order != b.order ? a.order < b.order : a.name < b.name;
    });
    return out;
  }();
  return entries;
}

std::vector<CatalogEntry> catalog_up_to(std::uint64_t max_order) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog()) {
    if (e.order <= max_order) out.push_back(e);
  }
  return out;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name || to_string(e.expr) == name) return &e;
  }
  return nullptr;
}

std::vector<NamedGroup> named_groups(const std::vector<CatalogEntry>& entries) {
  std::vector<NamedGroup> out;
  for (const auto& e : entries) out.push_back({e.name, e.group()});
  return out;
}

}  // namespace sylowlab
