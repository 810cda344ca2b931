#pragma once

// A formal context: named objects and attributes with a binary incidence
// relation. Incidence is stored both row-wise and column-wise so derivation
// is a word-parallel intersection in either direction.

#include <cstddef>
#include <string>
#include <vector>

#include "fcar/bitset.hpp"

namespace fcar {

class FormalContext {
public:
  FormalContext() = default;

  // rows[g] holds the attribute set of object g; every row must have
  // width attributes.size(). Names must be pairwise distinct per universe.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttrSet> rows, std::string name = "");

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const std::string& name() const noexcept { return name_; }

  bool incident(std::size_t g, std::size_t m) const { return rows_.at(g).test(m); }
  const AttrSet& row(std::size_t g) const { return rows_.at(g); }
  const ObjSet& column(std::size_t m) const { return cols_.at(m); }

  ObjSet no_objects() const { return ObjSet(objects_.size()); }
  ObjSet all_objects() const { return ObjSet::full(objects_.size()); }
  AttrSet no_attributes() const { return AttrSet(attributes_.size()); }
  AttrSet all_attributes() const { return AttrSet::full(attributes_.size()); }

  // Derivation operators of the Galois connection; the empty set derives
  // to the full opposite universe.
  AttrSet derive(const ObjSet& objs) const;
  ObjSet derive(const AttrSet& attrs) const;
  AttrSet closure(const AttrSet& attrs) const { return derive(derive(attrs)); }
  ObjSet closure(const ObjSet& objs) const { return derive(derive(objs)); }

  bool operator==(const FormalContext&) const = default;

private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttrSet> rows_;
  std::vector<ObjSet> cols_;
  std::string name_;
};

}  // namespace fcar
