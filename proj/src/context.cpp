#include "fcar/context.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace fcar {

namespace {

void check_distinct(const std::vector<std::string>& names, const char* universe) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      throw std::invalid_argument(std::string("duplicate ") + universe + " name: " + n);
  }
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<AttrSet> rows, std::string name)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)),
      name_(std::move(name)) {
  if (rows_.size() != objects_.size())
    throw std::invalid_argument("row count does not match object count");
  for (const auto& r : rows_)
    if (r.width() != attributes_.size())
      throw std::invalid_argument("row width does not match attribute count");
  check_distinct(objects_, "object");
  check_distinct(attributes_, "attribute");

  cols_.assign(attributes_.size(), ObjSet(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { cols_[m].set(g); });
}

AttrSet FormalContext::derive(const ObjSet& objs) const {
  if (objs.width() != objects_.size())
    throw std::invalid_argument("object set width does not match context");
  AttrSet result = all_attributes();
  objs.for_each([&](std::size_t g) { result &= rows_[g]; });
  return result;
}

ObjSet FormalContext::derive(const AttrSet& attrs) const {
  if (attrs.width() != attributes_.size())
    throw std::invalid_argument("attribute set width does not match context");
  ObjSet result = all_objects();
  attrs.for_each([&](std::size_t m) { result &= cols_[m]; });
  return result;
}

}  // namespace fcar
