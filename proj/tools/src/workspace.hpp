#pragma once

#include "albert/albert.hpp"
#include "json_io.hpp"

#include <map>
#include <string>
#include <vector>

namespace albert::cli {

// Named objects loaded from a config file. Q is always present as a field.
struct Workspace {
  std::map<std::string, FieldPtr> fields;
  std::map<std::string, CayleyPtr> cayley;
  std::map<std::string, AssocPtr> assoc;
  std::map<std::string, AlbertPtr> albert;
  std::vector<std::string> field_order, cayley_order, assoc_order, albert_order;
  std::string default_albert;

  // The named algebra, or the default one for an empty label.
  AlbertPtr algebra(const std::string& label) const;
  std::vector<AlbertPtr> algebras() const;
  std::vector<CayleyPtr> cayley_algebras() const;
};

// Schema problems and dangling references raise ParseError; mathematical
// constructor checks raise the library's own error codes.
Workspace load_workspace(const json& config);
Workspace load_workspace_file(const std::string& path);

// Config used when --config is not given.
const json& default_config();

}  // namespace albert::cli
