#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "relrigid/algebra.hpp"
#include "relrigid/representation.hpp"

namespace relrigid {

struct AlgebraText {
  Quiver quiver;
  std::vector<Relation> relations;
};

// Sections [vertices], [arrows] ("name: src -> tgt") and [relations]
// (e.g. "2 b*a - 1 d*c", paths right-to-left). '#' starts a comment.
AlgebraText parse_algebra_text(const std::string& text, const Field& field, const std::string& origin = "<input>");
BoundAlgebra parse_algebra(const std::string& text, const Field& field = {},
                           std::size_t max_length = BoundAlgebra::kDefaultMaxLength,
                           const std::string& origin = "<input>");
BoundAlgebra load_algebra(const std::filesystem::path& path, const Field& field = {},
                          std::size_t max_length = BoundAlgebra::kDefaultMaxLength);
std::string write_algebra(const BoundAlgebra& algebra);

struct NamedModule {
  std::string name;
  Representation module;
};

// One or more blocks "[module] name", "dims: d1 ... dn", then "arrow x:"
// followed by the rows of its matrix. Omitted arrows act as zero.
std::vector<NamedModule> parse_modules(const std::string& text, const BoundAlgebra& algebra,
                                       const std::string& origin = "<input>");
std::vector<NamedModule> load_modules(const std::filesystem::path& path, const BoundAlgebra& algebra);
std::string write_module(const std::string& name, const Representation& m);

struct LoadedSetting {
  BoundAlgebra algebra;
  std::vector<NamedModule> r_parts;
  Representation r;                  // direct sum of r_parts
  std::vector<NamedModule> library;  // optional named indecomposables
};

// Keys "algebra:", "R:" and optionally "indecomposables:", paths relative to the file.
LoadedSetting load_setting(const std::filesystem::path& path, const Field& field = {},
                           std::size_t max_length = BoundAlgebra::kDefaultMaxLength);

// Reads a module argument: an existing file, or names from `library` joined by '+'.
Representation resolve_module(const std::string& spec, const BoundAlgebra& algebra,
                              const std::vector<NamedModule>& library);

std::string read_file(const std::filesystem::path& path);

}  // namespace relrigid
