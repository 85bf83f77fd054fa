#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relrigid/algebra.hpp"
#include "relrigid/representation.hpp"
#include "relrigid/text_format.hpp"

namespace fixtures {

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(RELRIGID_DATA_DIR) / name; }

struct Library {
  relrigid::BoundAlgebra algebra;
  std::vector<relrigid::NamedModule> named;

  const relrigid::Representation& operator[](const std::string& name) const {
    for (const auto& m : named) {
      if (m.name == name) return m.module;
    }
    throw std::out_of_range("no fixture module " + name);
  }
  std::vector<relrigid::Representation> modules() const {
    std::vector<relrigid::Representation> out;
    for (const auto& m : named) out.push_back(m.module);
    return out;
  }
};

inline Library load(const std::string& alg, const std::string& mod, const relrigid::Field& field = {}) {
  Library lib;
  lib.algebra = relrigid::load_algebra(data(alg), field);
  if (!mod.empty()) lib.named = relrigid::load_modules(data(mod), lib.algebra);
  return lib;
}

inline Library a3() { return load("a3_rad2.alg", "a3_rad2_ind.mod"); }
inline Library ex1() { return load("ex1.alg", "ex1_ind.mod"); }
inline Library nak2() { return load("nak2.alg", "nak2_ind.mod"); }

}  // namespace fixtures
