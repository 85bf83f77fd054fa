#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relrigid/representation.hpp"

namespace relrigid {

struct Summand {
  Representation module;
  ModuleMap inclusion;   // summand -> M
  ModuleMap projection;  // M -> summand
};

struct IsoClass {
  std::size_t representative = 0;   // index into summands
  std::vector<std::size_t> members;
  std::size_t multiplicity() const { return members.size(); }
};

struct Decomposition {
  std::vector<Summand> summands;  // every indecomposable summand, repeated by multiplicity
  std::vector<IsoClass> classes;

  bool is_basic() const;
  std::size_t summand_count() const { return summands.size(); }
  // One representative per isomorphism class.
  std::vector<Representation> parts() const;
};

// Krull-Schmidt decomposition by Fitting splittings of End(M). Needs characteristic 0.
Decomposition decompose(const Representation& m);
bool is_indecomposable(const Representation& m);

std::optional<ModuleMap> find_isomorphism(const Representation& a, const Representation& b);
bool is_isomorphic(const Representation& a, const Representation& b);

// Dimension vectors of the radical layers rad^k M / rad^(k+1) M.
std::vector<std::vector<std::size_t>> radical_layers(const Representation& m);
// Dimension vectors of the socle layers soc^(k+1) M / soc^k M.
std::vector<std::vector<std::size_t>> socle_layers(const Representation& m);

// An isomorphism invariant used to bucket modules before exact comparison.
struct ModuleKey {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> radical;
  std::vector<std::vector<std::size_t>> socle;
  std::size_t endo_dim = 0;

  friend auto operator<=>(const ModuleKey&, const ModuleKey&) = default;
  friend bool operator==(const ModuleKey&, const ModuleKey&) = default;
};

ModuleKey module_key(const Representation& m);

// Radical-layer name such as "2/34/5"; "0" for the zero module.
std::string loewy_name(const Representation& m);

// Index of the first entry of `pool` isomorphic to m.
std::optional<std::size_t> find_isomorphic(const std::vector<Representation>& pool, const Representation& m);

}  // namespace relrigid

namespace relrigid {

// Hands out display names per isomorphism class: the Loewy name, with "#2",
// "#3", ... appended when distinct classes share one.
class ModuleCatalog {
 public:
  std::string name(const Representation& m);
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Entry {
    Representation module;
    ModuleKey key;
    std::string name;
  };
  std::vector<Entry> entries_;
};

}  // namespace relrigid
