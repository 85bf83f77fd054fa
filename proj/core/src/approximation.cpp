#include "relrigid/approximation.hpp"

#include "relrigid/error.hpp"
#include "relrigid/linalg.hpp"

namespace relrigid {

namespace {

struct Slot {
  std::size_t object;
  ModuleMap map;
  std::vector<Matrix> images;  // images[l]: coordinates in Hom space l of all composites with this slot
};

bool covers_all(const std::vector<Slot>& slots, const std::vector<bool>& active, const std::vector<HomSpace>& targets) {
  for (std::size_t l = 0; l < targets.size(); ++l) {
    Subspace s(targets[l].dim(), targets[l].source().field());
    for (std::size_t i = 0; i < slots.size() && !s.is_full(); ++i) {
      if (active[i]) s.add_columns(slots[i].images[l]);
    }
    if (!s.is_full()) return false;
  }
  return true;
}

Approximation minimal_approximation(const Representation& x, const std::vector<Representation>& objects, bool left) {
  const Field& field = x.field();
  // targets[l] = Hom(X, Y_l) for left, Hom(Y_l, X) for right.
  std::vector<HomSpace> targets;
  for (const auto& y : objects) targets.push_back(left ? HomSpace(x, y) : HomSpace(y, x));
  std::vector<std::vector<HomSpace>> between(objects.size());
  for (std::size_t m = 0; m < objects.size(); ++m) {
    for (std::size_t l = 0; l < objects.size(); ++l) {
      between[m].push_back(left ? HomSpace(objects[m], objects[l]) : HomSpace(objects[l], objects[m]));
    }
  }
  std::vector<Slot> slots;
  for (std::size_t m = 0; m < objects.size(); ++m) {
    for (const auto& phi : targets[m].basis()) {
      Slot s{m, phi, {}};
      for (std::size_t l = 0; l < objects.size(); ++l) {
        const HomSpace& via = between[m][l];
        Matrix cols(targets[l].dim(), via.dim(), field);
        for (std::size_t k = 0; k < via.dim(); ++k) {
          const ModuleMap comp = left ? compose(via[k], phi) : compose(phi, via[k]);
          cols.set_block(0, k, targets[l].coordinates(comp));
        }
        s.images.push_back(std::move(cols));
      }
      slots.push_back(std::move(s));
    }
  }
  std::vector<bool> active(slots.size(), true);
  for (std::size_t i = slots.size(); i-- > 0;) {
    active[i] = false;
    if (!covers_all(slots, active, targets)) active[i] = true;
  }

  Approximation out;
  std::vector<Representation> parts;
  std::vector<ModuleMap> maps;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!active[i]) continue;
    out.chosen.push_back(slots[i].object);
    parts.push_back(objects[slots[i].object]);
    maps.push_back(slots[i].map);
  }
  out.object = direct_sum(x.algebra(), parts);
  out.map = left ? map_into_sum(out.object, maps, x) : map_from_sum(out.object, maps, x);
  return out;
}

}  // namespace

Approximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& objects) {
  return minimal_approximation(x, objects, true);
}

Approximation minimal_right_approximation(const Representation& x, const std::vector<Representation>& objects) {
  return minimal_approximation(x, objects, false);
}

}  // namespace relrigid
