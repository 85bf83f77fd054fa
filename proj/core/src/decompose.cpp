#include "relrigid/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "relrigid/error.hpp"
#include "relrigid/linalg.hpp"

namespace relrigid {

namespace {

Rational trace(const ModuleMap& f) {
  Rational t = 0;
  for (const auto& c : f.components()) {
    for (std::size_t i = 0; i < c.rows(); ++i) t += c(i, i);
  }
  return t;
}

bool is_nilpotent(const ModuleMap& f) {
  for (const auto& c : f.components()) {
    if (c.rows() == 0) continue;
    Matrix p = c;
    for (std::size_t k = 1; k < c.rows(); ++k) p = p * c;
    if (!p.is_zero()) return false;
  }
  return true;
}

std::uint64_t seed_from(const std::vector<std::size_t>& dims) {
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  for (auto d : dims) s = (s ^ (d + 0x632be59bd9b4e019ULL)) * 0xbf58476d1ce4e5b9ULL;
  return s;
}

class Splitter {
 public:
  Splitter(const HomSpace& end, const Subspace& radical) : end_(end), radical_(radical) {}

  // A non-invertible, non-nilpotent endomorphism, if one is found.
  std::optional<ModuleMap> find() {
    const std::size_t d = end_.dim();
    std::vector<std::size_t> outside;
    for (std::size_t k = 0; k < d; ++k) {
      if (!in_radical(end_[k])) outside.push_back(k);
    }
    for (std::size_t k : outside) {
      if (auto t = usable(end_[k])) return t;
    }
    for (std::size_t k : outside) {
      if (auto t = shifted(end_[k], ModuleMap::identity(end_.source()))) return t;
    }
    for (std::size_t i : outside) {
      for (std::size_t j : outside) {
        if (auto t = usable(compose(end_[i], end_[j]))) return t;
        if (i < j) {
          if (auto t = shifted(end_[i], end_[j])) return t;
        }
      }
    }
    std::mt19937_64 rng(seed_from(end_.source().dims()));
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 32; ++trial) {
      ModuleMap a = random_element(rng, coeff);
      ModuleMap b = random_element(rng, coeff);
      if (auto t = usable(a)) return t;
      if (auto t = shifted(a, b)) return t;
      if (auto t = shifted(a, ModuleMap::identity(end_.source()))) return t;
    }
    return std::nullopt;
  }

 private:
  bool in_radical(const ModuleMap& f) const { return radical_.contains(end_.coordinates(f)); }

  std::optional<ModuleMap> usable(const ModuleMap& f) const {
    if (f.is_isomorphism() || in_radical(f)) return std::nullopt;
    if (!is_nilpotent(f)) return f;
    for (const auto& g : end_.basis()) {
      const ModuleMap gf = compose(g, f);
      if (sgn(trace(gf)) != 0) return gf;
    }
    return std::nullopt;
  }

  // a - lambda b for a rational generalized eigenvalue lambda, b invertible.
  std::optional<ModuleMap> shifted(const ModuleMap& a, const ModuleMap& b) const {
    if (!b.is_isomorphism()) return std::nullopt;
    for (std::size_t v = 0; v < a.components().size(); ++v) {
      const Matrix& bv = b.component(v);
      if (bv.rows() == 0) continue;
      const auto binv = inverse(bv);
      if (!binv) continue;
      for (const auto& lambda : rational_roots(characteristic_polynomial(*binv * a.component(v)))) {
        if (auto t = usable(a - b.scaled(lambda))) return t;
      }
    }
    return std::nullopt;
  }

  ModuleMap random_element(std::mt19937_64& rng, std::uniform_int_distribution<int>& coeff) const {
    Matrix c(end_.dim(), 1, end_.source().field());
    for (std::size_t k = 0; k < end_.dim(); ++k) c.set(k, 0, Rational(coeff(rng)));
    return end_.combination(c);
  }

  const HomSpace& end_;
  const Subspace& radical_;
};

struct Piece {
  Representation module;
  ModuleMap inclusion;
};

void split(const Representation& m, const ModuleMap& into_root, std::vector<Piece>& out) {
  if (m.total_dim() == 0) return;
  const HomSpace end(m, m);
  const std::size_t d = end.dim();
  if (d == 1) {
    out.push_back({m, into_root});
    return;
  }
  Matrix form(d, d, m.field());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      const Rational t = trace(compose(end[a], end[b]));
      form.set(a, b, t);
      form.set(b, a, t);
    }
  }
  const Subspace radical(kernel_basis(form), d);
  if (d - radical.dim() == 1) {
    out.push_back({m, into_root});
    return;
  }
  Splitter splitter(end, radical);
  const auto theta = splitter.find();
  if (!theta) {
    throw ConsistencyError("decompose: no splitting endomorphism found; the endomorphism algebra may not be split over Q");
  }
  std::size_t n = *std::max_element(m.dims().begin(), m.dims().end());
  ModuleMap power = *theta;
  for (std::size_t k = 1; k < n; ++k) power = compose(power, *theta);
  const Submodule k = kernel(power);
  const Submodule i = image(power);
  if (k.module.total_dim() == 0 || i.module.total_dim() == 0) {
    throw ConsistencyError("decompose: Fitting decomposition is trivial");
  }
  split(k.module, compose(into_root, k.inclusion), out);
  split(i.module, compose(into_root, i.inclusion), out);
}

}  // namespace

bool Decomposition::is_basic() const {
  return std::all_of(classes.begin(), classes.end(), [](const IsoClass& c) { return c.multiplicity() == 1; });
}

std::vector<Representation> Decomposition::parts() const {
  std::vector<Representation> out;
  for (const auto& c : classes) out.push_back(summands[c.representative].module);
  return out;
}

Decomposition decompose(const Representation& m) {
  if (!m.field().is_rational()) throw FieldError("decomposition requires characteristic 0");
  std::vector<Piece> pieces;
  split(m, ModuleMap::identity(m), pieces);

  std::vector<ModuleKey> keys;
  for (const auto& p : pieces) keys.push_back(module_key(p.module));
  std::vector<std::size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  Decomposition out;
  std::vector<ModuleKey> sorted_keys;
  for (std::size_t idx : order) {
    out.summands.push_back({pieces[idx].module, pieces[idx].inclusion, ModuleMap{}});
    sorted_keys.push_back(keys[idx]);
  }

  // Projections from the inverse of the combined inclusion.
  const std::size_t nv = m.vertex_count();
  std::vector<std::vector<Matrix>> proj(out.summands.size());
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<Matrix> cols;
    for (const auto& s : out.summands) cols.push_back(s.inclusion.component(v));
    const Matrix all = Matrix::hstack(cols, m.dim(v), m.field());
    const auto inv = inverse(all);
    if (!inv) throw ConsistencyError("decompose: summands do not span the module");
    std::size_t row = 0;
    for (std::size_t k = 0; k < out.summands.size(); ++k) {
      const std::size_t dv = out.summands[k].module.dim(v);
      proj[k].push_back(inv->block(row, 0, dv, m.dim(v)));
      row += dv;
    }
  }
  for (std::size_t k = 0; k < out.summands.size(); ++k) {
    out.summands[k].projection = ModuleMap(unchecked, m, out.summands[k].module, std::move(proj[k]));
  }

  for (std::size_t k = 0; k < out.summands.size(); ++k) {
    bool placed = false;
    for (auto& c : out.classes) {
      if (sorted_keys[c.representative] != sorted_keys[k]) continue;
      if (is_isomorphic(out.summands[c.representative].module, out.summands[k].module)) {
        c.members.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({k, {k}});
  }
  return out;
}

bool is_indecomposable(const Representation& m) {
  if (m.total_dim() == 0) return false;
  return decompose(m).summands.size() == 1;
}

std::optional<ModuleMap> find_isomorphism(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra()) || a.dims() != b.dims()) return std::nullopt;
  if (a.total_dim() == 0) return ModuleMap::zero(a, b);
  const HomSpace h(a, b);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& f : h.basis()) {
    if (f.is_isomorphism()) return f;
  }
  std::mt19937_64 rng(seed_from(a.dims()) ^ h.dim());
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  for (int trial = 0; trial < 32; ++trial) {
    Matrix c(h.dim(), 1, a.field());
    for (std::size_t k = 0; k < h.dim(); ++k) c.set(k, 0, Rational(coeff(rng)));
    ModuleMap f = h.combination(c);
    if (f.is_isomorphism()) return f;
  }
  // Exhaustive search over coefficients in {-1, 0, 1}, capped.
  const std::size_t d = h.dim();
  std::vector<int> digits(d, -1);
  for (std::size_t count = 0; count < 20000; ++count) {
    Matrix c(d, 1, a.field());
    for (std::size_t k = 0; k < d; ++k) c.set(k, 0, Rational(digits[k]));
    ModuleMap f = h.combination(c);
    if (f.is_isomorphism()) return f;
    std::size_t pos = 0;
    while (pos < d && digits[pos] == 1) digits[pos++] = -1;
    if (pos == d) break;
    ++digits[pos];
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra()) || a.dims() != b.dims()) return false;
  if (a.total_dim() == 0) return true;
  if (a.same_data(b)) return true;
  return find_isomorphism(a, b).has_value();
}

std::vector<std::vector<std::size_t>> radical_layers(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  const std::size_t nv = m.vertex_count();
  std::vector<Matrix> current;
  for (std::size_t v = 0; v < nv; ++v) current.push_back(Matrix::identity(m.dim(v), m.field()));
  std::vector<std::vector<std::size_t>> layers;
  while (true) {
    std::vector<std::vector<Matrix>> incoming(nv);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      incoming[ar.target].push_back(m.arrow_map(a) * current[ar.source]);
    }
    std::vector<Matrix> next;
    std::vector<std::size_t> layer(nv);
    bool nonzero = false;
    for (std::size_t v = 0; v < nv; ++v) {
      const Matrix span = Matrix::hstack(incoming[v], m.dim(v), m.field());
      Matrix b = span.cols() == 0 ? Matrix(m.dim(v), 0, m.field()) : image_basis(span);
      layer[v] = current[v].cols() - b.cols();
      nonzero = nonzero || current[v].cols() > 0;
      next.push_back(std::move(b));
    }
    if (!nonzero) break;
    layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return layers;
}

std::vector<std::vector<std::size_t>> socle_layers(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  const std::size_t nv = m.vertex_count();
  std::vector<Subspace> current;
  for (std::size_t v = 0; v < nv; ++v) current.emplace_back(m.dim(v), m.field());
  std::vector<std::vector<std::size_t>> layers;
  while (true) {
    bool full = true;
    for (std::size_t v = 0; v < nv; ++v) full = full && current[v].is_full();
    if (full) break;
    std::vector<Subspace> next;
    std::vector<std::size_t> layer(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<Matrix> conditions;
      for (std::size_t a : q.arrows_from(v)) {
        conditions.push_back(current[q.arrow(a).target].quotient_map() * m.arrow_map(a));
      }
      const Matrix stacked = Matrix::vstack(conditions, m.dim(v), m.field());
      Subspace s(kernel_basis(stacked), m.dim(v));
      layer[v] = s.dim() - current[v].dim();
      next.push_back(std::move(s));
    }
    layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return layers;
}

ModuleKey module_key(const Representation& m) {
  return {m.dims(), radical_layers(m), socle_layers(m), hom_dim(m, m)};
}

std::string loewy_name(const Representation& m) {
  if (m.total_dim() == 0) return "0";
  const auto& labels = m.algebra().quiver().vertex_labels();
  const bool short_labels =
      std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.size() == 1; });
  std::string name;
  for (const auto& layer : radical_layers(m)) {
    if (!name.empty()) name += '/';
    bool first = true;
    for (std::size_t v = 0; v < layer.size(); ++v) {
      for (std::size_t k = 0; k < layer[v]; ++k) {
        if (!first && !short_labels) name += ',';
        name += labels[v];
        first = false;
      }
    }
  }
  return name;
}

std::optional<std::size_t> find_isomorphic(const std::vector<Representation>& pool, const Representation& m) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (is_isomorphic(pool[i], m)) return i;
  }
  return std::nullopt;
}

}  // namespace relrigid

namespace relrigid {

std::string ModuleCatalog::name(const Representation& m) {
  const ModuleKey key = module_key(m);
  for (const auto& e : entries_) {
    if (e.key == key && is_isomorphic(e.module, m)) return e.name;
  }
  const std::string base = loewy_name(m);
  std::size_t same = 0;
  for (const auto& e : entries_) {
    if (e.name == base || e.name.rfind(base + "#", 0) == 0) ++same;
  }
  std::string name = same == 0 ? base : base + "#" + std::to_string(same + 1);
  entries_.push_back({m, key, name});
  return name;
}

}  // namespace relrigid
