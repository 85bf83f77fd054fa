#include "relrigid/algebra.hpp"

#include <algorithm>
#include <string>

#include "relrigid/error.hpp"
#include "relrigid/linalg.hpp"

namespace relrigid {

namespace {

// Paths grouped by length, extended lazily.
class PathTable {
 public:
  explicit PathTable(const Quiver& q) : q_(q) {
    std::vector<Path> zero;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) zero.push_back(Path::lazy(v));
    levels_.push_back(std::move(zero));
  }

  const std::vector<Path>& level(std::size_t len) {
    while (levels_.size() <= len) {
      std::vector<Path> next;
      for (const auto& p : levels_.back()) {
        for (std::size_t a : q_.arrows_from(p.target)) next.push_back(p.then(Path::of_arrow(q_, a)));
      }
      levels_.push_back(std::move(next));
    }
    return levels_[len];
  }

 private:
  const Quiver& q_;
  std::vector<std::vector<Path>> levels_;
};

// Larger paths come first so that they become pivots and get rewritten.
bool larger(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.arrows > b.arrows;
}

struct Block {
  std::vector<Path> columns;                 // all paths of bounded length in this block
  std::map<Path, std::size_t> index;
  std::vector<std::vector<Rational>> rows;   // generators of the truncated ideal
};

using BlockMap = std::map<std::pair<std::size_t, std::size_t>, Block>;

// The generators p*r*q truncated to paths of length <= bound, per (source, target) block.
BlockMap truncated_ideal(const std::vector<Relation>& rels, PathTable& paths,
                         std::size_t bound, const Field& field) {
  BlockMap blocks;
  for (std::size_t len = 0; len <= bound; ++len) {
    for (const auto& p : paths.level(len)) blocks[{p.source, p.target}].columns.push_back(p);
  }
  for (auto& [key, b] : blocks) {
    std::sort(b.columns.begin(), b.columns.end(), larger);
    for (std::size_t i = 0; i < b.columns.size(); ++i) b.index[b.columns[i]] = i;
  }
  for (const auto& r : rels) {
    std::size_t min_len = r.terms.front().second.length();
    for (const auto& t : r.terms) min_len = std::min(min_len, t.second.length());
    if (min_len > bound) continue;
    const std::size_t s = r.terms.front().second.source;
    const std::size_t t = r.terms.front().second.target;
    for (std::size_t lq = 0; lq + min_len <= bound; ++lq) {
      for (const auto& before : paths.level(lq)) {
        if (before.target != s) continue;
        for (std::size_t lp = 0; lq + lp + min_len <= bound; ++lp) {
          for (const auto& after : paths.level(lp)) {
            if (after.source != t) continue;
            Block& blk = blocks[{before.source, after.target}];
            std::vector<Rational> row(blk.columns.size());
            bool nonzero = false;
            for (const auto& [c, term] : r.terms) {
              if (lq + lp + term.length() > bound) continue;
              const Path full = before.then(term).then(after);
              auto& slot = row[blk.index.at(full)];
              slot = field.add(slot, field.reduce(c));
              nonzero = true;
            }
            if (nonzero) blk.rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return blocks;
}

Matrix rows_matrix(const Block& b, const Field& field) {
  Matrix m(b.rows.size(), b.columns.size(), field);
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    for (std::size_t j = 0; j < b.columns.size(); ++j) m.raw(i, j) = b.rows[i][j];
  }
  return m;
}

}  // namespace

std::shared_ptr<const BoundAlgebra::Data> BoundAlgebra::compute(const Quiver& quiver,
                                                                const std::vector<Relation>& relations,
                                                                Field field, std::size_t max_length) {
  for (const auto& r : relations) validate_relation(quiver, r);
  PathTable paths(quiver);

  std::size_t vanishing = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const auto& top = paths.level(len);
    if (top.empty()) {
      vanishing = len;
      break;
    }
    BlockMap blocks = truncated_ideal(relations, paths, len, field);
    bool all_in = true;
    std::map<std::pair<std::size_t, std::size_t>, Subspace> spans;
    for (const auto& p : top) {
      const auto key = std::make_pair(p.source, p.target);
      Block& b = blocks.at(key);
      auto it = spans.find(key);
      if (it == spans.end()) {
        it = spans.emplace(key, Subspace(rows_matrix(b, field).transpose(), b.columns.size())).first;
      }
      Matrix e(b.columns.size(), 1, field);
      e.raw(b.index.at(p), 0) = 1;
      if (!it->second.contains(e)) {
        all_in = false;
        break;
      }
    }
    if (all_in) {
      vanishing = len;
      break;
    }
  }
  if (vanishing == 0) {
    throw InputError("algebra is not finite-dimensional within max_length " + std::to_string(max_length));
  }

  auto data = std::make_shared<Data>();
  data->quiver = quiver;
  data->relations = relations;
  data->field = field;
  data->vanishing_length = vanishing;

  // Basis: non-pivot columns of the reduced truncated ideal, one block at a time.
  BlockMap blocks = truncated_ideal(relations, paths, vanishing - 1, field);
  struct Rewrite {
    Path path;
    std::vector<std::pair<Path, Rational>> combination;
  };
  std::vector<Path> basis_paths;
  std::vector<Rewrite> rewrites;
  for (const auto& [key, b] : blocks) {
    const RowEchelon e = row_reduce(rows_matrix(b, field));
    std::vector<bool> pivot(b.columns.size(), false);
    for (auto p : e.pivots) pivot[p] = true;
    for (std::size_t j = 0; j < b.columns.size(); ++j) {
      if (!pivot[j]) basis_paths.push_back(b.columns[j]);
    }
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Rewrite rw{b.columns[e.pivots[r]], {}};
      for (std::size_t j = 0; j < b.columns.size(); ++j) {
        if (pivot[j] || sgn(e.reduced(r, j)) == 0) continue;
        rw.combination.emplace_back(b.columns[j], field.neg(e.reduced(r, j)));
      }
      rewrites.push_back(std::move(rw));
    }
  }
  std::sort(basis_paths.begin(), basis_paths.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  });

  const std::size_t n = quiver.vertex_count();
  data->between.assign(n, std::vector<std::vector<std::size_t>>(n));
  data->idempotents.assign(n, 0);
  std::map<Path, std::size_t> basis_index;
  for (std::size_t i = 0; i < basis_paths.size(); ++i) {
    const Path& p = basis_paths[i];
    basis_index[p] = i;
    auto& slot = data->between[p.source][p.target];
    data->block_pos.push_back(slot.size());
    slot.push_back(i);
    if (p.is_lazy()) data->idempotents[p.source] = i;
    data->normal_forms[p] = SparseVector{{i, Rational(1)}};
  }
  data->basis = std::move(basis_paths);
  for (const auto& rw : rewrites) {
    SparseVector v;
    for (const auto& [p, c] : rw.combination) v.emplace_back(basis_index.at(p), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    data->normal_forms[rw.path] = std::move(v);
  }
  return data;
}

BoundAlgebra BoundAlgebra::build(const Quiver& quiver, const std::vector<Relation>& relations, Field field,
                                 std::size_t max_length) {
  std::vector<Relation> op_relations;
  for (const auto& r : relations) op_relations.push_back(opposite_relation(r));
  BoundAlgebra alg;
  alg.self_ = compute(quiver, relations, field, max_length);
  alg.op_ = compute(quiver.opposite(), op_relations, field, max_length);
  return alg;
}

SparseVector BoundAlgebra::normal_form(const Path& p) const {
  if (p.length() >= self_->vanishing_length) return {};
  auto it = self_->normal_forms.find(p);
  if (it == self_->normal_forms.end()) throw InputError("normal_form: not a path of this quiver");
  return it->second;
}

SparseVector BoundAlgebra::multiply(std::size_t first, std::size_t then) const {
  const Path& a = self_->basis.at(first);
  const Path& b = self_->basis.at(then);
  if (a.target != b.source) return {};
  return normal_form(a.then(b));
}

BoundAlgebra BoundAlgebra::opposite() const {
  BoundAlgebra op;
  op.self_ = op_;
  op.op_ = self_;
  return op;
}

}  // namespace relrigid
