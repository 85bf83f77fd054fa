#include "relrigid/quiver.hpp"

#include <algorithm>

#include "relrigid/error.hpp"

namespace relrigid {

std::size_t Quiver::add_vertex(const std::string& label) {
  if (label.empty()) throw InputError("empty vertex label");
  if (find_vertex(label)) throw InputError("duplicate vertex label '" + label + "'");
  labels_.push_back(label);
  return labels_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, std::size_t source, std::size_t target) {
  if (name.empty()) throw InputError("empty arrow name");
  if (find_arrow(name)) throw InputError("duplicate arrow name '" + name + "'");
  if (source >= labels_.size() || target >= labels_.size()) {
    throw InputError("arrow '" + name + "' uses an undeclared vertex");
  }
  arrows_.push_back({name, source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].name == name) return a;
  }
  return std::nullopt;
}

std::vector<std::size_t> Quiver::arrows_from(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].source == v) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> Quiver::arrows_into(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].target == v) out.push_back(a);
  }
  return out;
}

Quiver Quiver::opposite() const {
  Quiver q;
  q.labels_ = labels_;
  for (const auto& a : arrows_) q.arrows_.push_back({a.name, a.target, a.source});
  return q;
}

Path Path::of_arrow(const Quiver& q, std::size_t a) {
  const Arrow& ar = q.arrow(a);
  return Path{ar.source, ar.target, {a}};
}

Path Path::then(const Path& next) const {
  if (target != next.source) throw InputError("paths do not compose");
  Path p{source, next.target, arrows};
  p.arrows.insert(p.arrows.end(), next.arrows.begin(), next.arrows.end());
  return p;
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows.empty()) return "e" + q.vertex_label(source);
  std::string s;
  for (std::size_t i = arrows.size(); i-- > 0;) {
    s += q.arrow(arrows[i]).name;
    if (i > 0) s += '*';
  }
  return s;
}

std::string Relation::to_string(const Quiver& q) const {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, p] = terms[i];
    Rational a = abs(c);
    if (i == 0) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    if (a != 1) s += a.get_str() + " ";
    s += p.to_string(q);
  }
  return s;
}

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw InputError("empty relation");
  const Path& first = r.terms.front().second;
  for (const auto& [c, p] : r.terms) {
    if (p.length() < 2) {
      throw InputError("relation term '" + p.to_string(q) + "' has length < 2 (not admissible)");
    }
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) {
      if (q.arrow(p.arrows[i]).target != q.arrow(p.arrows[i + 1]).source) {
        throw InputError("relation term '" + p.to_string(q) + "' is not a path");
      }
    }
    if (p.source != first.source || p.target != first.target) {
      throw InputError("relation terms are not parallel: " + r.to_string(q));
    }
  }
}

Relation opposite_relation(const Relation& r) {
  Relation o;
  for (const auto& [c, p] : r.terms) {
    Path rp{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
    o.terms.emplace_back(c, std::move(rp));
  }
  return o;
}

}  // namespace relrigid
