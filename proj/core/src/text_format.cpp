#include "relrigid/text_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "relrigid/error.hpp"

namespace relrigid {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({n, std::move(t)});
  }
  return out;
}

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& message) {
  throw InputError(origin + ":" + std::to_string(line) + ": " + message);
}

bool parse_rational(const std::string& s, Rational& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  bool slash = false;
  bool digit_after_slash = true;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash) return false;
      slash = true;
      digit_after_slash = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit_after_slash = true;
    } else {
      return false;
    }
  }
  if (!digit_after_slash) return false;
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  if (out.set_str(body, 10) != 0) return false;
  if (out.get_den() == 0) return false;
  out.canonicalize();
  return true;
}

Path parse_path(const Quiver& q, const std::string& text, const std::string& origin, std::size_t line) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (c == '*') {
      names.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  names.push_back(trim(cur));
  std::vector<std::size_t> arrows;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    if (it->empty()) fail(origin, line, "empty factor in path '" + text + "'");
    auto a = q.find_arrow(*it);
    if (!a) fail(origin, line, "unknown arrow '" + *it + "'");
    arrows.push_back(*a);
  }
  Path p = Path::of_arrow(q, arrows.front());
  for (std::size_t k = 1; k < arrows.size(); ++k) {
    if (q.arrow(arrows[k]).source != p.target) fail(origin, line, "path '" + text + "' does not compose");
    p = p.then(Path::of_arrow(q, arrows[k]));
  }
  return p;
}

Relation parse_relation(const Quiver& q, const Field& field, const std::string& text, const std::string& origin,
                        std::size_t line) {
  // Split at top-level signs.
  std::vector<std::pair<int, std::string>> pieces;
  int sign = 1;
  std::string cur;
  bool seen = false;
  for (char c : text) {
    if ((c == '+' || c == '-') && (!trim(cur).empty() || !seen)) {
      if (!trim(cur).empty()) pieces.push_back({sign, trim(cur)});
      sign = c == '-' ? -1 : 1;
      cur.clear();
      seen = true;
    } else {
      cur += c;
      if (c != ' ' && c != '\t') seen = true;
    }
  }
  if (!trim(cur).empty()) pieces.push_back({sign, trim(cur)});
  if (pieces.empty()) fail(origin, line, "empty relation");
  Relation r;
  for (auto& [s, body] : pieces) {
    Rational coeff = 1;
    std::string path_text = body;
    const auto ws = words(body);
    Rational parsed;
    if (ws.size() > 1 && parse_rational(ws.front(), parsed)) {
      coeff = parsed;
      path_text = trim(body.substr(body.find(ws.front()) + ws.front().size()));
    } else if (auto star = body.find('*'); star != std::string::npos && parse_rational(trim(body.substr(0, star)), parsed)) {
      coeff = parsed;
      path_text = trim(body.substr(star + 1));
    }
    if (s < 0) coeff = -coeff;
    coeff = field.reduce(coeff);
    r.terms.push_back({coeff, parse_path(q, path_text, origin, line)});
  }
  try {
    validate_relation(q, r);
  } catch (const InputError& e) {
    fail(origin, line, e.what());
  }
  return r;
}

std::string format_rational(const Rational& x) { return x.get_str(); }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraText parse_algebra_text(const std::string& text, const Field& field, const std::string& origin) {
  AlgebraText out;
  std::string section;
  std::vector<Line> relation_lines;
  bool have_vertices = false;
  for (const auto& [n, t] : content_lines(text)) {
    if (t.front() == '[') {
      if (t.back() != ']') fail(origin, n, "malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section != "vertices" && section != "arrows" && section != "relations") {
        fail(origin, n, "unknown section '" + section + "'");
      }
      continue;
    }
    if (section.empty()) fail(origin, n, "content before the first section");
    if (section == "vertices") {
      for (const auto& w : words(t)) {
        try {
          out.quiver.add_vertex(w);
        } catch (const InputError& e) {
          fail(origin, n, e.what());
        }
      }
      have_vertices = true;
    } else if (section == "arrows") {
      const auto colon = t.find(':');
      const auto arrow = t.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
        fail(origin, n, "expected 'name: source -> target'");
      }
      const std::string name = trim(t.substr(0, colon));
      const std::string src = trim(t.substr(colon + 1, arrow - colon - 1));
      const std::string tgt = trim(t.substr(arrow + 2));
      const auto s = out.quiver.find_vertex(src);
      const auto g = out.quiver.find_vertex(tgt);
      if (!s) fail(origin, n, "unknown vertex '" + src + "'");
      if (!g) fail(origin, n, "unknown vertex '" + tgt + "'");
      try {
        out.quiver.add_arrow(name, *s, *g);
      } catch (const InputError& e) {
        fail(origin, n, e.what());
      }
    } else {
      relation_lines.push_back({n, t});
    }
  }
  if (!have_vertices || out.quiver.vertex_count() == 0) throw InputError(origin + ": no vertices declared");
  for (const auto& [n, t] : relation_lines) out.relations.push_back(parse_relation(out.quiver, field, t, origin, n));
  return out;
}

BoundAlgebra parse_algebra(const std::string& text, const Field& field, std::size_t max_length,
                           const std::string& origin) {
  AlgebraText parsed = parse_algebra_text(text, field, origin);
  return BoundAlgebra::build(parsed.quiver, parsed.relations, field, max_length);
}

BoundAlgebra load_algebra(const std::filesystem::path& path, const Field& field, std::size_t max_length) {
  return parse_algebra(read_file(path), field, max_length, path.string());
}

std::string write_algebra(const BoundAlgebra& algebra) {
  const Quiver& q = algebra.quiver();
  std::ostringstream out;
  out << "[vertices]\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out << (v ? " " : "") << q.vertex_label(v);
  out << "\n[arrows]\n";
  for (const auto& a : q.arrows()) {
    out << a.name << ": " << q.vertex_label(a.source) << " -> " << q.vertex_label(a.target) << "\n";
  }
  out << "[relations]\n";
  for (const auto& r : algebra.relations()) out << r.to_string(q) << "\n";
  return out.str();
}

std::vector<NamedModule> parse_modules(const std::string& text, const BoundAlgebra& algebra,
                                       const std::string& origin) {
  const Quiver& q = algebra.quiver();
  const Field& field = algebra.field();
  struct Pending {
    std::string name;
    std::size_t line = 0;
    std::vector<std::size_t> dims;
    bool have_dims = false;
    std::vector<std::vector<std::vector<Rational>>> rows;
    std::vector<std::vector<std::size_t>> row_lines;
    std::vector<std::size_t> arrow_lines;
  };
  std::vector<NamedModule> out;
  std::optional<Pending> cur;
  std::optional<std::size_t> current_arrow;

  auto finish = [&]() {
    if (!cur) return;
    if (!cur->have_dims) fail(origin, cur->line, "module '" + cur->name + "' has no dims line");
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arrow = q.arrow(a);
      const std::size_t r = cur->dims[arrow.target];
      const std::size_t c = cur->dims[arrow.source];
      Matrix m(r, c, field);
      const auto& rows = cur->rows[a];
      if (!rows.empty()) {
        if (rows.size() != r) {
          fail(origin, cur->arrow_lines[a], "module '" + cur->name + "': arrow '" + arrow.name + "' needs " + std::to_string(r) +
                                      " rows, found " + std::to_string(rows.size()));
        }
        for (std::size_t i = 0; i < r; ++i) {
          if (rows[i].size() != c) {
            fail(origin, cur->row_lines[a][i], "module '" + cur->name + "': arrow '" + arrow.name + "' needs " +
                                                   std::to_string(c) + " columns");
          }
          for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
      }
      maps.push_back(std::move(m));
    }
    try {
      out.push_back({cur->name, Representation(algebra, cur->dims, std::move(maps))});
    } catch (const InputError& e) {
      fail(origin, cur->line, "module '" + cur->name + "': " + e.what());
    }
    cur.reset();
    current_arrow.reset();
  };

  for (const auto& [n, t] : content_lines(text)) {
    if (t.rfind("[module]", 0) == 0) {
      finish();
      cur = Pending{};
      cur->name = trim(t.substr(8));
      cur->line = n;
      if (cur->name.empty()) cur->name = "M" + std::to_string(out.size() + 1);
      cur->rows.assign(q.arrow_count(), {});
      cur->row_lines.assign(q.arrow_count(), {});
      cur->arrow_lines.assign(q.arrow_count(), n);
      continue;
    }
    if (!cur) fail(origin, n, "expected '[module]'");
    if (t.rfind("dims:", 0) == 0) {
      cur->dims.clear();
      for (const auto& w : words(t.substr(5))) {
        std::size_t pos = 0;
        unsigned long d = 0;
        try {
          d = std::stoul(w, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != w.size() || w.front() == '-') fail(origin, n, "bad dimension '" + w + "'");
        cur->dims.push_back(d);
      }
      if (cur->dims.size() != q.vertex_count()) {
        fail(origin, n, "expected " + std::to_string(q.vertex_count()) + " dimensions");
      }
      cur->have_dims = true;
      current_arrow.reset();
      continue;
    }
    if (t.rfind("arrow ", 0) == 0) {
      if (t.back() != ':') fail(origin, n, "expected 'arrow <name>:'");
      const std::string name = trim(t.substr(6, t.size() - 7));
      auto a = q.find_arrow(name);
      if (!a) fail(origin, n, "unknown arrow '" + name + "'");
      if (!cur->rows[*a].empty()) fail(origin, n, "arrow '" + name + "' given twice");
      current_arrow = *a;
      cur->arrow_lines[*a] = n;
      continue;
    }
    if (!current_arrow) fail(origin, n, "matrix row outside an arrow block");
    std::vector<Rational> row;
    for (const auto& w : words(t)) {
      Rational x;
      if (!parse_rational(w, x)) fail(origin, n, "bad number '" + w + "'");
      row.push_back(field.reduce(x));
    }
    cur->rows[*current_arrow].push_back(std::move(row));
    cur->row_lines[*current_arrow].push_back(n);
  }
  finish();
  return out;
}

std::vector<NamedModule> load_modules(const std::filesystem::path& path, const BoundAlgebra& algebra) {
  return parse_modules(read_file(path), algebra, path.string());
}

std::string write_module(const std::string& name, const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::ostringstream out;
  out << "[module] " << name << "\ndims:";
  for (auto d : m.dims()) out << " " << d;
  out << "\n";
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& x = m.arrow_map(a);
    if (x.rows() == 0 || x.cols() == 0) continue;
    out << "arrow " << q.arrow(a).name << ":\n";
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) out << (j ? " " : "") << format_rational(x(i, j));
      out << "\n";
    }
  }
  return out.str();
}

LoadedSetting load_setting(const std::filesystem::path& path, const Field& field, std::size_t max_length) {
  const std::string origin = path.string();
  std::map<std::string, std::pair<std::size_t, std::string>> keys;
  for (const auto& [n, t] : content_lines(read_file(path))) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) fail(origin, n, "expected 'key: value'");
    const std::string key = trim(t.substr(0, colon));
    if (key != "algebra" && key != "R" && key != "indecomposables") fail(origin, n, "unknown key '" + key + "'");
    if (keys.count(key)) fail(origin, n, "duplicate key '" + key + "'");
    keys[key] = {n, trim(t.substr(colon + 1))};
  }
  if (!keys.count("algebra")) throw InputError(origin + ": missing 'algebra:'");
  if (!keys.count("R")) throw InputError(origin + ": missing 'R:'");
  const auto base = path.parent_path();
  LoadedSetting s;
  s.algebra = load_algebra(base / keys["algebra"].second, field, max_length);
  s.r_parts = load_modules(base / keys["R"].second, s.algebra);
  if (s.r_parts.empty()) throw InputError(origin + ": R file holds no modules");
  std::vector<Representation> parts;
  for (const auto& p : s.r_parts) parts.push_back(p.module);
  s.r = direct_sum(s.algebra, parts).sum;
  if (keys.count("indecomposables")) s.library = load_modules(base / keys["indecomposables"].second, s.algebra);
  return s;
}

Representation resolve_module(const std::string& spec, const BoundAlgebra& algebra,
                              const std::vector<NamedModule>& library) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    const auto mods = load_modules(spec, algebra);
    std::vector<Representation> parts;
    for (const auto& m : mods) parts.push_back(m.module);
    return direct_sum(algebra, parts).sum;
  }
  std::vector<Representation> parts;
  std::string cur;
  auto flush = [&]() {
    const std::string name = trim(cur);
    cur.clear();
    if (name.empty()) throw InputError("empty module name in '" + spec + "'");
    for (const auto& m : library) {
      if (m.name == name) {
        parts.push_back(m.module);
        return;
      }
    }
    throw InputError("unknown module '" + name + "' (not a file and not in the indecomposables list)");
  };
  for (char c : spec) {
    if (c == '+') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return direct_sum(algebra, parts).sum;
}

}  // namespace relrigid
