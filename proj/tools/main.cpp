#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relrigid/decompose.hpp"
#include "relrigid/error.hpp"
#include "relrigid/invariants.hpp"
#include "relrigid/poset.hpp"
#include "relrigid/relative_rigid.hpp"
#include "relrigid/standard_modules.hpp"
#include "relrigid/tau_tilting.hpp"
#include "relrigid/text_format.hpp"

#ifndef RELRIGID_DATA_DIR
#define RELRIGID_DATA_DIR "data"
#endif

namespace {

using relrigid::Representation;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

enum class Format { Json, Dot, Text };

struct RunConfig {
  std::string field_spec = "q";
  relrigid::Field field;
  std::size_t max_path_len = relrigid::BoundAlgebra::kDefaultMaxLength;
  std::size_t budget = 10000;
  Format format = Format::Json;
  std::string out;
};

struct Output {
  std::string text;
  int code = kOk;
};

class UsageError : public relrigid::InputError {
 public:
  using relrigid::InputError::InputError;
};

void require_rational(const RunConfig& cfg, const std::string& command) {
  if (!cfg.field.is_rational()) {
    throw UsageError(command + " needs module decomposition, which is only available over the rationals (--field q)");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json dims_json(const std::vector<std::size_t>& dims) {
  json a = json::array();
  for (auto d : dims) a.push_back(d);
  return a;
}

json module_json(const Representation& m, relrigid::ModuleCatalog& catalog) {
  return json{{"name", catalog.name(m)}, {"dims", dims_json(m.dims())}};
}

json modules_json(const std::vector<Representation>& ms, relrigid::ModuleCatalog& catalog) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(module_json(m, catalog));
  return a;
}

std::vector<Representation> parts_of(const Representation& m) {
  std::vector<Representation> out;
  if (m.is_zero()) return out;
  for (const auto& part : relrigid::decompose(m).summands) out.push_back(part.module);
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? sep : "") + xs[k];
  return s;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
  return s + ")";
}

const char* direction_name(relrigid::Direction d) { return d == relrigid::Direction::Up ? "up" : "down"; }

json order_json(const relrigid::OrderMatrix& leq) {
  json rows = json::array();
  for (const auto& row : leq) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    rows.push_back(r);
  }
  return rows;
}

json covers_json(const relrigid::OrderMatrix& leq) {
  json a = json::array();
  for (const auto& [lo, hi] : relrigid::covering_pairs(leq)) a.push_back(json::array({lo, hi}));
  return a;
}

json header(const RunConfig& cfg, const std::string& command) {
  return json{{"schema", 1}, {"command", command}, {"field", cfg.field.name()}};
}

// info

Output cmd_info(const RunConfig& cfg, const std::string& path) {
  const auto algebra = relrigid::load_algebra(path, cfg.field, cfg.max_path_len);
  const auto& q = algebra.quiver();
  std::vector<std::vector<std::size_t>> pdims, idims;
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) {
    pdims.push_back(relrigid::projective_module(algebra, v).dims());
    idims.push_back(relrigid::injective_module(algebra, v).dims());
  }
  auto total = [](const std::vector<std::size_t>& d) {
    std::size_t t = 0;
    for (auto x : d) t += x;
    return t;
  };

  Output out;
  if (cfg.format == Format::Dot) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t v = 0; v < q.vertex_count(); ++v) os << "  v" << v << " [label=\"" << q.vertex_label(v) << "\"];\n";
    for (const auto& a : q.arrows()) os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.name << "\"];\n";
    os << "}\n";
    out.text = os.str();
    return out;
  }
  if (cfg.format == Format::Text) {
    std::ostringstream os;
    os << "vertices: " << join(q.vertex_labels(), " ") << "\n";
    os << "arrows: " << q.arrow_count() << "\n";
    os << "relations: " << algebra.relations().size() << "\n";
    os << "dimension: " << algebra.dimension() << "\n";
    os << "vanishing length: " << algebra.vanishing_length() << "\n";
    for (std::size_t v = 0; v < algebra.vertex_count(); ++v) {
      os << "vertex " << q.vertex_label(v) << ": P " << dims_text(pdims[v]) << " dim " << total(pdims[v]) << ", I "
         << dims_text(idims[v]) << " dim " << total(idims[v]) << "\n";
    }
    out.text = os.str();
    return out;
  }
  json j = header(cfg, "info");
  j["vertices"] = q.vertex_labels();
  json arrows = json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"name", a.name}, {"source", q.vertex_label(a.source)}, {"target", q.vertex_label(a.target)}});
  }
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : algebra.relations()) rels.push_back(r.to_string(q));
  j["relations"] = rels;
  j["dimension"] = algebra.dimension();
  json basis = json::array();
  for (const auto& p : algebra.basis()) basis.push_back(p.to_string(q));
  j["basis_size"] = algebra.basis().size();
  j["basis"] = basis;
  j["vanishing_length"] = algebra.vanishing_length();
  json per = json::array();
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) {
    per.push_back({{"vertex", q.vertex_label(v)},
                   {"projective_dims", dims_json(pdims[v])},
                   {"projective_dim", total(pdims[v])},
                   {"injective_dims", dims_json(idims[v])},
                   {"injective_dim", total(idims[v])}});
  }
  j["per_vertex"] = per;
  out.text = dump(j);
  return out;
}

// sttilt

Output cmd_sttilt(const RunConfig& cfg, const std::string& path, bool hasse) {
  require_rational(cfg, "sttilt");
  const auto algebra = relrigid::load_algebra(path, cfg.field, cfg.max_path_len);
  const auto g = relrigid::exchange_graph(algebra, cfg.budget);
  Output out;
  if (cfg.format == Format::Dot) {
    out.text = hasse ? relrigid::hasse_dot("sttilt_hasse", g.labels, g.leq)
                     : relrigid::exchange_dot("sttilt", g.labels, g.edges, g.leq);
    return out;
  }
  if (cfg.format == Format::Text) {
    std::ostringstream os;
    os << g.nodes.size() << " support tau-tilting pairs, " << g.edges.size() << " mutations\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k) os << "  [" << k << "] " << g.labels[k] << "\n";
    for (const auto& e : g.edges) {
      os << "  " << e.from << " -- " << e.to << "  " << e.replaced << " <-> " << e.introduced << "\n";
    }
    for (const auto& [lo, hi] : relrigid::covering_pairs(g.leq)) os << "  cover " << lo << " < " << hi << "\n";
    out.text = os.str();
    return out;
  }
  relrigid::ModuleCatalog catalog;
  json j = header(cfg, "sttilt");
  j["count"] = g.nodes.size();
  json nodes = json::array();
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    json projs = json::array();
    for (auto v : g.nodes[k].projectives) projs.push_back(algebra.quiver().vertex_label(v));
    nodes.push_back({{"id", k},
                     {"label", g.labels[k]},
                     {"modules", modules_json(g.nodes[k].modules, catalog)},
                     {"projectives", projs}});
  }
  j["nodes"] = nodes;
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"replaced", e.replaced}, {"introduced", e.introduced}});
  }
  j["edges"] = edges;
  j["order"] = order_json(g.leq);
  j["hasse"] = covers_json(g.leq);
  out.text = dump(j);
  return out;
}

// relrigid

struct SettingContext {
  relrigid::LoadedSetting loaded;
  relrigid::RigidSetting setting;
};

SettingContext load_context(const RunConfig& cfg, const std::string& path) {
  SettingContext c;
  c.loaded = relrigid::load_setting(path, cfg.field, cfg.max_path_len);
  c.setting = relrigid::validate_setting(c.loaded.algebra, c.loaded.r);
  return c;
}

Representation module_arg(const SettingContext& c, const std::string& spec) {
  return relrigid::resolve_module(spec, c.loaded.algebra, c.loaded.library);
}

json f_image_json(const relrigid::RigidSetting& s, const relrigid::FImage& f, relrigid::ModuleCatalog& catalog) {
  json proj = json::array();
  for (auto i : f.projective_part) proj.push_back(catalog.name(s.r[i]));
  return json{{"gamma_dims", dims_json(f.gamma_dims)},
              {"projective_part", proj},
              {"module_part", modules_json(f.module_part, catalog)}};
}

Output relrigid_check(const RunConfig& cfg, const SettingContext& c, const std::string& spec) {
  const auto& s = c.setting;
  const Representation x = module_arg(c, spec);
  relrigid::ModuleCatalog catalog;
  const auto obj = relrigid::make_object(s, x);
  const std::string label = relrigid::object_label(obj.summands, catalog);
  const bool in_r = relrigid::in_R(s, x);
  const bool in_h = obj.witness.has_value();
  const bool def = relrigid::is_R_rigid_def(s, x);
  std::optional<bool> syz;
  if (in_h) syz = relrigid::is_R_rigid_syz(s, *obj.witness);
  const bool rigid = in_h && def && syz.value_or(false);
  std::vector<Representation> non_projective;
  for (const auto& p : obj.summands) {
    if (!relrigid::projective_vertex(p)) non_projective.push_back(p);
  }
  const bool maximal =
      rigid && !non_projective.empty() &&
      relrigid::is_maximal_R_rigid(s, relrigid::direct_sum(s.algebra, non_projective).sum);
  std::optional<relrigid::FImage> image;
  if (rigid) image = relrigid::F_image(s, x);

  Output out;
  out.code = (in_h && rigid && (!syz || *syz == def)) ? kOk : kFailed;
  std::string notice;
  if (in_r) notice = "X lies in add(R + Lambda); such objects are always R-rigid";

  if (cfg.format == Format::Text) {
    std::ostringstream os;
    os << "object: " << label << "\n";
    if (!notice.empty()) os << "notice: " << notice << "\n";
    os << "in H: " << (in_h ? "yes" : "no") << "\n";
    if (in_h) {
      os << "witness: " << label << " >-> " << relrigid::object_label(parts_of(obj.witness->middle()), catalog)
         << " ->> " << relrigid::object_label(parts_of(obj.witness->last()), catalog) << "\n";
    }
    os << "R-rigid (definition): " << (def ? "yes" : "no") << "\n";
    if (syz) os << "R-rigid (syzygy): " << (*syz ? "yes" : "no") << "\n";
    os << "maximal: " << (maximal ? "yes" : "no") << "\n";
    if (image) os << "F gamma dims: " << dims_text(image->gamma_dims) << "\n";
    out.text = os.str();
    return out;
  }
  if (cfg.format == Format::Dot) throw UsageError("check has no DOT output");
  json j = header(cfg, "relrigid check");
  j["object"] = {{"label", label}, {"summands", modules_json(obj.summands, catalog)}};
  j["in_R"] = in_r;
  if (!notice.empty()) j["notice"] = notice;
  j["in_H"] = in_h;
  if (in_h) {
    j["witness"] = {{"middle", modules_json(parts_of(obj.witness->middle()), catalog)},
                    {"last", modules_json(parts_of(obj.witness->last()), catalog)}};
  }
  j["rigid_definition"] = def;
  j["rigid_syzygy"] = syz ? json(*syz) : json(nullptr);
  j["rigid"] = rigid;
  j["maximal"] = maximal;
  j["F"] = image ? f_image_json(s, *image, catalog) : json(nullptr);
  out.text = dump(j);
  return out;
}

Output relrigid_enumerate(const RunConfig& cfg, const SettingContext& c, bool hasse_only) {
  const auto& s = c.setting;
  const auto g = relrigid::enumerate_max_rigid(s, cfg.budget);
  Output out;
  if (cfg.format == Format::Dot) {
    out.text = hasse_only ? relrigid::hasse_dot("relrigid_hasse", g.labels, g.leq)
                          : relrigid::exchange_dot("relrigid", g.labels, g.edges, g.leq);
    return out;
  }
  if (cfg.format == Format::Text) {
    std::ostringstream os;
    os << g.nodes.size() << " maximal R-rigid objects, " << g.edges.size() << " mutations\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k) os << "  [" << k << "] " << g.labels[k] << "\n";
    if (!hasse_only) {
      for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto& e = g.edges[k];
        os << "  " << e.from << " -- " << e.to << "  " << e.replaced << " <-> " << e.introduced << " ("
           << direction_name(g.directions[k]) << ")\n";
      }
    }
    for (const auto& [lo, hi] : relrigid::covering_pairs(g.leq)) os << "  cover " << lo << " < " << hi << "\n";
    out.text = os.str();
    return out;
  }
  relrigid::ModuleCatalog catalog;
  json j = header(cfg, hasse_only ? "relrigid hasse" : "relrigid enumerate");
  j["count"] = g.nodes.size();
  json nodes = json::array();
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    nodes.push_back({{"id", k}, {"label", g.labels[k]}, {"summands", modules_json(g.nodes[k], catalog)}});
  }
  j["nodes"] = nodes;
  if (!hasse_only) {
    json edges = json::array();
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      const auto& e = g.edges[k];
      edges.push_back({{"from", e.from},
                       {"to", e.to},
                       {"replaced", e.replaced},
                       {"introduced", e.introduced},
                       {"direction", direction_name(g.directions[k])}});
    }
    j["edges"] = edges;
    j["order"] = order_json(g.leq);
  }
  j["hasse"] = covers_json(g.leq);
  out.text = dump(j);
  return out;
}

Output relrigid_mutate(const RunConfig& cfg, const SettingContext& c, const std::string& m_spec,
                       const std::string& x_spec) {
  const auto& s = c.setting;
  const Representation m = module_arg(c, m_spec);
  const Representation x = module_arg(c, x_spec);
  if (!relrigid::is_maximal_R_rigid(s, m)) throw UsageError("M is not a maximal R-rigid object");
  const auto mu = relrigid::mutate_max_rigid(s, m, x);
  const Representation result = relrigid::direct_sum(s.algebra, mu.result).sum;
  const bool result_below = relrigid::rel_leq(s, result, m);
  const bool result_above = relrigid::rel_leq(s, m, result);

  relrigid::ModuleCatalog catalog;
  std::vector<Representation> m_parts;
  for (const auto& p : parts_of(m)) {
    if (!relrigid::projective_vertex(p)) m_parts.push_back(p);
  }
  const std::string m_label = relrigid::object_label(m_parts, catalog);
  const std::string result_label = relrigid::object_label(mu.result, catalog);
  const std::string first = catalog.name(mu.sequence.first());
  const std::string middle = relrigid::object_label(parts_of(mu.sequence.middle()), catalog);
  const std::string last = catalog.name(mu.sequence.last());
  const std::string relation = result_above ? "M < mu(M)" : (result_below ? "mu(M) < M" : "incomparable");

  Output out;
  if (cfg.format == Format::Text) {
    std::ostringstream os;
    os << "M: " << m_label << "\n";
    os << "mutation at " << catalog.name(x) << " (" << direction_name(mu.direction) << ")\n";
    os << "conflation: " << first << " >-> " << middle << " ->> " << last << "\n";
    os << "result: " << result_label << "\n";
    os << "order: " << relation << "\n";
    out.text = os.str();
    return out;
  }
  if (cfg.format == Format::Dot) throw UsageError("mutate has no DOT output");
  json j = header(cfg, "relrigid mutate");
  j["M"] = m_label;
  j["at"] = catalog.name(x);
  j["direction"] = direction_name(mu.direction);
  j["complement"] = module_json(mu.complement, catalog);
  j["conflation"] = {{"first", module_json(mu.sequence.first(), catalog)},
                     {"middle", modules_json(parts_of(mu.sequence.middle()), catalog)},
                     {"last", module_json(mu.sequence.last(), catalog)}};
  j["result"] = {{"label", result_label}, {"summands", modules_json(mu.result, catalog)}};
  j["order"] = relation;
  out.text = dump(j);
  return out;
}

Output relrigid_bijection(const RunConfig& cfg, const SettingContext& c) {
  const auto& s = c.setting;
  const auto g = relrigid::enumerate_max_rigid(s, cfg.budget);
  const auto report = relrigid::verify_bijection(s, g);
  Output out;
  out.code = report.ok() ? kOk : kFailed;
  relrigid::ModuleCatalog catalog;
  if (cfg.format == Format::Text) {
    std::ostringstream os;
    for (const auto& row : report.rows) {
      std::vector<std::string> proj;
      for (auto i : row.image.projective_part) proj.push_back(catalog.name(s.r[i]));
      os << row.label << "  |->  Gamma dims " << dims_text(row.image.gamma_dims) << ", projective part {"
         << join(proj, ", ") << "}\n";
    }
    os << "transport pairs checked: " << report.transport_pairs << "\n";
    for (const auto& v : report.violations) os << "violation: " << v << "\n";
    os << (report.ok() ? "bijection verified" : "bijection FAILED") << "\n";
    out.text = os.str();
    return out;
  }
  if (cfg.format == Format::Dot) throw UsageError("verify-bijection has no DOT output");
  json j = header(cfg, "relrigid verify-bijection");
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"object", row.label}, {"F", f_image_json(s, row.image, catalog)}});
  }
  j["rows"] = rows;
  j["order"] = order_json(g.leq);
  j["transport_pairs"] = report.transport_pairs;
  j["violations"] = report.violations;
  j["ok"] = report.ok();
  out.text = dump(j);
  return out;
}

Output relrigid_tilting(const RunConfig& cfg, const SettingContext& c, const std::string& spec) {
  const auto& s = c.setting;
  const Representation x = module_arg(c, spec);
  std::vector<Representation> x0;
  for (const auto& p : parts_of(x)) {
    if (!relrigid::find_isomorphic(s.generators, p)) x0.push_back(p);
  }
  const Representation x0_sum = relrigid::direct_sum(s.algebra, x0).sum;
  const auto report = relrigid::tilting_check(s, x0_sum);
  relrigid::ModuleCatalog catalog;
  const std::string label = relrigid::object_label(x0, catalog);
  Output out;
  out.code = report.consistent() ? kOk : kFailed;
  if (cfg.format == Format::Text) {
    std::ostringstream os;
    os << "X0: " << label << "\n";
    os << "pd F(X0) <= 1: " << (report.pd_le_1 ? "yes" : "no") << "\n";
    os << "[X0](R, R) stably zero: " << (report.ideal_vanishes ? "yes" : "no") << "\n";
    os << "tilting: " << (report.is_tilting ? "yes" : "no") << "\n";
    if (!report.consistent()) os << "criteria DISAGREE\n";
    out.text = os.str();
    return out;
  }
  if (cfg.format == Format::Dot) throw UsageError("tilting has no DOT output");
  json j = header(cfg, "relrigid tilting");
  j["X0"] = {{"label", label}, {"summands", modules_json(x0, catalog)}};
  j["pd_le_1"] = report.pd_le_1;
  j["ideal_vanishes"] = report.ideal_vanishes;
  j["is_tilting"] = report.is_tilting;
  j["consistent"] = report.consistent();
  out.text = dump(j);
  return out;
}

// selftest

Output cmd_selftest(const RunConfig& cfg, const std::string& data_dir) {
  const auto reports = relrigid::run_selftest(data_dir, cfg.field);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  Output out;
  out.code = ok ? kOk : kFailed;
  if (cfg.format == Format::Json) {
    json j = header(cfg, "selftest");
    json suites = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& ch : r.checks) {
        checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
      }
      suites.push_back({{"name", r.name}, {"ok", r.ok()}, {"skipped", r.skipped}, {"notice", r.notice},
                        {"checks", checks}});
    }
    j["suites"] = suites;
    j["ok"] = ok;
    out.text = dump(j);
    return out;
  }
  if (cfg.format == Format::Dot) throw UsageError("selftest has no DOT output");
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.skipped ? "SKIP" : (r.ok() ? "PASS" : "FAIL")) << "  " << r.name << "\n";
    for (const auto& ch : r.checks) {
      os << "    " << (ch.passed ? "ok  " : "FAIL") << "  " << ch.name;
      if (!ch.detail.empty()) os << ": " << ch.detail;
      os << "\n";
    }
    if (!r.notice.empty()) os << "    notice: " << r.notice << "\n";
  }
  os << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  out.text = os.str();
  return out;
}

int emit(const RunConfig& cfg, const Output& out) {
  if (cfg.out.empty()) {
    std::cout << out.text;
    std::cout.flush();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kInputError;
    }
    f << out.text;
  }
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relrigid: tau-tilting and relative rigid objects over bound quiver algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  app.add_option("--field", cfg.field_spec, "Ground field: q or fp:<p>")->capture_default_str();
  app.add_option("--max-path-len", cfg.max_path_len, "Longest path examined when building the algebra basis")
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "Maximum number of nodes in a traversal")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  std::string path;
  auto* info = app.add_subcommand("info", "Dimension, basis and projective/injective dimension vectors");
  info->add_option("algebra", path, "Algebra file")->required();

  bool sttilt_hasse = false;
  auto* sttilt = app.add_subcommand("sttilt", "Support tau-tilting pairs and their exchange graph");
  sttilt->add_option("algebra", path, "Algebra file")->required();
  sttilt->add_flag("--hasse", sttilt_hasse, "Emit the Hasse diagram of the Fac order instead of the exchange graph");

  auto* rel = app.add_subcommand("relrigid", "Relative rigid objects for a setting (algebra and R)");
  rel->fallthrough();
  rel->require_subcommand(1);
  rel->add_option("setting", path, "Setting file")->required();
  std::string x_spec, m_spec;
  auto* check = rel->add_subcommand("check", "Membership in H and R-rigidity of X");
  check->add_option("X", x_spec, "Module file or names joined by '+'")->required();
  auto* enumerate = rel->add_subcommand("enumerate", "All maximal R-rigid objects by mutation");
  auto* mutate = rel->add_subcommand("mutate", "Mutate the maximal object M at the summand X");
  mutate->add_option("M", m_spec, "Module file or names joined by '+'")->required();
  mutate->add_option("--at", x_spec, "Summand to replace")->required();
  auto* hasse = rel->add_subcommand("hasse", "Hasse diagram of the order on maximal objects");
  auto* bijection = rel->add_subcommand("verify-bijection", "Check the correspondence with support tau-tilting pairs");
  auto* tilting = rel->add_subcommand("tilting", "Compare the two tilting criteria for X");
  tilting->add_option("X", x_spec, "Module file or names joined by '+'")->required();

  std::string data_dir = RELRIGID_DATA_DIR;
  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite on the bundled fixtures");
  selftest->add_option("--data", data_dir, "Fixture directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  cfg.format = format == "dot" ? Format::Dot : (format == "text" ? Format::Text : Format::Json);
  if (*selftest && format == "json" && app.get_option("--format")->count() == 0) cfg.format = Format::Text;

  try {
    cfg.field = relrigid::parse_field(cfg.field_spec);
    Output out;
    if (*info) {
      out = cmd_info(cfg, path);
    } else if (*sttilt) {
      out = cmd_sttilt(cfg, path, sttilt_hasse);
    } else if (*rel) {
      require_rational(cfg, "relrigid");
      const SettingContext c = load_context(cfg, path);
      if (*check) out = relrigid_check(cfg, c, x_spec);
      else if (*enumerate) out = relrigid_enumerate(cfg, c, false);
      else if (*hasse) out = relrigid_enumerate(cfg, c, true);
      else if (*mutate) out = relrigid_mutate(cfg, c, m_spec, x_spec);
      else if (*bijection) out = relrigid_bijection(cfg, c);
      else out = relrigid_tilting(cfg, c, x_spec);
    } else {
      out = cmd_selftest(cfg, data_dir);
    }
    return emit(cfg, out);
  } catch (const relrigid::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const relrigid::FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const relrigid::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kFailed;
  } catch (const relrigid::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
}
