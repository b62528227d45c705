#include "quandlekit/io.hpp"

#include <fstream>
#include <sstream>

#include "quandlekit/error.hpp"

namespace quandlekit {

namespace {

Json const& field(Json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

template <class T>
T get_as(Json const& j, char const* what) {
  try {
    return j.get<T>();
  } catch (nlohmann::json::exception const&) {
    throw ParseError(std::string("malformed ") + what);
  }
}

void expect_kind(Json const& j, char const* kind) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind) {
    throw ParseError(std::string("expected a document of kind \"") + kind + "\"");
  }
}

}  // namespace

Json perm_to_json(Perm const& p) { return Json(p.images()); }

Perm perm_from_json(Json const& j) {
  auto images = get_as<std::vector<int>>(j, "permutation");
  try {
    return Perm(std::move(images));
  } catch (InvalidTable const& e) {
    throw ParseError(e.what());
  }
}

Json quandle_to_json(Quandle const& q) {
  Json j;
  j["kind"] = "quandle";
  j["order"] = q.order();
  j["table"] = q.rows();
  if (!q.labels().empty()) j["labels"] = q.labels();
  return j;
}

Quandle quandle_from_json(Json const& j) {
  expect_kind(j, "quandle");
  auto n = get_as<std::size_t>(field(j, "order"), "quandle order");
  auto table = get_as<Table>(field(j, "table"), "quandle table");
  if (table.size() != n) throw ParseError("quandle table needs one row per element");
  for (auto const& row : table) {
    if (row.size() != n) throw ParseError("quandle table rows must have length order");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw ParseError("quandle table entry out of range");
      }
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = get_as<std::vector<std::string>>(j.at("labels"), "labels");
    if (labels.size() != n) throw ParseError("labels need one entry per element");
  }
  return Quandle::from_table(table, std::move(labels));
}

Json presentation_to_json(Presentation const& p) {
  Json j;
  j["kind"] = "presentation";
  j["ngens"] = p.ngens;
  Json rels = Json::array();
  for (auto const& r : p.relators) rels.push_back(signed_from_word(r));
  j["relators"] = std::move(rels);
  return j;
}

Presentation presentation_from_json(Json const& j) {
  expect_kind(j, "presentation");
  Presentation p;
  p.ngens = get_as<std::size_t>(field(j, "ngens"), "ngens");
  for (auto const& r : get_as<std::vector<std::vector<int>>>(field(j, "relators"), "relators")) {
    p.relators.push_back(word_from_signed(r));
  }
  try {
    p.validate();
  } catch (std::out_of_range const& e) {
    throw ParseError(e.what());
  }
  return p;
}

Json cocycle_to_json(ConstantCocycle const& alpha) {
  Json j;
  j["kind"] = "cocycle";
  j["base"] = quandle_to_json(alpha.base());
  j["fiber"] = alpha.fiber_size();
  Json rows = Json::array();
  for (auto const& row : alpha.table()) {
    Json r = Json::array();
    for (auto const& p : row) r.push_back(perm_to_json(p));
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  return j;
}

ConstantCocycle cocycle_from_json(Json const& j) {
  expect_kind(j, "cocycle");
  Quandle base = quandle_from_json(field(j, "base"));
  auto s = get_as<std::size_t>(field(j, "fiber"), "fiber size");
  Json const& t = field(j, "table");
  if (!t.is_array() || t.size() != base.order()) {
    throw ParseError("cocycle table needs one row per base element");
  }
  CocycleTable table;
  for (auto const& row : t) {
    if (!row.is_array() || row.size() != base.order()) {
      throw ParseError("cocycle rows need one entry per base element");
    }
    std::vector<Perm> r;
    for (auto const& p : row) {
      Perm perm = perm_from_json(p);
      if (perm.degree() != s) throw ParseError("cocycle entries must permute the fiber");
      r.push_back(std::move(perm));
    }
    table.push_back(std::move(r));
  }
  return validate_constant(base, s, std::move(table));
}

Json abelian_cocycle_to_json(AbelianCocycle const& mu) {
  Json j;
  j["kind"] = "abelian_cocycle";
  j["base"] = quandle_to_json(mu.base);
  j["coefficients"] = mu.coefficients.moduli;
  j["table"] = mu.table;
  return j;
}

AbelianCocycle abelian_cocycle_from_json(Json const& j) {
  expect_kind(j, "abelian_cocycle");
  AbelianCocycle mu;
  mu.base = quandle_from_json(field(j, "base"));
  mu.coefficients.moduli = get_as<std::vector<int>>(field(j, "coefficients"), "coefficients");
  for (int m : mu.coefficients.moduli) {
    if (m < 1) throw ParseError("coefficient moduli must be positive");
  }
  mu.table = get_as<std::vector<std::vector<std::vector<int>>>>(field(j, "table"),
                                                                "abelian cocycle table");
  std::size_t const n = mu.base.order();
  if (mu.table.size() != n) throw ParseError("cocycle table needs one row per base element");
  for (auto& row : mu.table) {
    if (row.size() != n) throw ParseError("cocycle rows need one entry per base element");
    for (auto& v : row) {
      if (v.size() != mu.coefficients.moduli.size()) {
        throw ParseError("coefficient tuple has the wrong length");
      }
      for (std::size_t c = 0; c < v.size(); ++c) {
        int m = mu.coefficients.moduli[c];
        v[c] = ((v[c] % m) + m) % m;
      }
    }
  }
  validate_abelian(mu);
  return mu;
}

Json union_spec_to_json(UnionSpec const& spec) {
  Json j;
  j["kind"] = "union";
  j["q1"] = quandle_to_json(spec.q1);
  j["q2"] = quandle_to_json(spec.q2);
  Json s = Json::array(), t = Json::array();
  for (auto const& p : spec.sigma) s.push_back(perm_to_json(p));
  for (auto const& p : spec.tau) t.push_back(perm_to_json(p));
  j["sigma"] = std::move(s);
  j["tau"] = std::move(t);
  return j;
}

UnionSpec union_spec_from_json(Json const& j) {
  expect_kind(j, "union");
  UnionSpec spec{quandle_from_json(field(j, "q1")), quandle_from_json(field(j, "q2")), {}, {}};
  for (auto const& p : field(j, "sigma")) spec.sigma.push_back(perm_from_json(p));
  for (auto const& p : field(j, "tau")) spec.tau.push_back(perm_from_json(p));
  if (spec.sigma.size() != spec.q1.order() || spec.tau.size() != spec.q2.order()) {
    throw ParseError("sigma and tau need one map per element");
  }
  for (auto const& p : spec.sigma) {
    if (p.degree() != spec.q2.order()) throw ParseError("sigma entries must permute q2");
  }
  for (auto const& p : spec.tau) {
    if (p.degree() != spec.q1.order()) throw ParseError("tau entries must permute q1");
  }
  return spec;
}

std::string document_kind(Json const& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.contains("kind")) return get_as<std::string>(j.at("kind"), "kind");
  if (j.contains("q1")) return "union";
  if (j.contains("ngens")) return "presentation";
  if (j.contains("coefficients")) return "abelian_cocycle";
  if (j.contains("fiber")) return "cocycle";
  if (j.contains("order")) return "quandle";
  throw ParseError("cannot determine the document kind");
}

Document document_from_json(Json const& j) {
  std::string kind = document_kind(j);
  if (kind == "quandle") return quandle_from_json(j);
  if (kind == "presentation") return presentation_from_json(j);
  if (kind == "cocycle") return cocycle_from_json(j);
  if (kind == "abelian_cocycle") return abelian_cocycle_from_json(j);
  if (kind == "union") return union_spec_from_json(j);
  throw ParseError("unknown document kind \"" + kind + "\"");
}

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace quandlekit
