#include "quandlekit/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quandlekit/cocycle.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/envgroup.hpp"
#include "quandlekit/error.hpp"
#include "quandlekit/fingroup.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/quandle.hpp"
#include "quandlekit/suites.hpp"

namespace quandlekit::cli {

namespace {

// Raised for argument combinations the grammar rejects.
class UsageError : public Error {
 public:
  using Error::Error;
};

class Digest {
 public:
  void feed(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;
    hash_ *= 0x100000001b3ULL;
  }
  std::string hex() const {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << hash_;
    return s.str();
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
};

struct Context {
  Caps caps;
  Digest digest;

  Json read_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    digest.feed(text);
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
};

struct Outcome {
  Json results = Json::object();
  std::vector<std::pair<std::string, bool>> checks;

  void check(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
};

struct SourceFlags {
  std::size_t trivial = 0, dihedral = 0;
  std::string conj, core, file;
  long power = 1;
  std::vector<std::string> alexander;
  std::vector<CLI::Option*> options;
  CLI::Option* power_opt = nullptr;
  CLI::Option* file_opt = nullptr;
};

void add_source(CLI::App* app, SourceFlags& s) {
  s.options.push_back(app->add_option("--trivial", s.trivial, "trivial quandle of order N"));
  s.options.push_back(app->add_option("--dihedral", s.dihedral, "dihedral quandle R_N"));
  s.options.push_back(app->add_option("--conj", s.conj, "Conj_K of a catalog group, e.g. S3"));
  s.power_opt = app->add_option("--power", s.power, "exponent K for --conj (default 1)");
  s.options.push_back(app->add_option("--core", s.core, "core quandle of a catalog group"));
  s.options.push_back(app->add_option("--alexander", s.alexander,
                                      "Alexander quandle: group spec and automorphism file")
                          ->expected(2));
  s.file_opt = app->add_option("--file", s.file, "JSON document");
  s.options.push_back(s.file_opt);
}

std::size_t chosen(SourceFlags const& s) {
  std::size_t n = 0;
  for (auto* o : s.options) n += o->count() > 0 ? 1 : 0;
  return n;
}

Perm read_automorphism(Json const& j) {
  if (j.is_object() && j.contains("automorphism")) return perm_from_json(j.at("automorphism"));
  return perm_from_json(j);
}

Quandle load_quandle(SourceFlags const& s, Context& ctx) {
  if (chosen(s) != 1) {
    throw UsageError("exactly one of --trivial, --dihedral, --conj, --core, --alexander, --file is required");
  }
  if (s.power_opt->count() > 0 && s.options[2]->count() == 0) {
    throw UsageError("--power only applies to --conj");
  }
  if (s.options[0]->count()) return trivial_quandle(s.trivial);
  if (s.options[1]->count()) {
    if (s.dihedral == 0) throw UsageError("R_N needs N >= 1");
    return dihedral_quandle(s.dihedral);
  }
  if (s.options[2]->count()) return conj_quandle(make_group(s.conj), s.power);
  if (s.options[3]->count()) return core_quandle(make_group(s.core));
  if (s.options[4]->count()) {
    FiniteGroup g = make_group(s.alexander[0]);
    return alexander_quandle(g, read_automorphism(ctx.read_json(s.alexander[1])));
  }
  Json j = ctx.read_json(s.file);
  if (document_kind(j) != "quandle") throw ParseError(s.file + " is not a quandle document");
  return quandle_from_json(j);
}

Json group_report(PermGroup const& g) {
  Json j;
  j["order"] = g.order();
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (auto const& p : g.generators()) gens.push_back(perm_to_json(p));
  j["generators"] = std::move(gens);
  if (g.order() <= 1000) {
    Json el = Json::array();
    for (auto const& p : g.elements()) el.push_back(perm_to_json(p));
    j["elements"] = std::move(el);
  }
  return j;
}

Outcome invariants(Quandle const& q, Caps const& caps) {
  Outcome o;
  auto& r = o.results;
  r["order"] = q.order();
  r["trivial"] = is_trivial(q);
  r["involutory"] = is_involutory(q);
  r["connected"] = is_connected(q);
  r["orbits"] = orbit_partition(q);
  r["center"] = center(q);
  r["distinct_translations"] = inner_generators(q).size();
  PermGroup a = aut(q, caps);
  PermGroup i = inn(q, caps);
  r["aut_order"] = a.order();
  r["inn_order"] = i.order();
  r["qinn_order"] = qinn(q, caps).order();
  Json ka = Json::object(), ki = Json::object();
  for (std::size_t k = 1; k <= 3; ++k) {
    ka[std::to_string(k)] = k > q.order() || is_k_transitive(a, k);
    ki[std::to_string(k)] = k > q.order() || is_k_transitive(i, k);
  }
  r["aut_k_transitive"] = std::move(ka);
  r["inn_k_transitive"] = std::move(ki);
  return o;
}

Outcome envelope(Presentation const& p, bool abelian_mode, std::string const& subgens,
                 std::size_t max_cosets) {
  Outcome o;
  o.results["ngens"] = p.ngens;
  o.results["relator_count"] = p.relators.size();
  o.results["presentation"] = presentation_to_json(p);
  if (abelian_mode) {
    Abelianization ab = abelianization(p);
    o.results["abelianization"] = {{"free_rank", ab.free_rank}, {"torsion", ab.torsion}};
    return o;
  }
  Json words;
  try {
    words = Json::parse(subgens);
  } catch (nlohmann::json::parse_error const&) {
    throw ParseError("SUBGENS must be a JSON list of signed words, e.g. [[1,1]]");
  }
  std::vector<Word> subgroup;
  if (!words.is_array()) throw ParseError("SUBGENS must be a JSON list");
  for (auto const& w : words) {
    std::vector<int> letters;
    try {
      letters = w.get<std::vector<int>>();
    } catch (nlohmann::json::exception const&) {
      throw ParseError("each subgroup generator must be a list of signed integers");
    }
    Word word = word_from_signed(letters);
    for (auto const& l : word) {
      if (static_cast<std::size_t>(l.gen) >= p.ngens) {
        throw ParseError("subgroup generator names a missing generator");
      }
    }
    subgroup.push_back(std::move(word));
  }
  o.results["subgroup"] = words;
  o.results["max_cosets"] = max_cosets;
  try {
    o.results["index"] = todd_coxeter(p, subgroup, {max_cosets, false});
    o.check("coset enumeration completed", true);
  } catch (CosetLimitExceeded const& e) {
    o.results["index"] = nullptr;
    o.results["diagnostic"] = e.what();
    o.check("coset enumeration completed", false);
  }
  return o;
}

Outcome extend_document(Json const& j) {
  Outcome o;
  std::string kind = document_kind(j);
  Quandle ext;
  if (kind == "cocycle") {
    ConstantCocycle alpha = cocycle_from_json(j);
    o.results["base_order"] = alpha.base().order();
    o.results["fiber"] = alpha.fiber_size();
    ext = extend(alpha);
  } else if (kind == "abelian_cocycle") {
    AbelianCocycle mu = abelian_cocycle_from_json(j);
    o.results["base_order"] = mu.base.order();
    o.results["coefficients"] = mu.coefficients.moduli;
    ext = abelian_extension(mu);
    o.check("abelian extension matches the translation cocycle",
            ext == extend(abelian_to_constant(mu)));
  } else {
    throw ParseError("extend needs a cocycle or abelian_cocycle document");
  }
  o.results["order"] = ext.order();
  o.results["extension"] = quandle_to_json(ext);
  o.check("cocycle conditions hold", true);
  o.check("extension satisfies the quandle axioms", true);
  return o;
}

Outcome h2_report(Quandle const& q, std::string const& coeff, Caps const& caps) {
  Outcome o;
  std::vector<int> moduli = parse_cyclic_factors(coeff);
  H2Result h = compute_h2(q, moduli, caps);
  o.results["coefficients"] = moduli;
  o.results["order"] = h.order;
  o.results["invariant_factors"] = h.invariant_factors;
  o.results["cyclic_orders"] = h.cyclic_orders;
  o.results["cocycle_count"] = h.cocycle_count;
  o.results["coboundary_count"] = h.coboundary_count;
  Json gens = Json::array();
  for (auto const& g : h.generators) gens.push_back(abelian_cocycle_to_json(g));
  o.results["generators"] = std::move(gens);
  o.check("|Z^2| = |H^2| * |B^2|", h.cocycle_count == h.order * h.coboundary_count);
  return o;
}

Outcome union_report(Json const& j) {
  Outcome o;
  UnionSpec spec = union_spec_from_json(j);
  try {
    Quandle q = union_quandle(spec);
    o.results["order"] = q.order();
    o.results["quandle"] = quandle_to_json(q);
    o.check("union spec gives a quandle", true);
  } catch (UnionConditionViolated const& e) {
    o.results["diagnostic"] = e.what();
    o.results["witness"] = {e.x, e.y, e.z};
    o.check("union spec gives a quandle", false);
  } catch (SigmaNotHom const& e) {
    o.results["diagnostic"] = e.what();
    o.check("union spec gives a quandle", false);
  } catch (TauNotHom const& e) {
    o.results["diagnostic"] = e.what();
    o.check("union spec gives a quandle", false);
  } catch (NotAutomorphism const& e) {
    o.results["diagnostic"] = e.what();
    o.check("union spec gives a quandle", false);
  }
  return o;
}

// ---- human-readable output -------------------------------------------------

bool is_flat(Json const& j) {
  if (!j.is_array()) return !j.is_object();
  for (auto const& e : j) {
    if (e.is_object()) return false;
    if (e.is_array()) {
      for (auto const& f : e) {
        if (f.is_object() || f.is_array()) return false;
      }
    }
  }
  return true;
}

void flatten(Json const& j, std::string const& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_flat(j)) {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    return;
  }
  if (j.is_object()) {
    for (auto const& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
    return;
  }
  std::size_t i = 0;
  for (auto const& v : j) flatten(v, path + "[" + std::to_string(i++) + "]", rows);
}

void print_pretty(Json const& report, std::ostream& out) {
  out << "command       " << report["command"].get<std::string>() << "\n";
  out << "input digest  " << report["input_digest"].get<std::string>() << "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report["results"], "", rows);
  std::size_t width = 0;
  for (auto const& [k, v] : rows) width = std::max(width, k.size());
  if (!rows.empty()) out << "\nresults\n";
  for (auto const& [k, v] : rows) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
  }
  if (!report["checks"].empty()) out << "\nchecks\n";
  for (auto const& c : report["checks"]) {
    out << "  " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
        << c["name"].get<std::string>() << "\n";
  }
  if (report.contains("timing_ms")) out << "\ntiming        " << report["timing_ms"] << " ms\n";
  out << "\n" << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation with finite quandles and groups", "quandlekit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false, timing = false;
  std::size_t cap_order = Caps{}.quandle_order, cap_group = Caps{}.group_order;
  app.add_flag("--pretty", pretty, "aligned tables instead of JSON");
  app.add_flag("--timing", timing, "add wall-clock time to the report");
  app.add_option("--cap-order", cap_order, "largest quandle for automorphism search and enumeration");
  app.add_option("--cap-group", cap_group, "largest finite group");

  std::vector<std::unique_ptr<SourceFlags>> sources;
  auto with_source = [&](char const* name, char const* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sources.push_back(std::make_unique<SourceFlags>());
    add_source(sub, *sources.back());
    return std::make_pair(sub, sources.back().get());
  };
  auto [build, build_src] = with_source("build", "build a quandle and print its table");
  auto [inv, inv_src] = with_source("invariants", "invariant report for a quandle");
  auto [aut_cmd, aut_src] = with_source("aut", "automorphism group");
  auto [inn_cmd, inn_src] = with_source("inn", "inner automorphism group");
  auto [qinn_cmd, qinn_src] = with_source("qinn", "quasi-inner automorphism group");
  auto [env, env_src] = with_source("envelope", "enveloping group presentation");
  auto [h2_cmd, h2_src] = with_source("h2", "second cohomology with abelian coefficients");

  bool abelian_mode = false;
  std::string subgens, coeff;
  std::size_t max_cosets = CosetOptions{}.max_cosets;
  auto* ab_opt = env->add_flag("--abelianization", abelian_mode, "Smith normal form of the relation matrix");
  auto* ce_opt = env->add_option("--coset-enum", subgens, "subgroup generators as signed words, e.g. [[1,1]]");
  env->add_option("--max-cosets", max_cosets, "live coset limit");
  h2_cmd->add_option("--coeff", coeff, "coefficient group, e.g. Z2 or Z2xZ4")->required();

  std::vector<std::string> iso_files;
  CLI::App* iso = app.add_subcommand("iso", "test two quandle files for isomorphism");
  iso->add_option("files", iso_files, "two quandle documents")->expected(2)->required();
  std::size_t enum_n = 0;
  CLI::App* en = app.add_subcommand("enumerate", "all quandles of order N up to isomorphism");
  en->add_option("N", enum_n)->required();
  std::string cocycle_file, union_file, theorem_id;
  CLI::App* ext = app.add_subcommand("extend", "extension of a quandle by a cocycle");
  ext->add_option("COCYCLEFILE", cocycle_file)->required();
  CLI::App* un = app.add_subcommand("union", "disjoint-union quandle from a spec");
  un->add_option("SPECFILE", union_file)->required();
  SuiteOptions suite;
  CLI::App* th = app.add_subcommand("theorem", "run a named verification suite ('list' for all)");
  th->add_option("ID", theorem_id)->required();
  th->add_option("--max-order", suite.max_order, "largest order a sweep visits");
  th->add_option("--seed", suite.seed, "seed for randomized suites");
  th->add_option("--samples", suite.samples, "sample count for randomized suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  auto const start = std::chrono::steady_clock::now();
  Context ctx;
  ctx.caps.quandle_order = cap_order;
  ctx.caps.group_order = cap_group;
  suite.caps = ctx.caps;
  std::string command;
  for (auto const& a : args) {
    if (a != "--pretty" && a != "--timing") ctx.digest.feed(a);
    command += (command.empty() ? "" : " ") + a;
  }

  Outcome o;
  try {
    if (build->parsed()) {
      Quandle q = load_quandle(*build_src, ctx);
      o.results["quandle"] = quandle_to_json(q);
      o.check("quandle axioms hold", true);
    } else if (inv->parsed()) {
      o = invariants(load_quandle(*inv_src, ctx), ctx.caps);
    } else if (aut_cmd->parsed()) {
      o.results["aut"] = group_report(aut(load_quandle(*aut_src, ctx), ctx.caps));
    } else if (inn_cmd->parsed()) {
      o.results["inn"] = group_report(inn(load_quandle(*inn_src, ctx), ctx.caps));
    } else if (qinn_cmd->parsed()) {
      o.results["qinn"] = group_report(qinn(load_quandle(*qinn_src, ctx), ctx.caps));
    } else if (iso->parsed()) {
      Quandle a = quandle_from_json(ctx.read_json(iso_files[0]));
      Quandle b = quandle_from_json(ctx.read_json(iso_files[1]));
      auto w = is_isomorphic(a, b, ctx.caps);
      o.results["isomorphic"] = w.has_value();
      o.results["witness"] = w ? Json(*w) : Json(nullptr);
    } else if (en->parsed()) {
      auto qs = enumerate_quandles(enum_n, ctx.caps);
      o.results["order"] = enum_n;
      o.results["count"] = qs.size();
      Json tables = Json::array();
      for (auto const& q : qs) tables.push_back(q.rows());
      o.results["quandles"] = std::move(tables);
    } else if (env->parsed()) {
      if ((ab_opt->count() > 0) == (ce_opt->count() > 0)) {
        throw UsageError("envelope needs exactly one of --abelianization and --coset-enum");
      }
      Presentation p;
      if (env_src->file_opt->count() > 0 && chosen(*env_src) == 1) {
        Json j = ctx.read_json(env_src->file);
        p = document_kind(j) == "presentation" ? presentation_from_json(j)
                                               : presentation_of(quandle_from_json(j));
      } else {
        p = presentation_of(load_quandle(*env_src, ctx));
      }
      o = envelope(p, abelian_mode, subgens, max_cosets);
    } else if (ext->parsed()) {
      o = extend_document(ctx.read_json(cocycle_file));
    } else if (h2_cmd->parsed()) {
      o = h2_report(load_quandle(*h2_src, ctx), coeff, ctx.caps);
    } else if (un->parsed()) {
      o = union_report(ctx.read_json(union_file));
    } else if (th->parsed()) {
      if (theorem_id == "list") {
        Json ids = Json::array();
        for (auto const& id : theorem_ids()) {
          ids.push_back({{"id", id}, {"title", theorem_title(id)}});
        }
        o.results["theorems"] = std::move(ids);
      } else {
        SuiteResult r = run_theorem(theorem_id, suite);
        o.results["id"] = r.id;
        o.results["title"] = r.title;
        o.results["options"] = {{"max_order", suite.max_order},
                                {"seed", suite.seed},
                                {"samples", suite.samples}};
        for (auto const& [k, v] : r.results.items()) o.results[k] = v;
        for (auto const& c : r.checks) o.check(c.name, c.pass);
      }
    }
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (Error const& e) {
    err << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  Json report;
  report["command"] = command;
  report["input_digest"] = ctx.digest.hex();
  report["results"] = std::move(o.results);
  Json checks = Json::array();
  bool pass = true;
  for (auto const& [name, ok] : o.checks) {
    checks.push_back({{"name", name}, {"pass", ok}});
    pass = pass && ok;
  }
  report["checks"] = std::move(checks);
  report["pass"] = pass;
  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    report["timing_ms"] = ms.count();
  }
  if (pretty) {
    print_pretty(report, out);
  } else {
    out << report.dump(2) << "\n";
  }
  return pass ? kPass : kFailedCheck;
}

}  // namespace quandlekit::cli
