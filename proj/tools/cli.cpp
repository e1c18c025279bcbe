#include "cli.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forge/errors.hpp"
#include "forge/gelfand.hpp"
#include "forge/group.hpp"
#include "forge/hecke.hpp"
#include "forge/orbit_cache.hpp"
#include "forge/tree.hpp"

namespace forge::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Json, Csv, Markdown };

struct RunConfig {
  std::string group_file;
  int radius = 4;
  int budget = -1;
  std::string cache_dir;
  std::string format = "json";

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "md") return Format::Markdown;
    return Format::Json;
  }
};

struct DynamicsSpec {
  int degree = 3;
  std::string base;
  std::vector<std::string> exceptions;
  std::string end;
  int n_max = 8;
  std::string completion = "transposition";
};

void add_common(CLI::App* sub, RunConfig& cfg, bool group_required) {
  auto* g = sub->add_option("--group", cfg.group_file, "LocalGroup document (JSON)");
  if (group_required) g->required();
  sub->add_option("--radius", cfg.radius, "radius / depth R")->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", cfg.budget, "search budget");
  sub->add_option("--cache", cfg.cache_dir, "orbit cache directory (default $BUILDING_FORGE_CACHE)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
}

std::optional<std::filesystem::path> cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
  if (const char* env = std::getenv("BUILDING_FORGE_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

const char* source_name(CacheLookup::Source s) {
  switch (s) {
    case CacheLookup::Source::Hit: return "hit";
    case CacheLookup::Source::Computed: return "computed";
    case CacheLookup::Source::Recomputed: return "recomputed";
  }
  return "?";
}

CacheLookup orbit_table_for(const LocalGroup& F, int radius, const RunConfig& cfg, std::ostream& err) {
  CacheLookup look = load_or_build_orbit_table(F, radius, cache_dir(cfg));
  if (!look.note.empty()) err << "warning: cache entry rejected (" << look.note << "); recomputed\n";
  return look;
}

int cmd_orbits(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const LocalGroup F = LocalGroup::load(cfg.group_file);
  const CacheLookup look = orbit_table_for(F, cfg.radius, cfg, err);
  const OrbitTable& t = look.table;
  switch (cfg.fmt()) {
    case Format::Json: {
      ojson doc;
      doc["degree"] = t.degree();
      doc["generator_hash"] = t.generator_hash();
      doc["certified_depth"] = t.radius();
      doc["counts"] = t.counts();
      doc["spheres"] = ojson::array();
      for (int n = 0; n <= t.radius(); ++n) {
        ojson s;
        s["n"] = n;
        s["classes"] = ojson::array();
        for (const auto& c : t.sphere(n)) s["classes"].push_back({{"representative", to_string(c.representative)}, {"size", c.size}});
        doc["spheres"].push_back(s);
      }
      doc["cache"] = source_name(look.source);
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "n,representative,size\n";
      for (const auto& c : t.classes()) out << c.representative.size() << "," << to_string(c.representative) << "," << c.size << "\n";
      break;
    case Format::Markdown: {
      out << "Orbit counts, certified to depth " << t.radius() << "\n\n| n | orbits | representatives |\n|---|---|---|\n";
      const auto counts = t.counts();
      for (int n = 0; n <= t.radius(); ++n) {
        out << "| " << n << " | " << counts[static_cast<std::size_t>(n)] << " | ";
        bool first = true;
        for (const auto& c : t.sphere(n)) {
          out << (first ? "" : ", ") << "`" << (c.representative.empty() ? "x0" : to_string(c.representative)) << "`";
          first = false;
        }
        out << " |\n";
      }
      break;
    }
  }
  return 0;
}

int cmd_hecke(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const LocalGroup F = LocalGroup::load(cfg.group_file);
  orbit_table_for(F, cfg.radius, cfg, err);  // keeps the cache warm; the tensor recomputes its own classes
  const StructureConstants sc = intersection_numbers(F, cfg.radius);
  const CommutativityReport rep = commutativity_report(sc);
  auto verdict_text = [&] {
    std::ostringstream s;
    if (rep.commutative)
      s << "commutative up to radius " << rep.radius;
    else
      s << "noncommutative: N(" << rep.i << "," << rep.j << "," << rep.k << ") = " << rep.n_ij << " but N(" << rep.j << ","
        << rep.i << "," << rep.k << ") = " << rep.n_ji << " (radius " << rep.radius << ")";
    return s.str();
  };
  switch (cfg.fmt()) {
    case Format::Json: {
      ojson doc;
      doc["certified_depth"] = sc.radius_budget();
      doc["orbits"] = ojson::array();
      for (const auto& o : sc.orbits())
        doc["orbits"].push_back({{"id", o.id}, {"representative", to_string(o.representative)}, {"valency", o.valency},
                                 {"distance", o.distance}});
      doc["entries"] = ojson::array();
      for (const auto& [key, n] : sc.entries()) doc["entries"].push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"N", n}});
      ojson v;
      v["commutative"] = rep.commutative;
      if (!rep.commutative) v["asymmetry"] = {{"i", rep.i}, {"j", rep.j}, {"k", rep.k}, {"N_ijk", rep.n_ij}, {"N_jik", rep.n_ji}};
      doc["verdict"] = v;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "i,j,k,N\n";
      for (const auto& [key, n] : sc.entries()) out << key[0] << "," << key[1] << "," << key[2] << "," << n << "\n";
      err << verdict_text() << "\n";
      break;
    case Format::Markdown: {
      const int n = static_cast<int>(sc.orbits().size());
      out << "Orbit algebra, certified to radius " << sc.radius_budget() << ". Entry (i, j) is O_i * O_j.\n\n";
      out << "| i \\ j |";
      for (int j = 0; j < n; ++j) out << " " << j << " |";
      out << "\n|---|";
      for (int j = 0; j < n; ++j) out << "---|";
      out << "\n";
      for (int i = 0; i < n; ++i) {
        out << "| " << i << (!rep.commutative && (i == rep.i || i == rep.j) ? " (asymmetric)" : "") << " |";
        for (int j = 0; j < n; ++j) {
          out << " ";
          if (!sc.in_budget(i, j, 0)) {
            out << "- |";
            continue;
          }
          bool first = true;
          for (auto it = sc.entries().lower_bound({i, j, 0}); it != sc.entries().end() && it->first[0] == i && it->first[1] == j; ++it) {
            out << (first ? "" : " + ") << it->second << "·O" << it->first[2];
            first = false;
          }
          if (first) out << "0";
          out << " |";
        }
        out << "\n";
      }
      out << "\n" << verdict_text() << "\n";
      break;
    }
  }
  return 0;
}

int cmd_gelfand(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const LocalGroup F = LocalGroup::load(cfg.group_file);
  const Verdict v = main_theorem_report(F, cfg.radius);
  if (cfg.fmt() == Format::Json) {
    out << verdict_to_json(v) << "\n";
  } else {
    const bool md = cfg.fmt() == Format::Markdown;
    auto row = [&](const std::string& k, const std::string& val) {
      if (md)
        out << "| " << k << " | " << val << " |\n";
      else
        out << k << "," << val << "\n";
    };
    if (md) out << "| field | value |\n|---|---|\n";
    else out << "field,value\n";
    row("group", F.hash());
    row("depth", std::to_string(v.depth));
    row("st_boundary", v.st.st_boundary ? "true" : "false");
    std::string counts;
    for (auto c : v.st.growth.counts) counts += (counts.empty() ? "" : " ") + std::to_string(c);
    row("orbit_counts", counts);
    row("orbit_trend", trend_name(v.st.growth.trend));
    row("hecke", v.hecke.commutative ? "commutative" : "noncommutative");
    row("witness", v.witness.witness ? "m=" + std::to_string(v.witness.witness->m) + " n=" + std::to_string(v.witness.witness->n)
                                     : "none");
    row("consistent", v.consistent ? "true" : "false");
  }
  return v.consistent ? 0 : 1;
}

int cmd_dynamics(const RunConfig& cfg, const DynamicsSpec& spec, std::ostream& out, std::ostream&) {
  std::optional<LocalGroup> F;
  int degree = spec.degree;
  if (!cfg.group_file.empty()) {
    F.emplace(LocalGroup::load(cfg.group_file));
    degree = F->degree();
  }
  if (spec.completion == "group" && !F) throw InputError("--completion group needs --group");
  std::map<Word, Perm> exceptions;
  for (const auto& e : spec.exceptions) {
    const auto colon = e.find(':');
    if (colon == std::string::npos) throw InputError("--exception expects WORD:PERM, got \"" + e + "\"");
    exceptions[parse_word(e.substr(0, colon), degree)] = Perm::parse(e.substr(colon + 1), degree);
  }
  const CompletionRule rule = spec.completion == "group" ? F->completion() : CompletionRule::transposition(degree);
  const Portrait a = Portrait::basic(degree, parse_word(spec.base, degree), exceptions, rule);
  const std::size_t radius = std::max<std::size_t>(static_cast<std::size_t>(cfg.radius), a.base_image().size() + 2);
  if (F && !check_legal(a, *F, radius)) throw IllegalPortrait("automorphism leaves U(F) within radius " + std::to_string(radius));
  const IsometryClass cls = classify_isometry(a, radius);
  if (!cls.hyperbolic()) throw NotHyperbolic(std::string("automorphism is ") + kind_name(cls.kind));

  TreeEnd xi;
  if (spec.end.empty()) {
    for (const auto& e : enumerate_ends(degree, 0, 2))
      if (e != cls.axis->end_minus() && e != cls.axis->end_plus()) {
        xi = e;
        break;
      }
  } else {
    xi = TreeEnd::parse(spec.end, degree);
  }
  if (xi == cls.axis->end_minus()) throw RepellingFixedEnd(xi.str() + " is the repelling end of the axis");

  struct Row {
    long n;
    TreeEnd image;
    std::size_t agreement;
    std::size_t axis_overlap;
  };
  std::vector<Row> rows;
  for (long n = 0; n <= spec.n_max; ++n) {
    TreeEnd img = iterate_on_end(a, cls, xi, n);
    rows.push_back({n, img, agreement_depth(img, cls.axis->end_plus()), segment_through_apartment(a, cls, Word{}, Word{}, n)});
  }
  switch (cfg.fmt()) {
    case Format::Json: {
      ojson doc;
      doc["certified_depth"] = cls.certified_radius;
      doc["translation_length"] = cls.length;
      doc["eta_plus"] = cls.axis->end_plus().str();
      doc["eta_minus"] = cls.axis->end_minus().str();
      doc["xi"] = xi.str();
      doc["rows"] = ojson::array();
      for (const auto& r : rows)
        doc["rows"].push_back({{"n", r.n}, {"image", r.image.str()}, {"agreement_with_eta_plus", r.agreement}, {"axis_overlap_x0", r.axis_overlap}});
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "n,image,agreement_with_eta_plus,axis_overlap_x0\n";
      for (const auto& r : rows) out << r.n << "," << r.image.str() << "," << r.agreement << "," << r.axis_overlap << "\n";
      break;
    case Format::Markdown:
      out << "Hyperbolic, length " << cls.length << ", axis " << cls.axis->end_minus().str() << " -> " << cls.axis->end_plus().str()
          << " (certified to radius " << cls.certified_radius << ")\n\n| n | a^n(xi) | agreement with eta+ | [x0, a^n x0] ∩ axis |\n|---|---|---|---|\n";
      for (const auto& r : rows) out << "| " << r.n << " | `" << r.image.str() << "` | " << r.agreement << " | " << r.axis_overlap << " |\n";
      break;
  }
  return 0;
}

int cmd_find_sr(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const LocalGroup F = LocalGroup::load(cfg.group_file);
  const CacheLookup look = orbit_table_for(F, std::max(cfg.radius, 2), cfg, err);
  const OrbitTable& table = look.table;
  const std::size_t alphabet = table.sphere(2).size();
  const std::size_t budget = cfg.budget >= 0 ? static_cast<std::size_t>(cfg.budget) : 2 * alphabet + 2;
  const TreeApartment line = standard_apartment();
  auto labels = [&](long p) -> std::int64_t {
    const Word prev = line.vertex_at(p - 1), here = line.vertex_at(p), next = line.vertex_at(p + 1);
    return table.class_id(canonical_word(F, Word{edge_color(prev, here), edge_color(here, next)}));
  };
  auto move = [&](long from, long to) {
    return transporter(F, {line.vertex_at(from - 1), line.vertex_at(from), line.vertex_at(from + 1)},
                       {line.vertex_at(to - 1), line.vertex_at(to), line.vertex_at(to + 1)});
  };
  const PigeonholeResult res = pigeonhole_find_hyperbolic(line, labels, move, budget, 0, 2);
  const IsometryClass full = classify_isometry(res.element, res.element.base_image().size() + 2);
  switch (cfg.fmt()) {
    case Format::Json: {
      ojson doc;
      doc["certified_depth"] = full.certified_radius;
      doc["label_alphabet"] = alphabet;
      doc["budget"] = budget;
      doc["positions"] = {res.first_position, res.second_position};
      doc["translation_length"] = res.cls.length;
      doc["classify_length"] = full.length;
      doc["base_image"] = to_string(res.element.base_image());
      doc["portrait"] = res.element.describe();
      doc["axis"] = {{"minus", res.cls.axis->end_minus().str()}, {"plus", res.cls.axis->end_plus().str()}};
      doc["axis_prefix"] = to_string(res.cls.axis->end_plus().truncate(12));
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "field,value\n";
      out << "translation_length," << res.cls.length << "\nclassify_length," << full.length << "\nbase_image,"
          << to_string(res.element.base_image()) << "\naxis_plus," << res.cls.axis->end_plus().str() << "\naxis_minus,"
          << res.cls.axis->end_minus().str() << "\n";
      break;
    case Format::Markdown:
      out << "| field | value |\n|---|---|\n| translation length | " << res.cls.length << " |\n| classify length | " << full.length
          << " |\n| base image | `" << to_string(res.element.base_image()) << "` |\n| portrait | `" << res.element.describe()
          << "` |\n| axis | `" << res.cls.axis->end_minus().str() << "` -> `" << res.cls.axis->end_plus().str() << "` |\n";
      break;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"building-forge: orbit algebras and dynamics for universal groups of colored trees"};
  app.require_subcommand(1);
  RunConfig cfg;
  DynamicsSpec dyn;

  auto* orbits = app.add_subcommand("orbits", "K-orbit counts and representatives per sphere");
  add_common(orbits, cfg, true);
  auto* hecke = app.add_subcommand("hecke", "intersection numbers and commutativity of the orbit algebra");
  add_common(hecke, cfg, true);
  auto* gelfand = app.add_subcommand("gelfand", "three-way strong transitivity / Gelfand pair report");
  add_common(gelfand, cfg, true);
  auto* dynamics = app.add_subcommand("dynamics", "iterate a hyperbolic portrait on an end");
  add_common(dynamics, cfg, false);
  dynamics->add_option("--degree", dyn.degree, "q + 1 when no group is given")->check(CLI::Range(3, 10));
  dynamics->add_option("--base", dyn.base, "image of x0 as a color word")->required();
  dynamics->add_option("--exception", dyn.exceptions, "WORD:PERM local permutation override (repeatable)");
  dynamics->add_option("--end", dyn.end, "end xi as PREFIX/PERIOD");
  dynamics->add_option("--n-max", dyn.n_max, "largest power")->check(CLI::NonNegativeNumber);
  dynamics->add_option("--completion", dyn.completion, "default local rule")->check(CLI::IsMember({"transposition", "group"}));
  auto* find_sr = app.add_subcommand("find-sr", "pigeonhole search for a strongly regular hyperbolic element");
  add_common(find_sr, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*orbits) return cmd_orbits(cfg, out, err);
    if (*hecke) return cmd_hecke(cfg, out, err);
    if (*gelfand) return cmd_gelfand(cfg, out, err);
    if (*dynamics) return cmd_dynamics(cfg, dyn, out, err);
    if (*find_sr) return cmd_find_sr(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace forge::cli
