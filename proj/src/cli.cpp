#include "gluing/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "gluing/cover.hpp"
#include "gluing/errors.hpp"
#include "gluing/glue.hpp"
#include "json.hpp"

namespace gluing {

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {
      "validate",        "glue",        "check-cone",  "check-glued", "mediate",
      "verify-universal", "check-otop", "check-refinement", "compose", "cover-check",
      "cover-functor",   "site-check",  "render-dot"};
  return c;
}

namespace {

std::string table_text(const SpaceMap& f) {
  std::string out;
  for (std::size_t x = 0; x < f.dom()->size(); ++x)
    out += (x ? ", " : "") + f.dom()->point(x) + "->" + f.cod()->point(f(x));
  return out;
}

std::string describe_space(const FiniteSpace& s) {
  std::string out = s.name() + ": " + std::to_string(s.size()) + " points\n";
  for (std::size_t x = 0; x < s.size(); ++x)
    out += "  min_open(" + s.point(x) + ") = " + s.describe(s.min_open(x)) + "\n";
  return out;
}

std::string describe_glued(const GluingFunctor& f, const GluedSpace& g) {
  std::string out = describe_space(*g.space);
  for (std::size_t q = 0; q < g.classes.size(); ++q) {
    out += "  class " + g.space->point(q) + " = {";
    for (std::size_t m = 0; m < g.classes[q].size(); ++m) out += (m ? "," : "") + g.classes[q][m];
    out += "}\n";
  }
  for (int i = 0; i < static_cast<int>(f.data().n()); ++i)
    out += "  iota_" + f.index().name(i) + ": " + table_text(g.leg(GlObject::single(i))) + "\n";
  return out;
}

const GluingData& gluing_of(const SpecDocument& doc, const std::string& name) {
  auto it = doc.gluings.find(name);
  if (it == doc.gluings.end()) throw UnresolvedReference(name, "gluings");
  return it->second;
}

const Covering& covering_of(const SpecDocument& doc, const std::string& name) {
  auto it = doc.coverings.find(name);
  if (it == doc.coverings.end()) throw UnresolvedReference(name, "coverings");
  return it->second;
}

void need_target(const RunArgs& args, const std::string& command) {
  if (args.target.empty()) throw InputError(command + " needs a target name");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string q(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

using Handler = std::function<void(const SpecDocument&, const RunArgs&, RunReport&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"validate",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         if (args.target.empty()) {
           for (const auto& [name, gd] : doc.gluings) out.reports.push_back(validate(gd));
         } else {
           out.reports.push_back(validate(gluing_of(doc, args.target)));
         }
       }},
      {"glue",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "glue");
         FunctorPtr f = doc.functor(args.target);
         GluedSpace g = glue(*f);
         Report r = check_equivalence(g.relation);
         r.title = "overlap relation of " + args.target;
         out.reports.push_back(r);
         out.objects.push_back(describe_glued(*f, g));
       }},
      {"check-cone",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "check-cone");
         auto it = doc.cones.find(args.target);
         if (it == doc.cones.end()) throw UnresolvedReference(args.target, "cones");
         const ConeDecl& d = it->second;
         FunctorPtr f = doc.functor(d.gluing);
         Cone c = doc.cone(args.target);
         std::vector<ConeMode> modes = {ConeMode::full, ConeMode::figure3, ConeMode::figure4};
         if (args.mode) {
           auto m = parse_cone_mode(*args.mode);
           if (!m) throw InputError("unknown cone mode '" + *args.mode + "'");
           modes = {*m};
         }
         Report r;
         r.title = "cone " + args.target + " over " + d.gluing;
         for (ConeMode m : modes) {
           std::string w;
           r.record(std::string("cone condition (") + to_string(m) + ")", check_cone(*f, c, m, &w), w);
         }
         out.reports.push_back(r);
       }},
      {"check-glued",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "check-glued");
         FunctorPtr f = doc.functor(args.target);
         GluedSpace g = glue(*f);
         out.reports.push_back(check_glued_properties(*f, g));
         out.objects.push_back(describe_glued(*f, g));
       }},
      {"mediate",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "mediate");
         auto it = doc.cones.find(args.target);
         if (it == doc.cones.end()) throw UnresolvedReference(args.target, "cones");
         FunctorPtr f = doc.functor(it->second.gluing);
         GluedSpace g = glue(*f);
         SpaceMap mu = mediate(*f, g, doc.cone(args.target));
         Report r;
         r.title = "mediating map for cone " + args.target;
         r.record("mediator exists and is continuous", true);
         out.reports.push_back(r);
         out.objects.push_back("mu: " + g.space->name() + " -> " + mu.cod()->name() + "\n  " +
                               table_text(mu) + "\n");
       }},
      {"verify-universal",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "verify-universal");
         FunctorPtr f = doc.functor(args.target);
         GluedSpace g = glue(*f);
         UniversalOptions opts;
         opts.budget = SearchBudget{args.budget, args.budget * 5};
         out.reports.push_back(verify_universal(*f, g, opts));
       }},
      {"check-otop",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "check-otop");
         FunctorPtr f = doc.functor(args.target);
         out.reports.push_back(check_otop(*f, glue(*f)));
       }},
      {"check-refinement",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "check-refinement");
         out.reports.push_back(check_refinement(doc.refinement(args.target)));
       }},
      {"compose",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "compose");
         ComposedGluing c = compose_gdf(doc.meta(args.target));
         out.reports.push_back(c.report);
         GluedSpace g = glue(*c.functor);
         out.objects.push_back(describe_glued(*c.functor, g));
       }},
      {"cover-check",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "cover-check");
         Covering c = covering_of(doc, args.target);
         if (args.kind) {
           auto k = parse_cover_kind(*args.kind);
           if (!k) throw InputError("kind must be 'gluing' or 'open'");
           c.kind = *k;
         }
         out.reports.push_back(check_covering(c));
       }},
      {"cover-functor",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "cover-functor");
         CoveringGluing cg = functor_of_covering(covering_of(doc, args.target));
         out.reports.push_back(cg.report);
         std::string obj = describe_space(*cg.glued.space);
         if (cg.comparison) obj += "  mu: " + table_text(*cg.comparison) + "\n";
         out.objects.push_back(obj);
       }},
      {"site-check",
       [](const SpecDocument&, const RunArgs& args, RunReport& out) {
         out.reports.push_back(run_site_batch(args.seed, args.count).report);
       }},
      {"render-dot",
       [](const SpecDocument& doc, const RunArgs& args, RunReport& out) {
         need_target(args, "render-dot");
         out.objects.push_back(render_dot(doc, args.target));
       }},
  };
  return h;
}

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["title"] = r.title;
  j["applicable"] = r.applicable;
  j["ok"] = r.ok();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
  j["checks"] = checks;
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string RunReport::human() const {
  if (command == "render-dot" && exit_code == kPass && !objects.empty()) return objects.front();
  std::string out = "[" + command + (target.empty() ? "" : " " + target) + "]\n";
  for (const auto& r : reports) out += r.render();
  for (const auto& o : objects) out += o;
  if (!error.empty()) out += "error: " + error + "\n";
  out += std::string("result: ") + (exit_code == kPass ? "pass" : "FAIL") + " (exit " +
         std::to_string(exit_code) + ")\n";
  return out;
}

std::string RunReport::machine() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["target"] = target;
  j["exit"] = exit_code;
  j["ok"] = exit_code == kPass;
  if (!error.empty()) j["error"] = error;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const auto& r : reports) rs.push_back(report_json(r));
  j["reports"] = rs;
  j["objects"] = objects;
  return j.dump(2) + "\n";
}

RunReport run(const SpecDocument& doc, const std::string& command, const RunArgs& args) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw UnknownCommand("UnknownCommand(" + command + ")");
  RunReport out;
  out.command = command;
  out.target = args.target;
  try {
    it->second(doc, args, out);
    for (const auto& r : out.reports)
      if (!r.ok()) out.exit_code = kCheckFailure;
  } catch (const ValidationFailed& e) {
    out.reports.push_back(e.report);
    out.error = "ValidationFailed";
    out.exit_code = kCheckFailure;
  } catch (const CheckFailure& e) {
    out.error = e.what();
    out.exit_code = kCheckFailure;
  } catch (const SearchBudgetExceeded& e) {
    out.error = e.what();
    out.exit_code = kBudgetExceeded;
  } catch (const Error& e) {
    out.error = e.what();
    out.exit_code = kInputError;
  }
  return out;
}

std::string render_dot(const SpecDocument& doc, const std::string& target) {
  std::ostringstream out;
  auto objects = [&](const IndexSet& idx, const std::function<std::string(const GlObject&)>& label) {
    const GlCategory cat(idx.size());
    for (const auto& a : cat.objects())
      out << "  " << q(a.str(idx)) << " [label=" << q(label(a)) << "];\n";
  };
  if (target.rfind("index:", 0) == 0) {
    std::vector<std::string> names;
    std::istringstream in(target.substr(6));
    for (std::string s; std::getline(in, s, ',');) names.push_back(s);
    IndexSet idx;
    try {
      idx = IndexSet(names);
    } catch (const InputError& e) {
      throw UnknownTarget("UnknownTarget(" + target + "): " + e.what());
    }
    out << "digraph " << q("Gl(" + target.substr(6) + ")") << " {\n  rankdir=LR;\n";
    objects(idx, [&](const GlObject& a) { return a.str(idx); });
    for (const auto& g : generators(idx.size()))
      if (!g.is_identity())
        out << "  " << q(g.dom().str(idx)) << " -> " << q(g.cod().str(idx))
            << " [label=" << q(g.label(idx)) << "];\n";
    out << "}\n";
    return out.str();
  }
  if (auto it = doc.gluings.find(target); it != doc.gluings.end()) {
    const GluingData& gd = it->second;
    const IndexSet& idx = gd.index;
    const GlCategory cat(idx.size());
    out << "digraph " << q(target) << " {\n  rankdir=LR;\n";
    objects(idx, [&](const GlObject& a) { return a.str(idx) + "\n" + object_space(gd, a)->name(); });
    // Images run against the generators: F(b) -> F(a) for a -> b.
    for (const auto& g : cat.edges())
      out << "  " << q(g.cod().str(idx)) << " -> " << q(g.dom().str(idx))
          << " [label=" << q(g.label(idx)) << "];\n";
    try {
      FunctorPtr f = doc.functor(target);
      GluedSpace glued = glue(*f);
      out << "  " << q("Q") << " [shape=box, label=" << q(glued.space->name()) << "];\n";
      for (int i = 0; i < static_cast<int>(gd.n()); ++i)
        out << "  " << q(GlObject::single(i).str(idx)) << " -> " << q("Q")
            << " [style=dashed, label=" << q("iota_" + idx.name(i)) << "];\n";
    } catch (const Error&) {
      out << "  // data does not glue; no glued node\n";
    }
    out << "}\n";
    return out.str();
  }
  if (auto it = doc.metas.find(target); it != doc.metas.end()) {
    const MetaDecl& m = it->second;
    const IndexSet& idx = m.index;
    out << "digraph " << q(target) << " {\n  rankdir=LR;\n";
    objects(idx, [&](const GlObject& a) {
      auto n = m.nodes.find(a);
      return a.str(idx) + "\n" + (n == m.nodes.end() ? std::string("?") : n->second);
    });
    for (const auto& [ends, r] : m.edges)
      out << "  " << q(ends.second.str(idx)) << " -> " << q(ends.first.str(idx))
          << " [label=" << q(r) << "];\n";
    out << "}\n";
    return out.str();
  }
  throw UnknownTarget("UnknownTarget(" + target + ")");
}

RunReport run_text(const std::string& text, const std::string& command, const RunArgs& args,
                   bool derive_triples) {
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    throw UnknownCommand("UnknownCommand(" + command + ")");
  SpecDocument doc;
  try {
    doc = parse_spec(text, ParseOptions{derive_triples});
  } catch (const CheckFailure& e) {
    RunReport out{command, args.target, kCheckFailure, {}, {}, e.what()};
    return out;
  } catch (const Error& e) {
    RunReport out{command, args.target, kInputError, {}, {}, e.what()};
    return out;
  }
  return run(doc, command, args);
}

}  // namespace gluing
