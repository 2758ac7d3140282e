#include "gluing/spec_io.hpp"

#include <set>
#include <sstream>

#include "gluing/errors.hpp"
#include "json.hpp"

namespace gluing {

using nlohmann::ordered_json;
using json = nlohmann::json;

std::string object_key(const GlObject& a, const IndexSet& idx) {
  std::string out;
  for (int x : a.tuple()) out += (out.empty() ? "" : ",") + idx.name(x);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<int> parse_tuple(const std::string& key, const IndexSet& idx, const std::string& at) {
  std::vector<int> t;
  for (const auto& part : split(key, ',')) {
    try {
      t.push_back(idx.index_of(part));
    } catch (const InputError&) {
      throw UnresolvedReference(part, at);
    }
  }
  return t;
}

GlObject parse_object(const std::string& key, const IndexSet& idx, const std::string& at) {
  try {
    return normalize(parse_tuple(key, idx, at));
  } catch (const BadArity& e) {
    throw ParseError(at, e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& at) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(at, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const std::string& at) {
  if (!j.is_string()) throw ParseError(at, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> str_list(const json& j, const std::string& at) {
  if (!j.is_array()) throw ParseError(at, "expected a list of names");
  std::vector<std::string> out;
  for (std::size_t n = 0; n < j.size(); ++n) out.push_back(str(j[n], at + "/" + std::to_string(n)));
  return out;
}

void expect_object(const json& j, const std::string& at) {
  if (!j.is_object()) throw ParseError(at, "expected an object");
}

// Duplicate keys are rejected while parsing; the json library would keep the
// last one silently.
json parse_json(const std::string& text) {
  std::vector<std::set<std::string>> seen;
  std::vector<std::string> path;
  auto cb = [&](int depth, json::parse_event_t ev, json& parsed) {
    switch (ev) {
      case json::parse_event_t::object_start:
        seen.emplace_back();
        path.resize(static_cast<std::size_t>(depth));
        break;
      case json::parse_event_t::object_end:
        seen.pop_back();
        break;
      case json::parse_event_t::key: {
        const std::string k = parsed.get<std::string>();
        path.resize(static_cast<std::size_t>(depth) - 1);
        std::string where;
        for (const auto& p : path) where += (where.empty() ? "" : "/") + p;
        if (!seen.back().insert(k).second) throw DuplicateName(k, where.empty() ? "top level" : where);
        path.push_back(k);
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t n = 0; n + 1 < e.byte && n < text.size(); ++n) {
      if (text[n] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto colon = msg.find("; ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError(std::to_string(line) + ":" + std::to_string(col), msg);
  }
}

class Reader {
 public:
  Reader(SpecDocument& doc, const ParseOptions& opts) : doc_(doc), opts_(opts) {}

  void read(const json& root) {
    expect_object(root, "top level");
    static const std::set<std::string> sections = {"spaces", "maps", "gluings", "cones",
                                                   "refinements", "meta_gluings", "coverings"};
    for (const auto& [k, v] : root.items())
      if (!sections.count(k)) throw ParseError(k, "unknown section '" + k + "'");
    auto each = [&](const char* section, auto&& fn) {
      if (!root.contains(section)) return;
      const json& s = root.at(section);
      expect_object(s, section);
      for (const auto& [name, body] : s.items()) {
        const std::string at = std::string(section) + "/" + name;
        if (!names_.insert(name).second) throw DuplicateName(name, at);
        fn(name, body, at);
      }
    };
    each("spaces", [&](const auto& n, const auto& b, const auto& at) { space(n, b, at); });
    each("maps", [&](const auto& n, const auto& b, const auto& at) { map(n, b, at); });
    each("gluings", [&](const auto& n, const auto& b, const auto& at) { gluing(n, b, at); });
    each("cones", [&](const auto& n, const auto& b, const auto& at) { cone(n, b, at); });
    each("refinements", [&](const auto& n, const auto& b, const auto& at) { refinement(n, b, at); });
    each("meta_gluings", [&](const auto& n, const auto& b, const auto& at) { meta(n, b, at); });
    each("coverings", [&](const auto& n, const auto& b, const auto& at) { covering(n, b, at); });
  }

 private:
  template <class T>
  const T& lookup(const std::map<std::string, T>& m, const json& ref, const std::string& at) {
    const std::string name = str(ref, at);
    auto it = m.find(name);
    if (it == m.end()) throw UnresolvedReference(name, at);
    return it->second;
  }

  void space(const std::string& name, const json& b, const std::string& at) {
    expect_object(b, at);
    std::vector<std::string> points = str_list(member(b, "points", at), at + "/points");
    try {
      if (b.contains("min_open")) {
        const json& mo = b.at("min_open");
        expect_object(mo, at + "/min_open");
        std::map<std::string, std::vector<std::string>> table;
        for (const auto& [p, members] : mo.items())
          table[p] = str_list(members, at + "/min_open/" + p);
        for (const auto& p : points)
          if (!table.count(p)) throw ParseError(at + "/min_open", "no minimal open for point " + p);
        doc_.spaces[name] = share(FiniteSpace::make(name, points, table));
      } else if (b.contains("opens")) {
        const json& os = b.at("opens");
        if (!os.is_array()) throw ParseError(at + "/opens", "expected a list of subsets");
        std::vector<std::vector<std::string>> opens;
        for (std::size_t n = 0; n < os.size(); ++n)
          opens.push_back(str_list(os[n], at + "/opens/" + std::to_string(n)));
        doc_.spaces[name] = share(FiniteSpace::from_opens(name, points, opens));
      } else {
        throw ParseError(at, "a space needs 'min_open' or 'opens'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(at, e.what());
    }
  }

  SpaceMap table(const json& t, const SpacePtr& dom, const SpacePtr& cod, const std::string& at) {
    expect_object(t, at);
    std::map<std::string, std::string> m;
    for (const auto& [x, y] : t.items()) m[x] = str(y, at + "/" + x);
    try {
      return SpaceMap::from_names(dom, cod, m);
    } catch (const InputError& e) {
      throw ParseError(at, e.what());
    }
  }

  // A named map or an inline table between known spaces.
  SpaceMap map_ref(const json& v, const SpacePtr& dom, const SpacePtr& cod, const std::string& at) {
    if (!v.is_string()) return table(v, dom, cod, at);
    const SpaceMap& m = lookup(doc_.maps, v, at);
    try {
      return retarget(m, dom, cod, "map '" + v.get<std::string>() + "'");
    } catch (const InputError& e) {
      throw ParseError(at, e.what());
    }
  }

  void map(const std::string& name, const json& b, const std::string& at) {
    SpacePtr dom = lookup(doc_.spaces, member(b, "dom", at), at + "/dom");
    SpacePtr cod = lookup(doc_.spaces, member(b, "cod", at), at + "/cod");
    doc_.maps[name] = table(member(b, "table", at), dom, cod, at + "/table");
  }

  void gluing(const std::string& name, const json& b, const std::string& at) {
    IndexSet idx;
    try {
      idx = IndexSet(str_list(member(b, "index", at), at + "/index"));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(at + "/index", e.what());
    }
    const int n = static_cast<int>(idx.size());
    std::vector<SpacePtr> patches(idx.size());
    const json& pj = member(b, "patches", at);
    expect_object(pj, at + "/patches");
    for (int i = 0; i < n; ++i) {
      const std::string key = idx.name(i);
      if (!pj.contains(key)) throw ParseError(at + "/patches", "no patch for index " + key);
      patches[static_cast<std::size_t>(i)] = lookup(doc_.spaces, pj.at(key), at + "/patches/" + key);
    }
    std::map<std::pair<int, int>, SpacePtr> overlaps;
    std::map<std::pair<int, int>, SpaceMap> anchors, transitions;
    const json& oj = member(b, "overlaps", at);
    const json& aj = member(b, "anchors", at);
    const json& tj = member(b, "transitions", at);
    for (const auto* sec : {&oj, &aj, &tj}) expect_object(*sec, at);
    auto pair_of = [&](const std::string& key, const std::string& where) {
      auto t = parse_tuple(key, idx, where);
      if (t.size() != 2) throw ParseError(where, "expected a pair key like \"1,2\"");
      return std::make_pair(t[0], t[1]);
    };
    for (const auto& [key, v] : oj.items()) {
      const std::string w = at + "/overlaps/" + key;
      overlaps[pair_of(key, w)] = lookup(doc_.spaces, v, w);
    }
    auto overlap = [&](std::pair<int, int> ij, const std::string& w) -> SpacePtr {
      if (ij.first == ij.second) return patches[static_cast<std::size_t>(ij.first)];
      auto it = overlaps.find(ij);
      if (it == overlaps.end())
        throw ParseError(w, "no overlap declared for (" + idx.name(ij.first) + "," +
                                idx.name(ij.second) + ")");
      return it->second;
    };
    for (const auto& [key, v] : aj.items()) {
      const std::string w = at + "/anchors/" + key;
      auto ij = pair_of(key, w);
      anchors.emplace(ij, map_ref(v, overlap(ij, w), patches[static_cast<std::size_t>(ij.first)], w));
    }
    for (const auto& [key, v] : tj.items()) {
      const std::string w = at + "/transitions/" + key;
      auto ij = pair_of(key, w);
      transitions.emplace(ij, map_ref(v, overlap(ij, w), overlap({ij.second, ij.first}, w), w));
    }
    GluingData gd;
    try {
      gd = make_gluing_data(name, idx, patches, overlaps, anchors, transitions);
    } catch (const InputError& e) {
      throw ParseError(at, e.what());
    }
    bool derive = opts_.derive_triples;
    if (b.contains("derive_triples")) {
      if (!b.at("derive_triples").is_boolean())
        throw ParseError(at + "/derive_triples", "expected true or false");
      derive = derive || b.at("derive_triples").get<bool>();
    }
    if (derive) gd = derive_triple_maps(std::move(gd), false);
    if (b.contains("triple_transitions")) {
      const json& xj = b.at("triple_transitions");
      expect_object(xj, at + "/triple_transitions");
      for (const auto& [key, v] : xj.items()) {
        const std::string w = at + "/triple_transitions/" + key;
        auto t = parse_tuple(key, idx, w);
        if (t.size() != 3) throw ParseError(w, "expected a triple key like \"1,2,3\"");
        SpaceMap m = table(v, gd.triple(t[0], t[1], t[2]).space, gd.triple(t[1], t[0], t[2]).space, w);
        gd.set_triple_transition(t[0], t[1], t[2], std::move(m));
      }
    }
    doc_.gluings.emplace(name, std::move(gd));
  }

  void cone(const std::string& name, const json& b, const std::string& at) {
    ConeDecl c;
    c.gluing = str(member(b, "gluing", at), at + "/gluing");
    const GluingData& gd = lookup(doc_.gluings, b.at("gluing"), at + "/gluing");
    c.apex = lookup(doc_.spaces, member(b, "apex", at), at + "/apex");
    const json& lj = member(b, "legs", at);
    expect_object(lj, at + "/legs");
    for (const auto& [key, v] : lj.items()) {
      const std::string w = at + "/legs/" + key;
      GlObject a = parse_object(key, gd.index, w);
      c.legs.emplace(a, map_ref(v, object_space(gd, a), c.apex, w));
    }
    doc_.cones.emplace(name, std::move(c));
  }

  void refinement(const std::string& name, const json& b, const std::string& at) {
    RefinementDecl r;
    r.fine = str(member(b, "fine", at), at + "/fine");
    r.coarse = str(member(b, "coarse", at), at + "/coarse");
    const GluingData& fine = lookup(doc_.gluings, b.at("fine"), at + "/fine");
    const GluingData& coarse = lookup(doc_.gluings, b.at("coarse"), at + "/coarse");
    r.gamma = IndexMap{coarse.index, fine.index, {}};
    if (b.contains("gamma")) {
      const json& g = b.at("gamma");
      expect_object(g, at + "/gamma");
      for (const auto& src : coarse.index.names()) {
        const std::string w = at + "/gamma/" + src;
        if (!g.contains(src)) throw ParseError(at + "/gamma", "no image for index " + src);
        const std::string dst = str(g.at(src), w);
        try {
          r.gamma.table.push_back(fine.index.index_of(dst));
        } catch (const InputError&) {
          throw UnresolvedReference(dst, w);
        }
      }
    } else {
      if (!(coarse.index == fine.index))
        throw ParseError(at, "index sets differ, so 'gamma' is required");
      r.gamma = IndexMap::identity(coarse.index);
    }
    const json& cj = member(b, "components", at);
    expect_object(cj, at + "/components");
    for (const auto& [key, v] : cj.items()) {
      const std::string w = at + "/components/" + key;
      GlObject a = parse_object(key, coarse.index, w);
      r.components.emplace(a, map_ref(v, object_space(fine, reindex_object(r.gamma, a)),
                                      object_space(coarse, a), w));
    }
    doc_.refinements.emplace(name, std::move(r));
  }

  void meta(const std::string& name, const json& b, const std::string& at) {
    MetaDecl m;
    try {
      m.index = IndexSet(str_list(member(b, "index", at), at + "/index"));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(at + "/index", e.what());
    }
    const json& nj = member(b, "nodes", at);
    expect_object(nj, at + "/nodes");
    for (const auto& [key, v] : nj.items()) {
      const std::string w = at + "/nodes/" + key;
      lookup(doc_.gluings, v, w);
      m.nodes.emplace(parse_object(key, m.index, w), v.get<std::string>());
    }
    const json& ej = member(b, "edges", at);
    expect_object(ej, at + "/edges");
    for (const auto& [label, v] : ej.items()) {
      const std::string w = at + "/edges/" + label;
      auto g = parse_generator(label, m.index);
      if (!g) throw ParseError(w, "not a generator label: " + label);
      lookup(doc_.refinements, v, w);
      if (!m.edges.emplace(std::make_pair(g->dom(), g->cod()), v.get<std::string>()).second)
        throw DuplicateName(label, w + " (same endpoints as another edge)");
    }
    doc_.metas.emplace(name, std::move(m));
  }

  void covering(const std::string& name, const json& b, const std::string& at) {
    Covering c;
    c.name = name;
    c.base = lookup(doc_.spaces, member(b, "base", at), at + "/base");
    if (b.contains("kind")) {
      auto k = parse_cover_kind(str(b.at("kind"), at + "/kind"));
      if (!k) throw ParseError(at + "/kind", "kind must be 'gluing' or 'open'");
      c.kind = *k;
    }
    const json& lj = member(b, "legs", at);
    if (!lj.is_array()) throw ParseError(at + "/legs", "expected a list of legs");
    for (std::size_t n = 0; n < lj.size(); ++n) {
      const std::string w = at + "/legs/" + std::to_string(n);
      const json& v = lj[n];
      if (v.is_string()) {
        const SpaceMap& m = lookup(doc_.maps, v, w);
        c.legs.push_back(map_ref(v, m.dom(), c.base, w));
      } else {
        SpacePtr dom = lookup(doc_.spaces, member(v, "dom", w), w + "/dom");
        c.legs.push_back(table(member(v, "table", w), dom, c.base, w + "/table"));
      }
    }
    doc_.coverings.emplace(name, std::move(c));
  }

  SpecDocument& doc_;
  const ParseOptions& opts_;
  std::set<std::string> names_;
};

// ---- writing ----

ordered_json table_json(const SpaceMap& f) {
  ordered_json t = ordered_json::object();
  for (std::size_t x = 0; x < f.dom()->size(); ++x) t[f.dom()->point(x)] = f.cod()->point(f(x));
  return t;
}

ordered_json space_json(const FiniteSpace& s) {
  ordered_json j;
  j["points"] = s.points();
  ordered_json mo = ordered_json::object();
  for (std::size_t x = 0; x < s.size(); ++x) mo[s.point(x)] = s.names(s.min_open(x));
  j["min_open"] = mo;
  return j;
}

ordered_json gluing_json(const GluingData& gd) {
  const int n = static_cast<int>(gd.n());
  const IndexSet& idx = gd.index;
  ordered_json j;
  j["index"] = idx.names();
  ordered_json patches = ordered_json::object(), overlaps = ordered_json::object();
  ordered_json anchors = ordered_json::object(), transitions = ordered_json::object();
  for (int i = 0; i < n; ++i) patches[idx.name(i)] = gd.patch(i)->name();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      if (i == jj) continue;
      const std::string key = idx.name(i) + "," + idx.name(jj);
      overlaps[key] = gd.overlap(i, jj)->name();
      anchors[key] = table_json(gd.anchor(i, jj));
      transitions[key] = table_json(gd.transition(i, jj));
    }
  j["patches"] = patches;
  j["overlaps"] = overlaps;
  j["anchors"] = anchors;
  j["transitions"] = transitions;
  if (gd.has_triple_maps()) {
    bool derivable = false;
    try {
      GluingData bare = gd;
      bare.clear_triple_transitions();
      derivable = same_data(derive_triple_maps(std::move(bare), false), gd);
    } catch (const Error&) {
      derivable = false;
    }
    if (derivable) {
      j["derive_triples"] = true;
    } else {
      ordered_json tt = ordered_json::object();
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c)
            if (gd.triple_transition(i, a, c))
              tt[idx.name(i) + "," + idx.name(a) + "," + idx.name(c)] =
                  table_json(*gd.triple_transition(i, a, c));
      j["triple_transitions"] = tt;
    }
  }
  return j;
}

std::string generator_label(const GlObject& a, const GlObject& b, const IndexSet& idx) {
  for (const auto& g : generators(idx.size()))
    if (g.dom() == a && g.cod() == b) return g.label(idx);
  throw UnknownMorphism("no generator " + a.str(idx) + " -> " + b.str(idx));
}

void register_space(std::map<std::string, SpacePtr>& spaces, const SpacePtr& s) {
  auto [it, fresh] = spaces.emplace(s->name(), s);
  if (!fresh && it->second != s && !it->second->same_topology(*s))
    throw DuplicateName(s->name(), "spaces");
}

}  // namespace

// ---- SpecDocument ----

FunctorPtr SpecDocument::functor(const std::string& gluing) const {
  auto it = functors_.find(gluing);
  if (it != functors_.end()) return it->second;
  auto g = gluings.find(gluing);
  if (g == gluings.end()) throw UnresolvedReference(gluing, "gluings");
  auto f = std::make_shared<const GluingFunctor>(g->second);
  functors_.emplace(gluing, f);
  return f;
}

Refinement SpecDocument::refinement(const std::string& name) const {
  auto it = refinements.find(name);
  if (it == refinements.end()) throw UnresolvedReference(name, "refinements");
  const RefinementDecl& d = it->second;
  Refinement r{name, d.gamma, functor(d.fine), functor(d.coarse), {}};
  // Components were typed against the parsed data; rebind them to the
  // functor's own spaces.
  for (const auto& [a, m] : d.components)
    r.components.emplace(a, retarget(m, r.fine->object(reindex_object(d.gamma, a)),
                                     r.coarse->object(a)));
  return complete_refinement(std::move(r));
}

Cone SpecDocument::cone(const std::string& name) const {
  auto it = cones.find(name);
  if (it == cones.end()) throw UnresolvedReference(name, "cones");
  return Cone{it->second.apex, it->second.legs};
}

GdfGluingData SpecDocument::meta(const std::string& name) const {
  auto it = metas.find(name);
  if (it == metas.end()) throw UnresolvedReference(name, "meta_gluings");
  GdfGluingData m;
  m.name = name;
  m.index = it->second.index;
  for (const auto& [a, g] : it->second.nodes) m.nodes.emplace(a, functor(g));
  for (const auto& [ends, r] : it->second.edges) m.edges.emplace(ends, refinement(r));
  return m;
}

void SpecDocument::add_space(const SpacePtr& s) { register_space(spaces, s); }

void SpecDocument::add_gluing(const GluingData& gd) {
  for (int i = 0; i < static_cast<int>(gd.n()); ++i) {
    add_space(gd.patch(i));
    for (int j = 0; j < static_cast<int>(gd.n()); ++j)
      if (i != j) add_space(gd.overlap(i, j));
  }
  auto [it, fresh] = gluings.emplace(gd.name, gd);
  if (!fresh && !same_data(it->second, gd)) throw DuplicateName(gd.name, "gluings");
}

void SpecDocument::add_cone(const std::string& name, const std::string& gluing, const Cone& c) {
  add_space(c.apex);
  cones[name] = ConeDecl{gluing, c.apex, c.legs};
}

void SpecDocument::add_meta(const GdfGluingData& meta) {
  MetaDecl d;
  d.index = meta.index;
  for (const auto& [a, f] : meta.nodes) {
    add_gluing(f->data());
    d.nodes.emplace(a, f->data().name);
  }
  for (const auto& [ends, r] : meta.edges) {
    const std::string name = meta.name + ":" + r.name;
    refinements[name] = RefinementDecl{r.gamma, r.fine->data().name, r.coarse->data().name, r.components};
    d.edges.emplace(ends, name);
  }
  metas[meta.name] = std::move(d);
}

void SpecDocument::add_covering(const Covering& c) {
  add_space(c.base);
  for (const auto& l : c.legs) add_space(l.dom());
  coverings[c.name] = c;
}

SpecDocument parse_spec(const std::string& text, const ParseOptions& opts) {
  SpecDocument doc;
  Reader(doc, opts).read(parse_json(text));
  return doc;
}

std::string serialize(const SpecDocument& doc) {
  ordered_json root;
  ordered_json spaces = ordered_json::object();
  for (const auto& [name, s] : doc.spaces) spaces[name] = space_json(*s);
  root["spaces"] = spaces;
  if (!doc.maps.empty()) {
    ordered_json maps = ordered_json::object();
    for (const auto& [name, m] : doc.maps)
      maps[name] = {{"dom", m.dom()->name()}, {"cod", m.cod()->name()}, {"table", table_json(m)}};
    root["maps"] = maps;
  }
  if (!doc.gluings.empty()) {
    ordered_json g = ordered_json::object();
    for (const auto& [name, gd] : doc.gluings) g[name] = gluing_json(gd);
    root["gluings"] = g;
  }
  if (!doc.cones.empty()) {
    ordered_json cs = ordered_json::object();
    for (const auto& [name, c] : doc.cones) {
      const IndexSet& idx = doc.gluings.at(c.gluing).index;
      ordered_json legs = ordered_json::object();
      for (const auto& [a, m] : c.legs) legs[object_key(a, idx)] = table_json(m);
      cs[name] = {{"gluing", c.gluing}, {"apex", c.apex->name()}, {"legs", legs}};
    }
    root["cones"] = cs;
  }
  if (!doc.refinements.empty()) {
    ordered_json rs = ordered_json::object();
    for (const auto& [name, r] : doc.refinements) {
      ordered_json gamma = ordered_json::object();
      for (std::size_t i = 0; i < r.gamma.table.size(); ++i)
        gamma[r.gamma.source.name(static_cast<int>(i))] = r.gamma.target.name(r.gamma.table[i]);
      ordered_json comps = ordered_json::object();
      for (const auto& [a, m] : r.components) comps[object_key(a, r.gamma.source)] = table_json(m);
      rs[name] = {{"fine", r.fine}, {"coarse", r.coarse}, {"gamma", gamma}, {"components", comps}};
    }
    root["refinements"] = rs;
  }
  if (!doc.metas.empty()) {
    ordered_json ms = ordered_json::object();
    for (const auto& [name, m] : doc.metas) {
      ordered_json nodes = ordered_json::object(), edges = ordered_json::object();
      for (const auto& [a, g] : m.nodes) nodes[object_key(a, m.index)] = g;
      for (const auto& [ends, r] : m.edges) edges[generator_label(ends.first, ends.second, m.index)] = r;
      ms[name] = {{"index", m.index.names()}, {"nodes", nodes}, {"edges", edges}};
    }
    root["meta_gluings"] = ms;
  }
  if (!doc.coverings.empty()) {
    ordered_json cs = ordered_json::object();
    for (const auto& [name, c] : doc.coverings) {
      ordered_json legs = ordered_json::array();
      for (const auto& l : c.legs) legs.push_back({{"dom", l.dom()->name()}, {"table", table_json(l)}});
      cs[name] = {{"base", c.base->name()}, {"kind", to_string(c.kind)}, {"legs", legs}};
    }
    root["coverings"] = cs;
  }
  return root.dump(2) + "\n";
}

bool same_document(const SpecDocument& a, const SpecDocument& b) {
  auto same_keys = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
      if (i->first != j->first) return false;
    return true;
  };
  auto same_maps = [&](const std::map<GlObject, SpaceMap>& x, const std::map<GlObject, SpaceMap>& y) {
    if (!same_keys(x, y)) return false;
    for (const auto& [k, m] : x)
      if (!m.equals(y.at(k))) return false;
    return true;
  };
  if (!same_keys(a.spaces, b.spaces) || !same_keys(a.maps, b.maps) ||
      !same_keys(a.gluings, b.gluings) || !same_keys(a.cones, b.cones) ||
      !same_keys(a.refinements, b.refinements) || !same_keys(a.metas, b.metas) ||
      !same_keys(a.coverings, b.coverings))
    return false;
  for (const auto& [n, s] : a.spaces)
    if (!s->same_topology(*b.spaces.at(n))) return false;
  for (const auto& [n, m] : a.maps)
    if (!m.equals(b.maps.at(n))) return false;
  for (const auto& [n, g] : a.gluings)
    if (!same_data(g, b.gluings.at(n))) return false;
  for (const auto& [n, c] : a.cones) {
    const ConeDecl& d = b.cones.at(n);
    if (c.gluing != d.gluing || !c.apex->same_topology(*d.apex) || !same_maps(c.legs, d.legs))
      return false;
  }
  for (const auto& [n, r] : a.refinements) {
    const RefinementDecl& d = b.refinements.at(n);
    if (r.fine != d.fine || r.coarse != d.coarse || r.gamma.table != d.gamma.table ||
        !same_maps(r.components, d.components))
      return false;
  }
  for (const auto& [n, m] : a.metas) {
    const MetaDecl& d = b.metas.at(n);
    if (!(m.index == d.index) || m.nodes != d.nodes || m.edges != d.edges) return false;
  }
  for (const auto& [n, c] : a.coverings) {
    const Covering& d = b.coverings.at(n);
    if (c.kind != d.kind || !c.base->same_topology(*d.base) || c.legs.size() != d.legs.size())
      return false;
    for (std::size_t k = 0; k < c.legs.size(); ++k)
      if (!c.legs[k].equals(d.legs[k])) return false;
  }
  return true;
}

}  // namespace gluing
