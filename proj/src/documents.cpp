#include "burnside/documents.hpp"

#include <algorithm>

#include "burnside/error.hpp"

namespace burnside::docs {

namespace {

GroupPtr group_from_preset(const std::string& name) {
  if (name == "trivial") return trivial_group();
  if (name == "klein4") return klein_four();
  if (name == "quaternion8") return quaternion_group();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(name.substr(colon + 1));
    } catch (...) {
      throw InputError("bad preset parameter in '" + name + "'");
    }
    if (head == "cyclic") return cyclic_group(n);
    if (head == "symmetric") return symmetric_group(n);
    if (head == "dihedral") return dihedral_group(n);
  }
  throw InputError("unknown group preset '" + name + "'");
}

int group_points(const GroupPtr& G, const std::string& presetName) {
  // number of points for cycle notation: meaningful for symmetric presets,
  // otherwise the order (elements act on themselves by translation)
  const auto colon = presetName.find(':');
  if (colon != std::string::npos && presetName.substr(0, colon) == "symmetric")
    return std::stoi(presetName.substr(colon + 1));
  return G->order();
}

}  // namespace

bool looks_like_group(const json& doc) {
  if (doc.is_string()) return true;
  return doc.is_object() &&
         (doc.contains("preset") || doc.contains("mul") || doc.contains("perm_gens"));
}

GroupPtr parse_group(const json& doc) {
  if (doc.is_string()) return group_from_preset(doc.get<std::string>());
  if (!doc.is_object()) throw InputError("group document must be an object");
  if (doc.contains("preset")) return group_from_preset(doc.at("preset").get<std::string>());
  if (doc.contains("mul")) {
    const auto& rows = doc.at("mul");
    std::vector<int> table;
    for (const auto& row : rows)
      for (const auto& v : row) table.push_back(v.get<int>());
    auto G = FiniteGroup::from_table(std::move(table),
                                     doc.value("name", std::string{}));
    if (doc.contains("order") && doc.at("order").get<int>() != G->order())
      throw InputError("declared order disagrees with the table");
    if (G->identity() != 0)
      throw InputError("element 0 must be the identity");
    return G;
  }
  if (doc.contains("perm_gens")) {
    std::vector<perm::Perm> gens;
    int points = 0;
    for (const auto& row : doc.at("perm_gens")) {
      perm::Perm p;
      for (const auto& v : row) p.push_back(v.get<int>());
      points = std::max(points, static_cast<int>(p.size()));
      gens.push_back(std::move(p));
    }
    for (auto& p : gens)
      while (static_cast<int>(p.size()) < points) p.push_back(static_cast<int>(p.size()));
    return from_permutations(gens, points, doc.value("name", std::string{}));
  }
  throw InputError("unrecognized group document");
}

GroupoidPtr parse_groupoid(const json& doc) {
  if (doc.contains("classifying")) return classifying(parse_group(doc.at("classifying")));
  if (doc.contains("coproduct")) {
    std::vector<GroupoidPtr> parts;
    for (const auto& p : doc.at("coproduct")) parts.push_back(parse_endpoint(p));
    return coproduct(parts).total;
  }
  if (!doc.contains("objects")) throw InputError("unrecognized groupoid document");
  FiniteGroupoid::Builder b;
  b.nObj = doc.at("objects").get<int>();
  const auto& mors = doc.at("morphisms");
  b.morSrc.resize(mors.size());
  b.morDst.resize(mors.size());
  int seen = 0;
  for (const auto& m : mors) {
    const int id = m.at("id").get<int>();
    if (id < 0 || id >= static_cast<int>(mors.size()))
      throw InputError("morphism ids must be 0..count-1");
    b.morSrc[id] = m.at("src").get<int>();
    b.morDst[id] = m.at("dst").get<int>();
    ++seen;
  }
  if (seen != static_cast<int>(mors.size()))
    throw InputError("morphism list has duplicate ids");
  const int nMor = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nMor, std::vector<int>(nMor, -1));
  for (const auto& t : doc.at("compose")) {
    if (!t.is_array() || t.size() != 3)
      throw InputError("compose entries are triples [f, g, f∘g]");
    comp[t[0].get<int>()][t[1].get<int>()] = t[2].get<int>();
  }
  b.idMor.clear();
  for (const auto& v : doc.at("identities")) b.idMor.push_back(v.get<int>());
  // inverses recovered from the table
  b.morInv.assign(nMor, -1);
  for (int m = 0; m < nMor; ++m)
    for (int w = 0; w < nMor; ++w)
      if (comp[w][m] == b.idMor[b.morSrc[m]] && comp[m][w] == b.idMor[b.morDst[m]]) {
        b.morInv[m] = w;
        break;
      }
  for (int m = 0; m < nMor; ++m)
    if (b.morInv[m] < 0) throw InputError("morphism without inverse");
  b.compDense.assign(static_cast<size_t>(nMor) * nMor, -1);
  for (int f = 0; f < nMor; ++f)
    for (int g = 0; g < nMor; ++g) b.compDense[static_cast<size_t>(f) * nMor + g] = comp[f][g];
  auto G = b.finish();
  G->validate();
  return G;
}

GroupoidPtr parse_endpoint(const json& doc) {
  if (looks_like_group(doc)) return classifying(parse_group(doc));
  return parse_groupoid(doc);
}

PermCatPtr parse_category(const json& doc) {
  std::string preset;
  if (doc.is_string()) preset = doc.get<std::string>();
  else if (doc.is_object() && doc.contains("preset") && doc.at("preset").is_string())
    preset = doc.at("preset").get<std::string>();
  if (!preset.empty()) {
    if (preset.rfind("finset:", 0) == 0)
      return finset_category(std::stoi(preset.substr(7)));
    if (preset.rfind("free:", 0) == 0) {
      const auto last = preset.rfind(':');
      if (last == 4) throw InputError("free preset needs a group and a bound");
      const int bound = std::stoi(preset.substr(last + 1));
      const std::string mid = preset.substr(5, last - 5);
      GroupPtr base;
      if (!mid.empty() && (mid[0] == '{' || mid[0] == '"'))
        base = parse_group(json::parse(mid));
      else
        base = group_from_preset(mid);
      return free_category(base, bound);
    }
    if (preset == "free") {
      if (!doc.is_object() || !doc.contains("group"))
        throw InputError("free preset needs a group document");
      return free_category(parse_group(doc.at("group")), doc.value("bound", 4));
    }
    throw InputError("unknown category preset '" + preset + "'");
  }
  if (!doc.is_object() || !doc.contains("objects"))
    throw InputError("unrecognized category document");
  ExplicitCatData d;
  d.objects = doc.at("objects").get<int>();
  d.unit = doc.at("unit").get<int>();
  for (const auto& m : doc.at("morphisms")) {
    d.morSrc.push_back(m.at("src").get<int>());
    d.morDst.push_back(m.at("dst").get<int>());
  }
  const int nMor = static_cast<int>(d.morSrc.size());
  for (const auto& v : doc.at("identities")) d.idMor.push_back(v.get<int>());
  d.compose.assign(nMor, std::vector<int>(nMor, -1));
  for (const auto& t : doc.at("compose"))
    d.compose[t[0].get<int>()][t[1].get<int>()] = t[2].get<int>();
  for (const auto& row : doc.at("tensor_obj")) {
    d.tensorObj.emplace_back();
    for (const auto& v : row) d.tensorObj.back().push_back(v.get<int>());
  }
  d.tensorMor.assign(nMor, std::vector<int>(nMor, -1));
  for (const auto& t : doc.at("tensor_mor"))
    d.tensorMor[t[0].get<int>()][t[1].get<int>()] = t[2].get<int>();
  d.symmetry.assign(d.objects, std::vector<int>(d.objects, -1));
  for (const auto& t : doc.at("symmetry"))
    d.symmetry[t[0].get<int>()][t[1].get<int>()] = t[2].get<int>();
  return explicit_category(std::move(d));
}

Biset parse_biset(const json& doc) {
  Biset X;
  auto sides = [&](const json& side) {
    std::vector<GroupPtr> out;
    if (side.is_array())
      for (const auto& g : side) out.push_back(parse_group(g));
    else
      out.push_back(parse_group(side));
    return out;
  };
  X.left = sides(doc.at("left"));
  X.right = sides(doc.at("right"));
  X.cells.assign(X.left.size(), std::vector<BisetCell>(X.right.size()));
  for (size_t i = 0; i < X.left.size(); ++i)
    for (size_t j = 0; j < X.right.size(); ++j) {
      X.cells[i][j].actL.assign(X.left[i]->order(), {});
      X.cells[i][j].actR.assign(X.right[j]->order(), {});
    }
  for (const auto& c : doc.at("cells")) {
    const int i = c.value("i", 0), j = c.value("j", 0);
    auto& cell = X.cells.at(i).at(j);
    cell.size = c.at("size").get<int>();
    const auto& acts = c.at("actions");
    cell.actL.clear();
    for (const auto& row : acts.at("left")) {
      cell.actL.emplace_back();
      for (const auto& v : row) cell.actL.back().push_back(v.get<int>());
    }
    cell.actR.clear();
    for (const auto& row : acts.at("right")) {
      cell.actR.emplace_back();
      for (const auto& v : row) cell.actR.back().push_back(v.get<int>());
    }
  }
  validate_biset(X);
  return X;
}

json biset_json(const Biset& X) {
  json cells = json::array();
  for (size_t i = 0; i < X.left.size(); ++i)
    for (size_t j = 0; j < X.right.size(); ++j) {
      const auto& c = X.cells[i][j];
      cells.push_back({{"i", i},
                       {"j", j},
                       {"size", c.size},
                       {"actions", {{"left", c.actL}, {"right", c.actR}}}});
    }
  return json{{"cells", cells}};
}

Span parse_span(const json& doc) {
  Span s;
  s.source = parse_endpoint(doc.at("source"));
  s.target = parse_endpoint(doc.at("target"));
  s.apex = parse_endpoint(doc.at("apex"));
  auto leg = [&](const json& d, const GroupoidPtr& from, const GroupoidPtr& to) {
    GroupoidFunctor F;
    F.source = from;
    F.target = to;
    for (const auto& v : d.at("obj")) F.objMap.push_back(v.get<int>());
    for (const auto& v : d.at("mor")) F.morMap.push_back(v.get<int>());
    validate_functor(F);
    return F;
  };
  s.faithfulLeg = leg(doc.at("faithful"), s.apex, s.target);
  s.freeLeg = leg(doc.at("free"), s.apex, s.source);
  validate_span(s);
  return s;
}

Subgroup parse_subgroup_cycles(const GroupPtr& G, const std::string& text,
                               int points) {
  std::vector<int> seed;
  for (const auto& p : perm::parse_cycles(text, points)) {
    const auto rank = perm::lex_rank(p);
    if (rank >= G->order())
      throw InputError("generator is outside the group");
    seed.push_back(static_cast<int>(rank));
  }
  return closure_subgroup(G, seed);
}

CatMor parse_cat_mor(const PermutativeCategory& C, int object, const json& doc) {
  CatMor m{object, object, {}};
  switch (C.kind()) {
    case PermutativeCategory::Kind::Finset:
      for (const auto& v : doc) m.data.push_back(v.get<int>());
      break;
    case PermutativeCategory::Kind::Free:
      for (const auto& v : doc.at("sigma")) m.data.push_back(v.get<int>());
      for (const auto& v : doc.at("labels")) m.data.push_back(v.get<int>());
      break;
    case PermutativeCategory::Kind::Explicit:
      m.data.push_back(doc.get<int>());
      break;
  }
  return m;
}

json cat_mor_json(const PermutativeCategory& C, const CatMor& m) {
  switch (C.kind()) {
    case PermutativeCategory::Kind::Finset:
      return json(m.data);
    case PermutativeCategory::Kind::Free: {
      json sigma = json::array(), labels = json::array();
      for (int i = 0; i < m.src; ++i) sigma.push_back(m.data[i]);
      for (int i = 0; i < m.src; ++i) labels.push_back(m.data[m.src + i]);
      return json{{"sigma", sigma}, {"labels", labels}};
    }
    case PermutativeCategory::Kind::Explicit:
      return json(m.data[0]);
  }
  return {};
}

json class_list_json(const BisetClass& c) {
  json out = json::array();
  for (const auto& [tc, mult] : c.classes)
    out.push_back({{"left_comp", tc.leftComp},
                   {"right_comp", tc.rightComp},
                   {"L", tc.pair.L},
                   {"phi", tc.pair.phi},
                   {"mult", mult}});
  return out;
}

json matrix_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_json(const EvaluationReport& r) {
  return json{{"check", r.check},
              {"status", r.pass ? "pass" : "fail"},
              {"checked", r.checked},
              {"details", r.details}};
}

}  // namespace burnside::docs
