#include "burnside/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "burnside/documents.hpp"
#include "burnside/error.hpp"

namespace burnside::cli {

namespace {

using docs::json;

json parse_doc(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (text[first] == '{' || text[first] == '[' || text[first] == '"'))
    return json::parse(text);
  return json(text);  // bare preset names stay strings
}

std::string slurp_or_inline(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return arg;
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open file '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int max_order_bound() {
  if (const char* env = std::getenv("BURNSIDE_MAX_ORDER")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw InputError("BURNSIDE_MAX_ORDER must be an integer");
    }
  }
  return kDefaultOrderBound;
}

void emit(std::ostream& out, const json& doc, const std::string& format,
          const std::vector<std::pair<std::string, json>>& tsvRows) {
  if (format == "tsv") {
    for (const auto& [key, value] : tsvRows) {
      out << key;
      if (value.is_array()) {
        for (const auto& v : value) out << '\t' << (v.is_string() ? v.get<std::string>() : v.dump());
      } else if (!value.is_null()) {
        out << '\t' << (value.is_string() ? value.get<std::string>() : value.dump());
      }
      out << '\n';
    }
    return;
  }
  out << doc.dump() << '\n';
}

struct Common {
  std::string format = "json";
  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json (default) or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
  }
};

// group together with the points its cycle notation refers to
struct NamedGroup {
  GroupPtr group;
  int points;
};

NamedGroup parse_group_arg(const std::string& text) {
  auto doc = parse_doc(text);
  auto G = docs::parse_group(doc);
  int points = G->order();
  if (doc.is_string()) {
    const auto s = doc.get<std::string>();
    if (s.rfind("symmetric:", 0) == 0) points = std::stoi(s.substr(10));
  } else if (doc.is_object() && doc.contains("preset")) {
    const auto s = doc.at("preset").get<std::string>();
    if (s.rfind("symmetric:", 0) == 0) points = std::stoi(s.substr(10));
  } else if (doc.is_object() && doc.contains("perm_gens") && !doc.at("perm_gens").empty()) {
    points = static_cast<int>(doc.at("perm_gens")[0].size());
  }
  return {G, points};
}

Subgroup subgroup_from_arg(const NamedGroup& ng, const std::string& gens) {
  if (gens.empty() || gens == "1" || gens == "()")
    return trivial_subgroup(ng.group);
  return docs::parse_subgroup_cycles(ng.group, gens, ng.points);
}

std::vector<GroupPtr> parse_group_list(const std::vector<std::string>& texts) {
  std::vector<GroupPtr> out;
  for (const auto& t : texts) out.push_back(parse_group_arg(t).group);
  if (out.empty()) throw InputError("at least one group is required");
  return out;
}

int run_checked(CLI::App& app, std::vector<std::string>& args,
                std::ostream& err) {
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return -1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"effective Burnside category and Swan K-theory engine"};
  app.require_subcommand(1);

  // hom ------------------------------------------------------------------
  auto* homCmd = app.add_subcommand("hom", "hom-monoid basis between two groupoids");
  std::string homSource, homTarget;
  long long homBound = -1;
  Common homFmt;
  homCmd->add_option("--source", homSource)->required();
  homCmd->add_option("--target", homTarget)->required();
  homCmd->add_option("--bound", homBound,
                     "max size |G||H|/|L| of a transitive piece");
  homFmt.attach(homCmd);

  // compose / span-canon ---------------------------------------------------
  auto* composeCmd = app.add_subcommand("compose", "compose spans and canonicalize");
  std::string composeSpans;
  Common composeFmt;
  composeCmd->add_option("--spans", composeSpans, "file or inline {\"spans\": [...]}")
      ->required();
  composeFmt.attach(composeCmd);

  auto* canonCmd = app.add_subcommand("span-canon", "canonical form of one span");
  std::string canonSpan;
  Common canonFmt;
  canonCmd->add_option("--span", canonSpan)->required();
  canonFmt.attach(canonCmd);

  // burnside-ring ----------------------------------------------------------
  auto* ringCmd = app.add_subcommand("burnside-ring", "basis, marks and products");
  std::string ringGroup;
  Common ringFmt;
  ringCmd->add_option("group", ringGroup)->required();
  ringFmt.attach(ringCmd);

  // double-coset -----------------------------------------------------------
  auto* dcCmd = app.add_subcommand("double-coset", "enumerate K\\G/H");
  std::string dcGroup, dcLeft, dcRight;
  Common dcFmt;
  dcCmd->add_option("--group", dcGroup)->required();
  dcCmd->add_option("--left", dcLeft, "generators of K in cycle notation");
  dcCmd->add_option("--right", dcRight, "generators of H in cycle notation");
  dcFmt.attach(dcCmd);

  // swan ---------------------------------------------------------------
  auto* swanCmd = app.add_subcommand("swan", "K0 of G-objects with res/tr to subgroups");
  std::string swanCat, swanGroup;
  long long swanBound = -1;
  Common swanFmt;
  swanCmd->add_option("--category", swanCat)->required();
  swanCmd->add_option("--group", swanGroup)->required();
  swanCmd->add_option("--bound", swanBound, "object size bound");
  swanFmt.attach(swanCmd);

  // norm ----------------------------------------------------------------
  auto* normCmd = app.add_subcommand("norm", "norm a subgroup object up to the group");
  std::string normCat, normGroup, normSub, normAction;
  int normObject = 0;
  Common normFmt;
  normCmd->add_option("--category", normCat)->required();
  normCmd->add_option("--group", normGroup)->required();
  normCmd->add_option("--subgroup", normSub, "cycle-notation generators");
  normCmd->add_option("--object", normObject)->required();
  normCmd->add_option("--action", normAction,
                      "morphism documents per subgroup element")
      ->required();
  normFmt.attach(normCmd);

  // mackey-check ---------------------------------------------------------
  auto* checkCmd = app.add_subcommand("mackey-check", "axiom sweeps over a family");
  std::vector<std::string> checkGroups;
  std::string checkFunctor = "burnside", checkCat, checkList = "double-coset,functoriality";
  int checkSamples = 100, checkJobs = 1;
  std::uint64_t checkSeed = 0;
  long long checkBound = -1;
  Common checkFmt;
  checkCmd->add_option("--groups", checkGroups)->required()->expected(-1);
  checkCmd->add_option("--functor", checkFunctor)
      ->check(CLI::IsMember({"burnside", "swan"}));
  checkCmd->add_option("--category", checkCat, "category for the swan functor");
  checkCmd->add_option("--checks", checkList);
  checkCmd->add_option("--samples", checkSamples);
  checkCmd->add_option("--seed", checkSeed);
  checkCmd->add_option("--bound", checkBound);
  checkCmd->add_option("--jobs", checkJobs);
  checkFmt.attach(checkCmd);

  // verify-main ----------------------------------------------------------
  auto* mainCmd = app.add_subcommand(
      "verify-main", "basis bijection and structure-matrix comparison");
  std::string mainBase;
  std::vector<std::string> mainGroups;
  int mainBound = 6;
  Common mainFmt;
  mainCmd->add_option("--base", mainBase)->required();
  mainCmd->add_option("--groups", mainGroups)->required()->expected(-1);
  mainCmd->add_option("--bound", mainBound, "block bound of the free preset");
  mainFmt.attach(mainCmd);

  if (const int rc = run_checked(app, args, err); rc >= 0) return rc;

  try {
    const int maxOrder = max_order_bound();

    if (homCmd->parsed()) {
      auto src = docs::parse_endpoint(parse_doc(homSource));
      auto tgt = docs::parse_endpoint(parse_doc(homTarget));
      auto gc = group_complete(hom_basis(src, tgt, homBound));
      json basis = json::array();
      for (const auto& l : gc.labels) basis.push_back(l);
      emit(out, json{{"basis", basis}, {"rank", gc.rank()}}, homFmt.format,
           {{"rank", gc.rank()}, {"basis", basis}});
      return 0;
    }

    if (composeCmd->parsed() || canonCmd->parsed()) {
      BisetClass cls;
      if (canonCmd->parsed()) {
        cls = span_to_class(docs::parse_span(json::parse(slurp_or_inline(canonSpan))));
      } else {
        auto doc = json::parse(slurp_or_inline(composeSpans));
        std::vector<Span> spans;
        for (const auto& s : doc.at("spans")) spans.push_back(docs::parse_span(s));
        if (spans.empty()) throw InputError("no spans to compose");
        Span cur = spans[0];
        for (size_t i = 1; i < spans.size(); ++i) cur = compose_spans(spans[i], cur);
        cls = span_to_class(cur);
      }
      auto& fmt = canonCmd->parsed() ? canonFmt : composeFmt;
      auto classes = docs::class_list_json(cls);
      emit(out, json{{"classes", classes}}, fmt.format, {{"classes", classes}});
      return 0;
    }

    if (ringCmd->parsed()) {
      auto ng = parse_group_arg(ringGroup);
      auto ring = burnside_ring(ng.group, maxOrder);
      json basis = json::array();
      for (const auto& l : ring.labels) basis.push_back(l);
      json mul = json::array();
      for (const auto& row : ring.mul) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(cell);
        mul.push_back(std::move(r));
      }
      std::vector<std::pair<std::string, json>> tsv{{"rank", ring.reps.size()}};
      for (int i = 0; i < ring.marks.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < ring.marks.cols; ++j) row.push_back(ring.marks.at(i, j));
        tsv.emplace_back(ring.labels[i], row);
      }
      emit(out,
           json{{"rank", ring.reps.size()},
                {"basis", basis},
                {"marks", docs::matrix_json(ring.marks)},
                {"mul", mul}},
           ringFmt.format, tsv);
      return 0;
    }

    if (dcCmd->parsed()) {
      auto ng = parse_group_arg(dcGroup);
      auto K = subgroup_from_arg(ng, dcLeft);
      auto H = subgroup_from_arg(ng, dcRight);
      auto dcs = double_cosets(ng.group, K, H);
      json cosets = json::array();
      std::vector<std::pair<std::string, json>> tsv{{"count", dcs.size()}};
      for (const auto& dc : dcs) {
        const long long size =
            static_cast<long long>(K.order()) * H.order() / dc.intersection.order();
        cosets.push_back({{"rep", dc.rep},
                          {"intersection", dc.intersection.elements},
                          {"size", size}});
        tsv.emplace_back(std::to_string(dc.rep),
                         json{size, json(dc.intersection.elements)});
      }
      emit(out, json{{"count", dcs.size()}, {"cosets", cosets}}, dcFmt.format, tsv);
      return 0;
    }

    if (swanCmd->parsed()) {
      auto cat = docs::parse_category(parse_doc(swanCat));
      auto ng = parse_group_arg(swanGroup);
      const long long bound = swanBound >= 0 ? swanBound : cat->numObjects() - 1;
      auto th = swan_theory(cat, bound);
      auto labels = th->basis(ng.group);
      json basis = json::array();
      for (const auto& l : labels) basis.push_back(l);
      json res = json::object(), tr = json::object();
      for (const auto& L : subgroups(ng.group, maxOrder).classReps) {
        auto M = materialize(L);
        auto incl = make_hom(M.grp, ng.group, M.toParent);
        std::string key = "L[";
        for (size_t i = 0; i < L.elements.size(); ++i) {
          if (i) key += ' ';
          key += std::to_string(L.elements[i]);
        }
        key += ']';
        res[key] = docs::matrix_json(th->res(incl));
        tr[key] = docs::matrix_json(th->tr(incl));
      }
      emit(out,
           json{{"category", cat->describe()},
                {"rank", labels.size()},
                {"basis", basis},
                {"res", res},
                {"tr", tr}},
           swanFmt.format, {{"rank", labels.size()}, {"basis", basis}});
      return 0;
    }

    if (normCmd->parsed()) {
      auto cat = docs::parse_category(parse_doc(normCat));
      auto ng = parse_group_arg(normGroup);
      auto H = subgroup_from_arg(ng, normSub);
      auto M = materialize(H);
      auto actionDoc = json::parse(slurp_or_inline(normAction));
      if (static_cast<int>(actionDoc.size()) != M.grp->order())
        throw InputError("action document needs one morphism per subgroup element");
      std::vector<CatMor> act;
      for (const auto& m : actionDoc) act.push_back(docs::parse_cat_mor(*cat, normObject, m));
      auto X = make_gobject(M.grp, cat, normObject, std::move(act));
      auto n = norm_gobject(M, coset_system(ng.group, H), X);
      json actOut = json::array();
      for (const auto& m : n.act) actOut.push_back(docs::cat_mor_json(*cat, m));
      json result{{"object", n.object}, {"action", actOut}};
      if (cat->kind() != PermutativeCategory::Kind::Explicit) {
        json classes = json::array();
        for (const auto& [key, mult] : decompose_gobject(n))
          classes.push_back({{"L", key.L}, {"psi", key.phi}, {"mult", mult}});
        result["classes"] = classes;
      }
      emit(out, result, normFmt.format, {{"object", n.object}});
      return 0;
    }

    if (checkCmd->parsed()) {
      auto groups = parse_group_list(checkGroups);
      MackeyData M =
          checkFunctor == "swan"
              ? swan_mackey(docs::parse_category(parse_doc(
                                checkCat.empty() ? json("finset:8") : parse_doc(checkCat))),
                            groups, checkBound)
              : burnside_mackey(groups, maxOrder);
      json reports = json::array();
      bool pass = true;
      std::stringstream checks(checkList);
      std::string item;
      while (std::getline(checks, item, ',')) {
        EvaluationReport r;
        if (item == "double-coset") {
          r = check_all_double_cosets(M, checkJobs);
        } else if (item == "functoriality") {
          r = check_functoriality(M, checkSamples, checkSeed);
        } else {
          throw InputError("unknown check '" + item + "'");
        }
        pass = pass && r.pass;
        reports.push_back(docs::report_json(r));
      }
      emit(out, json{{"status", pass ? "pass" : "fail"}, {"reports", reports}},
           checkFmt.format, {{"status", pass ? "pass" : "fail"}});
      return pass ? 0 : 1;
    }

    if (mainCmd->parsed()) {
      auto base = parse_group_arg(mainBase).group;
      auto groups = parse_group_list(mainGroups);
      auto r = compare_main_theorem(base, groups, mainBound);
      emit(out, docs::report_json(r), mainFmt.format,
           {{"status", r.pass ? "pass" : "fail"}, {"checked", r.checked}});
      return r.pass ? 0 : 1;
    }
  } catch (const EngineError& e) {
    err << json{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << json{{"error", "JsonError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace burnside::cli
