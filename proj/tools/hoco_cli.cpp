#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hoco/checks.hpp"
#include "hoco/io.hpp"

using namespace hoco;

namespace {

struct Output {
  std::string format = "text";
  std::string witness_dir;
  json doc = json::object();
  bool failed = false;

  void put(const std::string& key, const json& value) { doc[key] = value; }
  void line(std::ostream& os, const std::string& key, const json& value) const {
    if (value.is_string())
      os << key << " " << value.get<std::string>() << "\n";
    else
      os << key << " " << value.dump() << "\n";
  }
  void emit(std::ostream& os) const {
    if (format == "json") {
      os << doc.dump(2) << "\n";
      return;
    }
    for (auto& [k, v] : doc.items()) line(os, k, v);
  }
  void witness(const std::string& name, const json& value) const {
    if (witness_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(witness_dir, ec);
    std::ofstream f(witness_dir + "/" + name);
    if (!f) throw invalid_input("cannot write witness file in '" + witness_dir + "'");
    f << value.dump(2) << "\n";
  }
};

json size_table(SSetPtr X) {
  json sizes = json::array();
  for (int d = 0; d <= X->top_dim(); ++d) sizes.push_back(X->size(d));
  return sizes;
}

json lift_report_json(const LiftReport& r) {
  return json{{"ok", r.ok},
              {"problems", r.problems},
              {"fail_n", r.fail_n},
              {"fail_k", r.fail_k},
              {"note", r.note}};
}

int edge_index_of(const FinCat& C, const std::string& name) {
  try {
    size_t used = 0;
    int idx = std::stoi(name, &used);
    if (used == name.size() && idx >= 0 && idx < C.n_mor()) return idx;
  } catch (...) {
  }
  for (int m = 0; m < C.n_mor(); ++m)
    if (C.mors[static_cast<size_t>(m)].name == name) return m;
  throw invalid_input("unknown morphism '" + name + "' in category '" + C.name + "'");
}

std::pair<int, int> parse_at(const std::string& at) {
  auto comma = at.find(',');
  if (comma == std::string::npos) return {std::stoi(at), -1};
  return {std::stoi(at.substr(0, comma)), std::stoi(at.substr(comma + 1))};
}

// anchors grouped for `verify-paper --suite`
bool in_suite(const std::string& suite, const std::string& anchor) {
  if (suite.empty() || suite == "all") return true;
  static const std::map<std::string, std::vector<std::string>> suites = {
      {"coherent",
       {"observation:hcsimp-cubes", "lemma:simplex-computad", "lemma:bead-shapes",
        "example:subcomputad-of-simplex"}},
      {"nerve", {"proposition:qcat-from-kan-enriched", "lemma:nerve-duals"}},
      {"homspace", {"lemma:commuting-comparisons", "proposition:hom-space-comparison"}},
      {"fibration",
       {"lemma:qcat-cocart", "theorem:general-comprehension", "lemma:extension-conservativity",
        "definition:yoneda-embedding"}},
  };
  auto it = suites.find(suite);
  if (it == suites.end()) throw invalid_input("unknown suite '" + suite + "'");
  for (auto& a : it->second)
    if (a == anchor) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale toolkit for simplicial computads, coherent nerves, and "
               "cocartesian fibrations"};
  app.require_subcommand(1);
  app.fallthrough();

  int D = 3;
  Output out;
  app.add_option("-D,--dim", D, "dimension bound for checks");
  app.add_option("--format", out.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--witnesses", out.witness_dir, "directory for witness files");

  std::string in_path, with_path, fib_path, cat_path;
  std::string at, edge, model = "comma", suite;

  auto* realize_cmd = app.add_subcommand("realize", "realized computad of a simplicial set");
  realize_cmd->add_option("--in", in_path, "simplicial set input")->required();

  auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a category, classical and coherent");
  nerve_cmd->add_option("--cat", cat_path, "category input")->required();

  auto* hom_cmd = app.add_subcommand("hom", "hom space between two vertices");
  hom_cmd->add_option("--in", in_path, "simplicial set input")->required();
  hom_cmd->add_option("--at", at, "vertex pair a,b")->required();
  hom_cmd->add_option("--model", model, "comma, right, or left")
      ->check(CLI::IsMember({"comma", "right", "left"}));

  auto* product_cmd = app.add_subcommand("product", "binary product of simplicial sets");
  product_cmd->add_option("--in", in_path, "first factor")->required();
  product_cmd->add_option("--with", with_path, "second factor")->required();

  auto* exp_cmd = app.add_subcommand("exp", "bounded exponential of simplicial sets");
  exp_cmd->add_option("--in", in_path, "base (exponent) set")->required();
  exp_cmd->add_option("--target", with_path, "target set")->required();

  auto* qcat_cmd = app.add_subcommand("check-qcat", "inner horn filling test");
  qcat_cmd->add_option("--in", in_path, "simplicial set input")->required();

  auto* kan_cmd = app.add_subcommand("check-kan", "all horn filling test");
  kan_cmd->add_option("--in", in_path, "simplicial set input")->required();

  auto* cocart_cmd = app.add_subcommand("check-cocart", "cocartesian fibration tests");
  cocart_cmd->add_option("--fibration", fib_path, "fibration input")->required();

  auto* compr_cmd = app.add_subcommand("comprehend", "fibre transport along a base edge");
  compr_cmd->add_option("--fibration", fib_path, "fibration input")->required();
  compr_cmd->add_option("--edge", edge, "base morphism index or name")->required();

  auto* yoneda_cmd = app.add_subcommand("yoneda", "slice over a vertex with fibration check");
  yoneda_cmd->add_option("--in", in_path, "simplicial set input")->required();
  yoneda_cmd->add_option("--at", at, "vertex")->required();

  auto* compare_cmd = app.add_subcommand("compare-maps", "comparison-functor square on a shape");
  compare_cmd->add_option("--in", in_path, "shape input (default the interval)");

  auto* verify_cmd = app.add_subcommand("verify-paper", "full verification table");
  verify_cmd->add_option("--suite", suite, "restrict to one suite of statements");

  CLI11_PARSE(app, argc, argv);

  try {
    if (realize_cmd->parsed()) {
      SSetPtr X = sset_from_json(load_json_file(in_path));
      auto R = realize(X);
      out.put("set", X->name);
      out.put("objects", R.comp.n_objects);
      json atoms = json::array();
      for (int d = 0; d <= R.comp.top_dim(); ++d) {
        json layer = json::array();
        for (int i = 0; i < R.comp.size(d); ++i) {
          const CAtom& a = R.comp.atom(AtomId{d, i});
          layer.push_back(json{{"src", a.src}, {"tgt", a.tgt}, {"label", a.label}});
        }
        atoms.push_back(layer);
      }
      out.put("atoms", atoms);
      out.put("valid", validate(R.comp).ok);
      out.failed = !validate(R.comp).ok;
    } else if (nerve_cmd->parsed()) {
      FinCat C = fincat_from_json(load_json_file(cat_path));
      auto M = nerve_of_category(C, D + 1);
      auto S = scat_of_fincat(C);
      auto N = coherent_nerve(S.cat, D + 1);
      out.put("category", C.name);
      out.put("classical_sizes", size_table(M.set));
      out.put("coherent_sizes", size_table(N.set));
      bool agree = true;
      for (int d = 0; d <= D + 1; ++d)
        if (M.set->size(d) != N.set->size(d)) agree = false;
      out.put("agree", agree);
      out.failed = !agree;
    } else if (hom_cmd->parsed()) {
      SSetPtr A = sset_from_json(load_json_file(in_path));
      auto [a, b] = parse_at(at);
      if (b < 0) throw invalid_input("hom needs --at a,b");
      SSetPtr H;
      if (model == "comma")
        H = hom_space(A, a, b, D).set;
      else if (model == "right")
        H = right_hom(A, a, b, D).set;
      else
        H = left_hom(A, a, b, D).set;
      out.put("model", model);
      out.put("sizes", size_table(H));
      out.put("components", H->size(0) == 0 ? 0 : pi0_count(H));
    } else if (product_cmd->parsed()) {
      SSetPtr A = sset_from_json(load_json_file(in_path));
      SSetPtr B = sset_from_json(load_json_file(with_path));
      auto P = product(A, B, std::max(A->top_dim(), 0) + std::max(B->top_dim(), 0));
      out.put("sizes", size_table(P.set));
      out.put("valid", validate(*P.set).ok);
      out.failed = !validate(*P.set).ok;
    } else if (exp_cmd->parsed()) {
      SSetPtr X = sset_from_json(load_json_file(in_path));
      SSetPtr Y = sset_from_json(load_json_file(with_path));
      auto E = bounded_exponential(X, Y, D);
      out.put("sizes", size_table(E.set));
      out.put("valid", validate(*E.set).ok);
      out.failed = !validate(*E.set).ok;
    } else if (qcat_cmd->parsed() || kan_cmd->parsed()) {
      SSetPtr X = sset_from_json(load_json_file(in_path));
      auto rep = qcat_cmd->parsed() ? quasicategory_check(X, D) : kan_check(X, D);
      out.put("ok", rep.ok);
      out.put("horns_checked", rep.horns_checked);
      if (!rep.ok) {
        out.put("fail_n", rep.fail_n);
        out.put("fail_k", rep.fail_k);
        out.put("note", rep.note);
      }
      out.failed = !rep.ok;
    } else if (cocart_cmd->parsed()) {
      GrothBundle bdl = fibration_from_json(load_json_file(fib_path));
      auto inner = is_inner_fibration(bdl.proj, D);
      auto iso = is_isofibration(bdl.proj, D);
      auto cocart = is_cocartesian_fibration(bdl.proj, D);
      auto closure = cocartesian_closure_check(bdl.proj, D);
      out.put("dims_checked", D);
      out.put("inner_fibration", lift_report_json(inner));
      out.put("isofibration", lift_report_json(iso));
      out.put("cocartesian_fibration",
              json{{"ok", cocart.ok}, {"problems", cocart.problems}, {"note", cocart.note}});
      out.put("closures", closure.ok);
      json wits = json::array();
      for (auto& w : cocart.witnesses)
        wits.push_back(json{{"base_edge", ez_to_json(w.base_edge)},
                            {"src_vertex", w.src_vertex},
                            {"lift", ez_to_json(w.lift)}});
      out.put("witness_count", static_cast<int>(cocart.witnesses.size()));
      out.witness("cocartesian_lifts.json", wits);
      out.failed = !(inner.ok && iso.ok && cocart.ok && closure.ok);
    } else if (compr_cmd->parsed()) {
      GrothBundle bdl = fibration_from_json(load_json_file(fib_path));
      int m = edge_index_of(bdl.G->base, edge);
      auto C = comprehension_edge(bdl.proj, bdl.edge_of_base(m), D);
      out.put("edge", bdl.G->base.mors[static_cast<size_t>(m)].name);
      json vt = json::array();
      for (int i = 0; i < C.Fa.set->size(0); ++i)
        vt.push_back(C.transport.on_cell(CellId{0, i}).cell.idx);
      out.put("vertex_table", vt);
      json et = json::array();
      for (int i = 0; i < C.Fa.set->size(1); ++i)
        et.push_back(ez_to_json(C.transport.on_cell(CellId{1, i})));
      out.put("edge_table", et);
      bool valid = validate(C.transport).ok;
      out.put("valid", valid);
      out.witness("transport.json", smap_to_json(C.transport));
      out.failed = !valid;
    } else if (yoneda_cmd->parsed()) {
      SSetPtr A = sset_from_json(load_json_file(in_path));
      int a = parse_at(at).first;
      auto Y = yoneda_object(A, a, D);
      auto rep = is_right_fibration(Y.proj, D);
      out.put("slice_sizes", size_table(Y.slice.set));
      out.put("right_fibration", lift_report_json(rep));
      json fibres = json::array();
      for (int x = 0; x < A->size(0); ++x) {
        auto F = fibre(Y.proj, x);
        fibres.push_back(F.set->size(0) == 0 ? 0 : pi0_count(F.set));
      }
      out.put("fibre_components", fibres);
      out.failed = !rep.ok;
    } else if (compare_cmd->parsed()) {
      SSetPtr U = in_path.empty() ? standard(1).set : sset_from_json(load_json_file(in_path));
      auto S = right_suspension(U);
      auto susp = suspension(U, U->top_dim() + 1);
      auto three = three_cat(U);
      auto J2 = join_with_point(S.set);
      auto R = realize(J2.set);
      auto twoR = two_cat(S.set);
      auto twoS = two_cat(susp.set);
      SFunctor v = triple_comparison_functor(R, J2, S, three);
      SMap u = suspension_comparison_map(susp, S);
      SCatFunctor s = quotient_to_suspension_functor(three, susp, twoS);
      SFunctor left = cone_collapse_functor(R, J2, twoR.cat);
      SFunctor right = compose(two_of_map(u, twoS, twoR), compose(s, v));
      bool square = sfunctor_equal(left, right);
      out.put("shape", U->name);
      out.put("maps_valid", validate(v).ok && validate(u).ok && validate(right).ok);
      out.put("square_commutes", square);
      out.failed = !square;
    } else if (verify_cmd->parsed()) {
      auto results = run_acceptance();
      json table = json::array();
      int fails = 0;
      for (auto& c : results) {
        if (!in_suite(suite, c.anchor)) continue;
        table.push_back(json{{"statement", c.anchor},
                             {"status", c.pass ? "pass" : "fail"},
                             {"title", c.title},
                             {"detail", c.detail},
                             {"dims_checked", D}});
        if (!c.pass) ++fails;
      }
      if (out.format == "json") {
        out.put("results", table);
      } else {
        for (auto& row : table)
          std::cout << row["statement"].get<std::string>() << " "
                    << row["status"].get<std::string>() << " "
                    << row["detail"].get<std::string>() << "\n";
      }
      out.witness("verify_paper.json", table);
      out.failed = fails > 0;
      if (out.format == "json") out.emit(std::cout);
      return fails > 0 ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  out.emit(std::cout);
  return out.failed ? 1 : 0;
}
