#ifndef HOCO_IO_HPP
#define HOCO_IO_HPP

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hoco/corpus.hpp"

namespace hoco {

using json = nlohmann::ordered_json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// simplices and simplicial sets
// ---------------------------------------------------------------------------

/// A simplex is stored as [cell_dim, cell_idx, epi_image]; the epi target is
/// the cell dimension, so the image list alone determines the operator.
inline json ez_to_json(const EZ& s) {
  return json::array({s.cell.dim, s.cell.idx, json(s.epi.img)});
}

inline EZ ez_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw invalid_input("simplex: want [dim, idx, epi]");
  EZ s;
  s.cell.dim = j[0].get<int>();
  s.cell.idx = j[1].get<int>();
  s.epi.target = s.cell.dim;
  s.epi.img = j[2].get<std::vector<int>>();
  return s;
}

inline json sset_to_json(const SSet& X) {
  json layers = json::array();
  for (int d = 0; d <= X.top_dim(); ++d) {
    json layer = json::array();
    for (int i = 0; i < X.size(d); ++i) {
      const Cell& c = X.cell(CellId{d, i});
      json faces = json::array();
      for (auto& f : c.faces) faces.push_back(ez_to_json(f));
      json jc;
      if (!c.label.empty()) jc["label"] = c.label;
      jc["faces"] = faces;
      layer.push_back(jc);
    }
    layers.push_back(layer);
  }
  return json{{"name", X.name}, {"truncation", X.truncation}, {"cells", layers}};
}

inline SSetPtr sset_from_json_explicit(const json& j) {
  auto X = std::make_shared<SSet>();
  X->name = j.value("name", std::string("X"));
  X->truncation = j.value("truncation", -1);
  for (auto& layer : j.at("cells")) {
    X->cells.emplace_back();
    for (auto& jc : layer) {
      Cell c;
      c.label = jc.value("label", std::string());
      for (auto& f : jc.at("faces")) c.faces.push_back(ez_from_json(f));
      X->cells.back().push_back(std::move(c));
    }
  }
  auto r = validate(*X);
  if (!r.ok) throw invalid_input("simplicial set '" + X->name + "': " + r.errors[0]);
  return X;
}

// ---------------------------------------------------------------------------
// categories
// ---------------------------------------------------------------------------

inline json fincat_to_json(const FinCat& C) {
  json mors = json::array();
  for (auto& m : C.mors) mors.push_back(json{{"src", m.src}, {"tgt", m.tgt}, {"name", m.name}});
  return json{{"name", C.name},
              {"n_obj", C.n_obj},
              {"obj_names", C.obj_names},
              {"mors", mors},
              {"then", C.then_}};
}

/// Accepts {"linear": n}, {"discrete": n}, {"cyclic2": true},
/// {"walking_iso": true}, or the explicit table form.
inline FinCat fincat_from_json(const json& j) {
  if (j.contains("linear")) return linear_cat(j["linear"].get<int>());
  if (j.contains("discrete")) return discrete_cat(j["discrete"].get<int>(), "discrete");
  if (j.contains("cyclic2")) return cyclic2_cat();
  if (j.contains("walking_iso")) return walking_iso_cat();
  FinCat C;
  C.name = j.value("name", std::string("C"));
  C.n_obj = j.at("n_obj").get<int>();
  if (j.contains("obj_names")) C.obj_names = j["obj_names"].get<std::vector<std::string>>();
  for (auto& jm : j.at("mors"))
    C.mors.push_back(FinCat::Mor{jm.at("src").get<int>(), jm.at("tgt").get<int>(),
                                 jm.value("name", std::string())});
  C.then_ = j.at("then").get<std::vector<std::vector<int>>>();
  auto r = validate(C);
  if (!r.ok) throw invalid_input("category '" + C.name + "': " + r.errors[0]);
  return C;
}

// ---------------------------------------------------------------------------
// simplicial set expressions
// ---------------------------------------------------------------------------

/// Top-level input language for simplicial sets:
///   {"standard": n}            the n-simplex
///   {"boundary": n}            its boundary
///   {"horn": [n, k]}           the horn missing face k
///   {"nerve": <cat>, "bound": d}
///   {"product": [<expr>, <expr>], "bound": d}
///   {"opposite": <expr>}
///   {"cells": [...]}           explicit cell table
inline SSetPtr sset_from_json(const json& j) {
  if (j.contains("standard")) return standard(j["standard"].get<int>()).set;
  if (j.contains("boundary")) {
    auto st = standard(j["boundary"].get<int>());
    return restrict_subcomplex(boundary_sub(st)).set;
  }
  if (j.contains("horn")) {
    auto nk = j["horn"].get<std::vector<int>>();
    if (nk.size() != 2) throw invalid_input("horn: want [n, k]");
    auto st = standard(nk[0]);
    return restrict_subcomplex(horn_sub(st, nk[1])).set;
  }
  if (j.contains("nerve")) {
    FinCat C = fincat_from_json(j["nerve"]);
    int bound = j.value("bound", 4);
    return nerve_of_category(C, bound).set;
  }
  if (j.contains("product")) {
    auto& fac = j["product"];
    if (!fac.is_array() || fac.size() != 2) throw invalid_input("product: want two factors");
    SSetPtr A = sset_from_json(fac[0]);
    SSetPtr B = sset_from_json(fac[1]);
    int bound = j.value("bound", std::max(A->top_dim(), 0) + std::max(B->top_dim(), 0));
    return product(A, B, bound).set;
  }
  if (j.contains("opposite")) return opposite(sset_from_json(j["opposite"]));
  if (j.contains("cells")) return sset_from_json_explicit(j);
  throw invalid_input("simplicial set: unrecognized expression");
}

// ---------------------------------------------------------------------------
// maps and fibrations
// ---------------------------------------------------------------------------

inline json smap_to_json(const SMap& f) {
  json assign = json::array();
  for (auto& layer : f.assign) {
    json row = json::array();
    for (auto& s : layer) row.push_back(ez_to_json(s));
    assign.push_back(row);
  }
  return json{{"src", f.src ? f.src->name : ""},
              {"tgt", f.tgt ? f.tgt->name : ""},
              {"assign", assign}};
}

/// Fibration inputs:
///   {"corpus": "square"|"flip"|"collapse"|"chain", "bound": d}
///   {"grothendieck": {"base": <cat>, "fibres": [<cat>...],
///                     "transitions": [{"on_obj": [...], "on_mor": [...]}...]},
///    "bound": d}
/// Transitions are listed per base morphism, identities first.
inline GrothBundle fibration_from_json(const json& j) {
  int bound = j.value("bound", 3);
  std::shared_ptr<Grothendieck> G;
  if (j.contains("corpus")) {
    std::string which = j["corpus"].get<std::string>();
    if (which == "square")
      G = groth_square();
    else if (which == "flip")
      G = groth_flip();
    else if (which == "collapse")
      G = groth_collapse();
    else if (which == "chain")
      G = groth_chain();
    else
      throw invalid_input("unknown corpus fibration '" + which + "'");
  } else if (j.contains("grothendieck")) {
    auto& jg = j["grothendieck"];
    G = std::make_shared<Grothendieck>();
    G->base = fincat_from_json(jg.at("base"));
    for (auto& jf : jg.at("fibres")) G->fibre.push_back(fincat_from_json(jf));
    auto& jt = jg.at("transitions");
    if (static_cast<int>(jt.size()) != G->base.n_mor())
      throw invalid_input("grothendieck: one transition per base morphism required");
    for (int m = 0; m < G->base.n_mor(); ++m) {
      const auto& mm = G->base.mors[static_cast<size_t>(m)];
      FinFunctor T;
      T.src = &G->fibre[static_cast<size_t>(mm.src)];
      T.tgt = &G->fibre[static_cast<size_t>(mm.tgt)];
      T.on_obj = jt[static_cast<size_t>(m)].at("on_obj").get<std::vector<int>>();
      T.on_mor = jt[static_cast<size_t>(m)].at("on_mor").get<std::vector<int>>();
      auto r = validate(T);
      if (!r.ok) throw invalid_input("transition " + std::to_string(m) + ": " + r.errors[0]);
      G->transition.push_back(std::move(T));
    }
    auto rv = validate(*G);
    if (!rv.ok) throw invalid_input("grothendieck: " + rv.errors[0]);
    build_total(*G);
  } else {
    throw invalid_input("fibration: want \"corpus\" or \"grothendieck\"");
  }
  return bundle_of(G, bound);
}

}  // namespace hoco

#endif
