#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoco/flags.hpp"

using namespace hoco;

static Computad path_computad(int edges) {
  Computad K;
  K.n_objects = edges + 1;
  K.name = "path" + std::to_string(edges);
  for (int o = 0; o <= edges; ++o) K.obj_names.push_back("p" + std::to_string(o));
  K.atoms.resize(1);
  for (int e = 0; e < edges; ++e) {
    CAtom a;
    a.src = e;
    a.tgt = e + 1;
    a.label = "e" + std::to_string(e);
    K.atoms[0].push_back(a);
  }
  return K;
}

TEST_CASE("words compose and act") {
  Computad K = path_computad(3);
  CHECK(validate(K).ok);
  Word w1 = K.word_of_atom(AtomId{0, 0});
  Word w2 = K.word_of_atom(AtomId{0, 1});
  Word w = K.then(w1, w2);
  CHECK(w.src == 0);
  CHECK(w.tgt == 2);
  CHECK(w.letters.size() == 2);
  CHECK_THROWS_AS(K.then(w2, w1), invalid_input);
  // degeneracies act letterwise
  Word ws = K.act_word(w, op_sigma(0, 0));
  CHECK(ws.dim == 1);
  CHECK(ws.letters.size() == 2);
  CHECK(ws.letters[0].epi == op_const(1, 0, 0));
  // identities absorb
  Word idw = K.identity(1, 0);
  CHECK(K.then(w1, K.then(idw, w2)) == w);
}

TEST_CASE("validation rejects broken face words") {
  auto C = coherent_simplex(2);
  Computad broken = C.comp;
  // swap two face words of the 1-dimensional atom <0,2|1>
  REQUIRE(broken.size(1) == 1);
  std::swap(broken.atoms[1][0].faces[0], broken.atoms[1][0].faces[1]);
  CHECK(!validate(coherent_simplex(3).comp).errors.size());
  auto C3 = coherent_simplex(3);
  Computad b3 = C3.comp;
  std::swap(b3.atoms[2][0].faces[0], b3.atoms[2][0].faces[1]);
  CHECK_FALSE(validate(b3).ok);
}

TEST_CASE("subcomputad check detects a relation-style collapse") {
  // sending an atom to a composite word is exactly what imposing a relation
  // a.b = c looks like from the free side; the check must reject it
  Computad K = path_computad(2);
  Computad L = path_computad(2);
  CFunctor F;
  F.src = &K;
  F.tgt = &L;
  F.on_obj = {0, 1, 2};
  F.on_atom.resize(1);
  F.on_atom[0].push_back(L.word_of_atom(AtomId{0, 0}));
  F.on_atom[0].push_back(L.word_of_atom(AtomId{0, 1}));
  CHECK(subcomputad_check(F).ok);
  // now collapse: first atom goes to the composite
  F.on_obj = {0, 2, 2};
  F.on_atom[0][0] = L.then(L.word_of_atom(AtomId{0, 0}), L.word_of_atom(AtomId{0, 1}));
  F.on_atom[0][1] = L.identity(2, 0);
  CHECK_FALSE(subcomputad_check(F).ok);
}

TEST_CASE("pushout along a subcomputad") {
  // glue two paths end to start: object 2 of the left path is object 0 of
  // the right one
  Computad B = path_computad(2);
  Computad C = path_computad(2);
  Computad A;  // a single object
  A.n_objects = 1;
  A.obj_names = {"pt"};
  CFunctor incl;
  incl.src = &A;
  incl.tgt = &B;
  incl.on_obj = {2};
  CFunctor att;
  att.src = &A;
  att.tgt = &C;
  att.on_obj = {0};
  auto P = pushout_along_subcomputad(incl, att);
  CHECK(P.result.n_objects == 5);
  CHECK(P.result.size(0) == 4);
  CHECK(validate(P.result).ok);
  P.from_b.tgt = &P.result;
  P.from_c.tgt = &P.result;
  CHECK(validate(P.from_b).ok);
  CHECK(validate(P.from_c).ok);
  // square commutes
  for (int o = 0; o < A.n_objects; ++o)
    CHECK(P.from_b.obj(incl.obj(o)) == P.from_c.obj(att.obj(o)));
}

TEST_CASE("pushout gluing a coherent horn into a coherent simplex") {
  auto full = coherent_simplex(2);
  auto horn = coherent_simplex(2, horn_top_filter(2, 1));
  CFunctor inc;
  inc.src = &horn.comp;
  inc.tgt = &full.comp;
  for (int o = 0; o < horn.comp.n_objects; ++o) inc.on_obj.push_back(o);
  inc.on_atom.resize(static_cast<size_t>(horn.comp.top_dim()) + 1);
  for (int d = 0; d <= horn.comp.top_dim(); ++d)
    for (int i = 0; i < horn.comp.size(d); ++i)
      inc.on_atom[static_cast<size_t>(d)].push_back(
          full.comp.word_of_atom(full.atom_of(horn.flag_of(AtomId{d, i}))));
  // attach a second copy along the horn; the result is two coherent
  // triangles sharing the horn
  CFunctor att = inc;
  att.tgt = &full.comp;
  auto P = pushout_along_subcomputad(inc, att);
  CHECK(validate(P.result).ok);
  CHECK(P.result.n_objects == full.comp.n_objects);
  for (int d = 0; d <= full.comp.top_dim(); ++d)
    CHECK(P.result.size(d) == 2 * full.comp.size(d) - horn.comp.size(d));
}
