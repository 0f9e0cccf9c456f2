#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoco/flags.hpp"

using namespace hoco;

TEST_CASE("compact notation parse and print") {
  Flag f = flag_parse("<0,3,5|4||1,2>");
  REQUIRE(f.dim() == 3);
  CHECK(f.T[0] == ((1u << 0) | (1u << 3) | (1u << 5)));
  CHECK(f.T[1] == (f.T[0] | (1u << 4)));
  CHECK(f.T[2] == f.T[1]);
  CHECK(f.T[3] == 0b111111u);
  CHECK(f.valid());
  CHECK(!f.nondegenerate());
  CHECK(!f.atomic());
  CHECK(flag_str(f) == "<0,3,5|4||1,2>");
  CHECK(flag_parse(flag_str(f)) == f);

  CHECK(flag_parse("<0,1>").strictly_atomic());
  CHECK(flag_parse("<2>").is_identity());
  CHECK_THROWS_AS(flag_parse("<1,3|0>"), invalid_input);  // 0 outside [1,3]
}

TEST_CASE("composition is pointwise union and whiskering works") {
  Flag a = flag_parse("<0,2|1>");
  Flag b = flag_parse("<2,4|3|>");
  // dims differ: compose after degeneracy alignment
  Flag a2 = flag_act(a, SOp{1, {0, 1, 1}});
  CHECK_THROWS_AS(flag_then(a, b), invalid_input);
  Flag c = flag_then(a2, b);
  CHECK(c.lo() == 0);
  CHECK(c.hi() == 4);
  CHECK(c.T[0] == (0b10101u));
  CHECK(c.T[2] == (0b11111u));
  // whiskering with a vertex flag only enlarges the bottom
  Flag v = flag_parse("<0,2>");
  Flag w = flag_parse("<2,5|3,4>");
  Flag vw = flag_then(flag_act(v, op_const(1, 0, 0)), w);
  CHECK(flag_str(vw) == "<0,2,5|3,4>");
}

TEST_CASE("identity and operator actions") {
  Flag f = flag_parse("<0,4|2|1,3>");
  // degeneracy then faces
  Flag g = flag_act(f, op_sigma(2, 0));
  CHECK(!g.nondegenerate());
  auto [epi, strict] = flag_ez(g);
  CHECK(strict == f);
  CHECK(epi == op_sigma(2, 0));
  // vertex image under a monotone map collapsing 1,2
  SOp b{3, {0, 1, 1, 2, 3}};  // [4] -> [3]
  Flag h = flag_image(f, b);
  CHECK(h.T[0] == ((1u << 0) | (1u << 3)));
  CHECK(h.T[1] == ((1u << 0) | (1u << 1) | (1u << 3)));
}

TEST_CASE("atomic decomposition splits at bottom interior points") {
  Flag f = flag_parse("<0,2,5|1,4|3>");
  auto pieces = flag_atoms(f);
  REQUIRE(pieces.size() == 2);
  CHECK(flag_str(pieces[0]) == "<0,2|1|>");
  CHECK(flag_str(pieces[1]) == "<2,5|4|3>");
  CHECK(flag_then(pieces[0], pieces[1]) == f);
  // identities decompose into nothing
  CHECK(flag_atoms(flag_identity(3, 2)).empty());
}

static long long surj(int s, int r) {
  // surjections from an s-set onto r ordered nonempty blocks
  long long total = 0;
  auto binom = [](int n, int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  for (int i = 0; i <= r; ++i) {
    long long p = 1;
    for (int q = 0; q < s; ++q) p *= (r - i);
    total += (i % 2 == 0 ? 1 : -1) * binom(r, i) * p;
  }
  return total;
}

TEST_CASE("bead shape counts match the ordered-partition formula") {
  auto binom = [](int n, int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  for (int n = 1; n <= 6; ++n) {
    long long total = 0;
    for (int r = 0; r <= n - 1; ++r) {
      long long count = static_cast<long long>(bead_shapes(n, r).size());
      CHECK(count == surj(n - 1, r));
      total += count;
    }
    (void)binom;
    (void)total;
  }
  CHECK(bead_shapes(2, 1).size() == 1);
  CHECK(bead_shapes(3, 1).size() + bead_shapes(3, 2).size() == 3);
}

TEST_CASE("coherent simplex computads validate") {
  for (int n = 0; n <= 4; ++n) {
    auto C = coherent_simplex(n);
    CHECK(validate(C.comp).ok);
    // atom counts from k to l: choose a support of size s inside the open
    // interval, then an ordered partition into r blocks
    auto binom = [](int n_, int k_) {
      long long v = 1;
      for (int i = 0; i < k_; ++i) v = v * (n_ - i) / (i + 1);
      return v;
    };
    for (int r = 0; r <= std::max(n - 1, 0); ++r) {
      long long expect = 0;
      for (int k = 0; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (int s = r; s <= l - k - 1; ++s) expect += binom(l - k - 1, s) * surj(s, r);
      CHECK(static_cast<long long>(C.comp.size(r)) == expect);
    }
  }
}

TEST_CASE("flag words round trip through the computad") {
  auto C = coherent_simplex(4);
  for (int r = 0; r <= 3; ++r)
    for (auto& atom_layer : {0}) {
      (void)atom_layer;
      for (int i = 0; i < C.comp.size(r); ++i) {
        const Flag& f = C.flag_of(AtomId{r, i});
        Word w = C.word_of(f);
        CHECK(C.flag_of_word(w) == f);
        CHECK(w.letters.size() == 1);
      }
    }
  // a composite, degenerate flag
  Flag f = flag_parse("<0,2,4|3||1>");
  Word w = C.word_of(f);
  CHECK(w.letters.size() == 2);
  CHECK(C.flag_of_word(w) == f);
  // operator action on words matches flag reindexing
  for (int m = 0; m <= 3; ++m)
    for (auto& a : all_monotone(m, 3)) {
      Word wa = C.comp.act_word(w, a);
      CHECK(C.flag_of_word(wa) == flag_act(f, a));
    }
}

TEST_CASE("function complexes are cubes") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l <= n; ++l) {
        auto F = flag_complex(n, k, l, full_top_filter());
        CHECK(validate(*F.set).ok);
        auto cb = cube(l - k - 1, l - k);
        SMap iso = cube_comparison(F, cb);
        CHECK(validate(iso).ok);
        for (int d = 0; d <= cb.set->top_dim(); ++d) {
          CHECK(F.set->size(d) == cb.set->size(d));
          // bijective on cells
          std::set<int> hit;
          for (int i = 0; i < F.set->size(d); ++i) {
            EZ im = iso.on_cell(CellId{d, i});
            CHECK(!im.degenerate());
            hit.insert(im.cell.idx);
          }
          CHECK(static_cast<int>(hit.size()) == F.set->size(d));
        }
      }
  }
}

TEST_CASE("boundary and horn function complexes") {
  for (int n = 2; n <= 4; ++n) {
    auto Fb = flag_complex(n, 0, n, boundary_top_filter(n));
    auto cb = cube(n - 1, n - 1);
    auto bnd = restrict_subcomplex(cube_boundary_sub(cb));
    for (int d = 0; d <= n - 1; ++d) CHECK(Fb.set->size(d) == bnd.set->size(d));
    for (int k = 1; k < n; ++k) {
      auto Fh = flag_complex(n, 0, n, horn_top_filter(n, k));
      auto horn = restrict_subcomplex(cube_horn_sub(cb, k - 1, 1));
      for (int d = 0; d <= n - 1; ++d) CHECK(Fh.set->size(d) == horn.set->size(d));
    }
    // outer horns: the missing face sits at the end
    auto F0 = flag_complex(n, 0, n, horn_top_filter(n, 0));
    auto Fn = flag_complex(n, 0, n, horn_top_filter(n, n));
    CHECK(F0.set->total_cells() < Fb.set->total_cells() + 1);
    CHECK(Fn.set->total_cells() == F0.set->total_cells());
  }
}

TEST_CASE("subcomputad inclusions of the coherent simplex") {
  for (int n = 2; n <= 3; ++n) {
    auto full = coherent_simplex(n);
    for (int k = 0; k <= n; ++k) {
      auto sub = coherent_simplex(n, horn_top_filter(n, k));
      CHECK(validate(sub.comp).ok);
      CFunctor inc;
      inc.src = &sub.comp;
      inc.tgt = &full.comp;
      for (int o = 0; o < sub.comp.n_objects; ++o) inc.on_obj.push_back(o);
      inc.on_atom.resize(static_cast<size_t>(sub.comp.top_dim()) + 1);
      for (int d = 0; d <= sub.comp.top_dim(); ++d)
        for (int i = 0; i < sub.comp.size(d); ++i)
          inc.on_atom[static_cast<size_t>(d)].push_back(
              full.comp.word_of_atom(full.atom_of(sub.flag_of(AtomId{d, i}))));
      CHECK(subcomputad_check(inc).ok);
    }
  }
}
