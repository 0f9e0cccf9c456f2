#ifndef HOCO_CHECKS_HPP
#define HOCO_CHECKS_HPP

#include <chrono>
#include <set>

#include "hoco/corpus.hpp"

// Exhaustive desk-scale verification suite. Each check returns a record
// keyed by the statement anchor it certifies; the CLI prints these as the
// verification report and the acceptance runner turns them into test lines.

namespace hoco {

struct CheckResult {
  std::string anchor;
  std::string title;
  bool pass = false;
  std::string detail;
};

namespace checks_detail {

struct Recorder {
  bool ok = true;
  long long count = 0;
  std::string first;

  void expect(bool b, const std::string& what) {
    ++count;
    if (!b && ok) first = what;
    if (!b) ok = false;
  }
};

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline CheckResult finish(std::string anchor, std::string title, const Recorder& r,
                          std::string extra = "") {
  CheckResult c;
  c.anchor = std::move(anchor);
  c.title = std::move(title);
  c.pass = r.ok;
  c.detail = r.ok ? std::to_string(r.count) + " checks" + (extra.empty() ? "" : "; " + extra)
                  : r.first;
  return c;
}

inline CheckResult failure(std::string anchor, std::string title, const std::string& why) {
  CheckResult c;
  c.anchor = std::move(anchor);
  c.title = std::move(title);
  c.pass = false;
  c.detail = why;
  return c;
}

inline int sz(SSetPtr X, int d) { return d <= X->top_dim() ? X->size(d) : 0; }

inline int mor_of_edge_string(const NerveSSet& N, const EZ& e) {
  auto [start, w] = N.string_of_simplex(e);
  (void)start;
  return w[0];
}

inline int base_arrow(const Grothendieck& G, int a, int b) {
  for (int m : G.base.hom(a, b))
    if (!G.base.is_id(m)) return m;
  throw invalid_input("no base arrow");
}

/// Edges become invertible and parallel edges homotopic: the space is a
/// disjoint union of contractible pieces as far as dimension two sees.
inline bool homotopy_discrete(SSetPtr H, std::string* why = nullptr) {
  if (H->size(0) == 0) return true;
  HoCat hc = homotopy_category(H);
  for (int m = 0; m < hc.cat.n_mor(); ++m)
    if (!hc.cat.is_iso(m)) {
      if (why) *why = "non-invertible edge class in " + H->name;
      return false;
    }
  for (int a = 0; a < hc.cat.n_obj; ++a)
    for (int b = 0; b < hc.cat.n_obj; ++b)
      if (hc.cat.hom(a, b).size() > 1) {
        if (why) *why = "parallel non-homotopic edges in " + H->name;
        return false;
      }
  return true;
}

}  // namespace checks_detail

// ---------------------------------------------------------------------------
// 1. function complexes of realized simplices are cubes, compositionally
// ---------------------------------------------------------------------------

inline CheckResult check_cube_isomorphism() {
  using namespace checks_detail;
  Recorder r;
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<FlagComplex>> F(static_cast<size_t>(n + 1));
    std::vector<std::vector<CubeSSet>> Cb(static_cast<size_t>(n + 1));
    std::vector<std::vector<SMap>> iso(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
      F[static_cast<size_t>(k)].resize(static_cast<size_t>(n + 1));
      Cb[static_cast<size_t>(k)].resize(static_cast<size_t>(n + 1));
      iso[static_cast<size_t>(k)].resize(static_cast<size_t>(n + 1));
    }
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l <= n; ++l) {
        auto Fc = flag_complex(n, k, l, full_top_filter());
        auto cb = cube(l - k - 1, l - k);
        SMap u = cube_comparison(Fc, cb);
        r.expect(validate(u).ok, "cube comparison not simplicial at n=" + std::to_string(n));
        for (int d = 0; d <= cb.set->top_dim(); ++d) {
          r.expect(Fc.set->size(d) == cb.set->size(d),
                   "cell count mismatch with the cube at n=" + std::to_string(n));
          std::set<int> hit;
          for (int i = 0; i < Fc.set->size(d); ++i) {
            EZ im = u.on_cell(CellId{d, i});
            r.expect(!im.degenerate(), "comparison degenerates a cell");
            hit.insert(im.cell.idx);
          }
          r.expect(static_cast<int>(hit.size()) == Fc.set->size(d), "comparison not injective");
        }
        F[static_cast<size_t>(k)][static_cast<size_t>(l)] = Fc;
        Cb[static_cast<size_t>(k)][static_cast<size_t>(l)] = cb;
        iso[static_cast<size_t>(k)][static_cast<size_t>(l)] = u;
      }
    // composition corresponds to inserting a constant-1 coordinate
    for (int k = 0; k < n; ++k)
      for (int j = k + 1; j < n; ++j)
        for (int l = j + 1; l <= n; ++l) {
          auto& Fkj = F[static_cast<size_t>(k)][static_cast<size_t>(j)];
          auto& Fjl = F[static_cast<size_t>(j)][static_cast<size_t>(l)];
          auto& Fkl = F[static_cast<size_t>(k)][static_cast<size_t>(l)];
          int rmax = std::min(l - k, 3);
          for (int d = 0; d <= rmax; ++d)
            for (auto& xs : Fkj.set->simplices(d))
              for (auto& ys : Fjl.set->simplices(d)) {
                Flag x = Fkj.flag_of_simplex(xs);
                Flag y = Fjl.flag_of_simplex(ys);
                Flag z = flag_then(x, y);
                EZ xim = iso[static_cast<size_t>(k)][static_cast<size_t>(j)].apply(xs);
                EZ yim = iso[static_cast<size_t>(j)][static_cast<size_t>(l)].apply(ys);
                EZ zim = iso[static_cast<size_t>(k)][static_cast<size_t>(l)].apply(Fkl.simplex(z));
                auto& ckj = Cb[static_cast<size_t>(k)][static_cast<size_t>(j)];
                auto& cjl = Cb[static_cast<size_t>(j)][static_cast<size_t>(l)];
                auto& ckl = Cb[static_cast<size_t>(k)][static_cast<size_t>(l)];
                SOp one;
                one.target = 1;
                one.img.assign(static_cast<size_t>(d) + 1, 1);
                bool good = true;
                for (int w = k + 1; w <= l - 1; ++w) {
                  SOp got = ckl.coord(zim, w - (k + 1));
                  SOp want = w < j   ? ckj.coord(xim, w - (k + 1))
                             : w == j ? one
                                      : cjl.coord(yim, w - (j + 1));
                  if (!(got == want)) good = false;
                }
                r.expect(good, "composition does not transport to coordinate insertion");
              }
        }
  }
  double dt = seconds_since(t0);
  Recorder rr = r;
  rr.expect(dt < 10.0, "cube comparisons took too long");
  return finish("observation:hcsimp-cubes",
                "function complexes of realized simplices are cubes", rr,
                std::to_string(dt).substr(0, 4) + "s");
}

// ---------------------------------------------------------------------------
// 2. unique atomic factorization
// ---------------------------------------------------------------------------

inline CheckResult check_unique_factorization() {
  using namespace checks_detail;
  Recorder r;
  for (int n = 2; n <= 4; ++n) {
    auto C = coherent_simplex(n);
    const Computad& K = C.comp;
    // atoms grouped by source object
    std::vector<std::vector<AtomId>> by_src(static_cast<size_t>(K.n_objects));
    for (int d = 0; d <= K.top_dim(); ++d)
      for (int i = 0; i < K.size(d); ++i)
        by_src[static_cast<size_t>(K.atom(AtomId{d, i}).src)].push_back(AtomId{d, i});
    for (int k = 0; k < K.n_objects; ++k)
      for (int l = k + 1; l < K.n_objects; ++l) {
        auto F = flag_complex(n, k, l, full_top_filter());
        for (int dim = 0; dim <= 3; ++dim) {
          long long expect = static_cast<long long>(F.set->simplices(dim).size());
          std::set<Flag> seen;
          long long sequences = 0;
          std::vector<Letter> path;
          std::function<void(int)> dfs = [&](int o) {
            if (o == l && !path.empty()) {
              ++sequences;
              Word w;
              w.src = k;
              w.tgt = l;
              w.dim = dim;
              w.letters = path;
              seen.insert(C.flag_of_word(w));
              return;
            }
            if (o >= l) return;
            for (auto& a : by_src[static_cast<size_t>(o)]) {
              if (a.dim > dim) continue;
              for (auto& e : all_epis(dim, a.dim)) {
                path.push_back(Letter{e, a});
                dfs(K.atom(a).tgt);
                path.pop_back();
              }
            }
          };
          dfs(k);
          r.expect(sequences == expect,
                   "atomic sequences miscount arrows at n=" + std::to_string(n));
          r.expect(static_cast<long long>(seen.size()) == expect,
                   "atomic factorization not unique at n=" + std::to_string(n));
        }
      }
    r.expect(validate(K).ok, "realized simplex computad invalid");
  }
  return finish("lemma:simplex-computad", "unique atomic factorization of realized simplices", r);
}

// ---------------------------------------------------------------------------
// 3. bead shapes against the independent partition enumerator
// ---------------------------------------------------------------------------

inline CheckResult check_bead_shape_counts() {
  using namespace checks_detail;
  Recorder r;
  // ordered set partitions counted by inclusion-exclusion over surjections
  auto binom = [](int n, int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  auto surj = [&](int s, int blocks) {
    long long total = 0;
    for (int i = 0; i <= blocks; ++i) {
      long long p = 1;
      for (int q = 0; q < s; ++q) p *= (blocks - i);
      total += (i % 2 == 0 ? 1 : -1) * binom(blocks, i) * p;
    }
    return total;
  };
  std::vector<long long> fubini = {0, 0, 1, 3, 13, 75};
  for (int n = 2; n <= 5; ++n) {
    long long total = 0;
    for (int blocks = 0; blocks <= n - 1; ++blocks) {
      long long count = static_cast<long long>(bead_shapes(n, blocks).size());
      r.expect(count == surj(n - 1, blocks),
               "bead shape count disagrees with the partition enumerator");
      if (blocks >= 1) total += count;
    }
    r.expect(total == fubini[static_cast<size_t>(n)],
             "total bead shapes off at n=" + std::to_string(n));
  }
  return finish("lemma:bead-shapes", "bead shapes count ordered set partitions", r);
}

// ---------------------------------------------------------------------------
// 4. boundary and horn function complexes
// ---------------------------------------------------------------------------

inline CheckResult check_boundary_horn_complexes() {
  using namespace checks_detail;
  Recorder r;
  for (int n = 2; n <= 4; ++n) {
    auto cb = cube(n - 1, n - 1);
    auto Fb = flag_complex(n, 0, n, boundary_top_filter(n));
    auto bnd = restrict_subcomplex(cube_boundary_sub(cb));
    for (int d = 0; d <= n - 1; ++d)
      r.expect(Fb.set->size(d) == bnd.set->size(d), "boundary complex is not the cube boundary");
    for (int k = 1; k < n; ++k) {
      auto Fh = flag_complex(n, 0, n, horn_top_filter(n, k));
      auto horn = restrict_subcomplex(cube_horn_sub(cb, k - 1, 1));
      for (int d = 0; d <= n - 1; ++d)
        r.expect(Fh.set->size(d) == horn.set->size(d),
                 "inner horn complex is not the cubical horn");
    }
    auto F0 = flag_complex(n, 0, n, horn_top_filter(n, 0));
    auto Fn = flag_complex(n, 0, n, horn_top_filter(n, n));
    r.expect(F0.set->total_cells() == Fn.set->total_cells(),
             "outer horn complexes differ in size");
    r.expect(F0.set->total_cells() <= Fb.set->total_cells(),
             "outer horn complex exceeds the boundary");
    // the realized subcomplexes agree with the filtered presentations
    auto st = standard(n);
    auto Rb = realize(restrict_subcomplex(boundary_sub(st)).set);
    auto Cbd = coherent_simplex(n, boundary_top_filter(n));
    for (int d = 0; d <= Cbd.comp.top_dim(); ++d)
      r.expect(Rb.comp.size(d) == Cbd.comp.size(d), "realized boundary atom count off");
    for (int k = 0; k <= n; ++k) {
      auto Rh = realize(restrict_subcomplex(horn_sub(st, k)).set);
      auto Ch = coherent_simplex(n, horn_top_filter(n, k));
      for (int d = 0; d <= Ch.comp.top_dim(); ++d)
        r.expect(Rh.comp.size(d) == Ch.comp.size(d), "realized horn atom count off");
    }
  }
  return finish("example:subcomputad-of-simplex",
                "boundary and horn function complexes match cubical shapes", r);
}

// ---------------------------------------------------------------------------
// 5. the comparison-functor square
// ---------------------------------------------------------------------------

inline CheckResult check_comparison_square() {
  using namespace checks_detail;
  Recorder r;
  std::vector<SSetPtr> shapes;
  for (int n = 0; n <= 3; ++n) shapes.push_back(standard(n).set);
  shapes.push_back(restrict_subcomplex(boundary_sub(standard(2))).set);
  shapes.push_back(product(standard(1).set, standard(1).set, 4).set);
  for (auto& U : shapes) {
    auto S = right_suspension(U);
    auto susp = suspension(U, U->top_dim() + 1);
    auto three = three_cat(U);
    auto J2 = join_with_point(S.set);
    auto R = realize(J2.set);
    auto twoR = two_cat(S.set);
    auto twoS = two_cat(susp.set);
    SFunctor v = triple_comparison_functor(R, J2, S, three);
    r.expect(validate(v).ok, "triple comparison functor invalid on " + U->name);
    SMap u = suspension_comparison_map(susp, S);
    r.expect(validate(u).ok, "suspension comparison map invalid on " + U->name);
    SCatFunctor s = quotient_to_suspension_functor(three, susp, twoS);
    SFunctor left = cone_collapse_functor(R, J2, twoR.cat);
    SFunctor right = compose(two_of_map(u, twoS, twoR), compose(s, v));
    r.expect(validate(right).ok, "composite comparison functor invalid on " + U->name);
    r.expect(sfunctor_equal(left, right), "comparison square fails on " + U->name);
  }
  return finish("lemma:commuting-comparisons", "the comparison-functor square commutes", r);
}

// ---------------------------------------------------------------------------
// 6. coherent nerves of Kan-enriched categories are quasi-categories
// ---------------------------------------------------------------------------

inline CheckResult check_nerve_quasicategory() {
  using namespace checks_detail;
  Recorder r;
  long long horns = 0;
  {
    auto C = bz2_scat(4);
    auto N = coherent_nerve(C, 4);
    r.expect(validate(*N.set).ok, "coherent nerve of the enriched group invalid");
    auto rep = quasicategory_check(N.set, 4);
    horns += rep.horns_checked;
    r.expect(rep.ok, "inner horn unfilled in the enriched group nerve");
  }
  std::vector<FinCat> cats = {linear_cat(3), cyclic2_cat(), walking_iso_cat(),
                              discrete_cat(2, "pair")};
  for (auto& D : cats) {
    auto S = scat_of_fincat(D);
    auto N = coherent_nerve(S.cat, 4);
    auto rep = quasicategory_check(N.set, 4);
    horns += rep.horns_checked;
    r.expect(rep.ok, "inner horn unfilled in the nerve of " + D.name);
    auto M = nerve_of_category(D, 4);
    for (int d = 0; d <= 4; ++d)
      r.expect(N.set->size(d) == M.set->size(d),
               "coherent nerve differs from the classical nerve of " + D.name);
  }
  return finish("proposition:qcat-from-kan-enriched",
                "coherent nerves fill inner horns through dimension 4", r,
                std::to_string(horns) + " horns filled");
}

// ---------------------------------------------------------------------------
// 7. nerve duality
// ---------------------------------------------------------------------------

inline CheckResult check_nerve_duality() {
  using namespace checks_detail;
  Recorder r;
  std::vector<FinCat> cats = {linear_cat(3), cyclic2_cat()};
  for (auto& D : cats) {
    auto S = scat_of_fincat(D);
    auto NC = coherent_nerve(S.cat, 4);
    auto NCd = coherent_nerve(op_scat(S.cat), 4);
    SMap f = nerve_duality_map(NC, opposite(NC.set), NCd);
    r.expect(validate(f).ok, "duality map not operator-equivariant for " + D.name);
    for (int d = 0; d <= 4; ++d) {
      r.expect(NC.set->size(d) == NCd.set->size(d), "dual nerve size mismatch for " + D.name);
      std::set<int> seen;
      for (int i = 0; i < NC.set->size(d); ++i) {
        const EZ& im = f.on_cell(CellId{d, i});
        r.expect(im.epi.is_identity(), "duality map degenerates a cell");
        seen.insert(im.cell.idx);
      }
      r.expect(static_cast<int>(seen.size()) == NC.set->size(d), "duality map not bijective");
    }
  }
  return finish("lemma:nerve-duals", "the nerve intertwines categorical and simplicial duals", r);
}

// ---------------------------------------------------------------------------
// 8. hom-space comparisons
// ---------------------------------------------------------------------------

inline CheckResult check_hom_comparisons() {
  using namespace checks_detail;
  Recorder r;
  // the embedding collapses the cylinder top onto the last vertex; checked on
  // every level simplex, degenerate or not, through the stated dimension
  auto vertex_table = [&](SSetPtr A, int a, int b, int bound) {
    auto R = right_hom(A, a, b, bound);
    auto H = hom_space(A, a, b, bound);
    SMap u = u_comparison(R, H);
    r.expect(validate(u).ok, "right hom comparison not simplicial");
    for (int n = 0; n <= bound; ++n) {
      auto level = R.set->simplices(n);
      r.expect(!level.empty(), "right hom empty at n=" + std::to_string(n));
      for (const EZ& s : level) {
        // ambient representative: extend the epi by the fixed last vertex
        SOp ext{s.epi.target + 1, s.epi.img};
        ext.img.push_back(s.epi.target + 1);
        EZ x = A->act(R.rep(s.cell), ext);
        EZ im = u.apply(s);
        Comma::Trip t = H.act_trip(H.trip(im.cell), im.cell.dim, im.epi);
        const MultiProduct& cyl = H.cyls[static_cast<size_t>(n)];
        bool table_ok = true;
        for (int v = 0; v <= n; ++v)
          for (int e = 0; e <= 1; ++e) {
            EZ vx = cyl.simplex({EZ{op_identity(0), CellId{0, v}}, EZ{op_identity(0), CellId{0, e}}});
            CellId got = t.theta.apply(vx).cell;
            CellId want = A->vertex(x, e == 0 ? v : n + 1);
            if (got != want) table_ok = false;
          }
        r.expect(table_ok, "cylinder vertex table wrong at n=" + std::to_string(n));
      }
    }
  };
  vertex_table(standard(3).set, 0, 3, 3);
  // a non-nerve ambient whose right hom has nondegenerate higher cells
  vertex_table(coherent_nerve(bz2_scat(3), 3).set, 0, 0, 2);
  // injectivity of both comparisons on the corpus
  std::vector<FinCat> cats = {linear_cat(2), cyclic2_cat()};
  for (auto& D : cats) {
    auto M = nerve_of_category(D, 4);
    for (int a = 0; a < D.n_obj; ++a)
      for (int b = 0; b < D.n_obj; ++b) {
        auto R = right_hom(M.set, a, b, 2);
        auto H = hom_space(M.set, a, b, 2);
        SMap u = u_comparison(R, H);
        std::set<EZ> seen;
        bool inj = true;
        for (int d = 0; d <= 2; ++d)
          for (int i = 0; i < sz(R.set, d); ++i) {
            EZ im = u.on_cell(CellId{d, i});
            if (!im.epi.is_identity() || seen.count(im)) inj = false;
            seen.insert(im);
          }
        r.expect(inj, "right hom comparison not injective on " + D.name);
        // homotopy discreteness with the hom-set count of the category
        int homsz = static_cast<int>(D.hom(a, b).size());
        std::string why;
        for (SSetPtr h : {R.set, left_hom(M.set, a, b, 2).set, H.set}) {
          r.expect(h->size(0) == 0 ? homsz == 0 : pi0_count(h) == homsz,
                   "components of " + h->name + " are not the hom set");
          r.expect(homotopy_discrete(h, &why), why);
        }
      }
  }
  // the function complex embeds in the right hom space of the nerve
  {
    auto C = bz2_scat(2);
    auto N = coherent_nerve(C, 3);
    auto R = right_hom(N.set, 0, 0, 2);
    SMap f = fun_to_rhom(N, 0, 0, R);
    r.expect(validate(f).ok, "function complex comparison not simplicial");
    std::set<std::pair<std::pair<int, int>, SOp>> seen;
    bool inj = true;
    for (int d = 0; d <= f.src->top_dim(); ++d)
      for (int i = 0; i < f.src->size(d); ++i) {
        const EZ& im = f.on_cell(CellId{d, i});
        auto key = std::make_pair(std::make_pair(im.cell.dim, im.cell.idx), im.epi);
        if (seen.count(key)) inj = false;
        seen.insert(key);
      }
    r.expect(inj, "function complex comparison not injective");
    auto S = scat_of_fincat(linear_cat(2));
    auto ND = coherent_nerve(S.cat, 3);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        auto RD = right_hom(ND.set, a, b, 2);
        SMap g = fun_to_rhom(ND, a, b, RD);
        r.expect(validate(g).ok, "discrete function complex comparison invalid");
        r.expect(g.src->size(0) == RD.set->size(0),
                 "discrete comparison misses right hom vertices");
      }
  }
  return finish("proposition:hom-space-comparison",
                "hom-space comparison maps are injective with the stated vertex table", r);
}

// ---------------------------------------------------------------------------
// 9. cocartesian detection against the classical criterion
// ---------------------------------------------------------------------------

inline CheckResult check_cocartesian_detection() {
  using namespace checks_detail;
  Recorder r;
  for (auto& G : grothendieck_corpus()) {
    auto bdl = bundle_of(G, 3);
    r.expect(is_cocartesian_fibration(bdl.proj, 3).ok,
             "projection of " + G->total.name + " fails the fibration test");
    for (auto& e : bdl.NE->set->simplices(1)) {
      int m = mor_of_edge_string(*bdl.NE, e);
      r.expect(is_cocartesian_edge(bdl.proj, e, 3).ok == G->classically_cocartesian(m),
               "lifting test disagrees with the classical criterion in " + G->total.name);
    }
    r.expect(cocartesian_closure_check(bdl.proj, 3).ok,
             "closure properties fail in " + G->total.name);
  }
  return finish("lemma:qcat-cocart",
                "edge lifting test matches the classical criterion with closures", r);
}

// ---------------------------------------------------------------------------
// 10. comprehension
// ---------------------------------------------------------------------------

inline CheckResult check_comprehension() {
  using namespace checks_detail;
  Recorder r;
  for (auto& G : grothendieck_corpus()) {
    auto bdl = bundle_of(G, 3);
    // fibres are the nerves of the pointwise categories, on the nose
    for (int b = 0; b < G->base.n_obj; ++b) {
      auto F = fibre(bdl.proj, b);
      auto NF = nerve_of_category(G->fibre[static_cast<size_t>(b)], 3);
      for (int d = 0; d <= 3; ++d)
        r.expect(sz(F.set, d) == sz(NF.set, d), "fibre differs from the pointwise nerve");
    }
    // transported fibres are nerves of the transition functors, exactly
    for (int m = 0; m < G->base.n_mor(); ++m) {
      if (G->base.is_id(m)) continue;
      int b = G->base.mors[static_cast<size_t>(m)].tgt;
      auto C = comprehension_edge(bdl.proj, bdl.edge_of_base(m), 3);
      r.expect(validate(C.transport).ok, "transport map invalid");
      const FinFunctor& T = G->transition[static_cast<size_t>(m)];
      for (int d = 0; d <= C.Fa.set->top_dim(); ++d)
        for (int i = 0; i < C.Fa.set->size(d); ++i) {
          EZ amb = C.Fa.inclusion.on_cell(CellId{d, i});
          auto [start, w] = bdl.NE->string_of_simplex(amb);
          std::vector<int> img;
          for (int tm : w) {
            const auto& key = G->mor_key[static_cast<size_t>(tm)];
            img.push_back(
                G->total_mor(G->base.id(b), T.obj(key.fib_src_obj), T.mor(key.fib_mor)));
          }
          int base_obj =
              d == 0 ? G->total_obj(b, T.obj(G->obj_key[static_cast<size_t>(start)].second)) : -1;
          auto expect = C.Fb.to_sub(bdl.NE->simplex_of(img, base_obj));
          r.expect(expect.has_value() && C.transport.on_cell(CellId{d, i}) == *expect,
                   "transport differs from the transition nerve");
        }
    }
    for (int b = 0; b < G->base.n_obj; ++b) {
      auto C = comprehension_edge(bdl.proj, EZ{op_const(1, 0, 0), CellId{0, b}}, 3);
      r.expect(C.transport == identity_smap(C.Fa.set), "identity edge transport not an identity");
    }
  }
  // composition up to homotopy class
  {
    auto G = groth_chain();
    auto bdl = bundle_of(G, 3);
    auto Cf = comprehension_edge(bdl.proj, bdl.edge_of_base(base_arrow(*G, 0, 1)), 3);
    auto Cg = comprehension_edge(bdl.proj, bdl.edge_of_base(base_arrow(*G, 1, 2)), 3);
    auto Ch = comprehension_edge(bdl.proj, bdl.edge_of_base(base_arrow(*G, 0, 2)), 3);
    HoCat h0 = homotopy_category(Cf.Fa.set);
    HoCat h1 = homotopy_category(Cg.Fa.set);
    HoCat h2 = homotopy_category(Ch.Fb.set);
    FinFunctor F21 = compose(h_functor(Cg.transport, h1, h2), h_functor(Cf.transport, h0, h1));
    FinFunctor Fh = h_functor(Ch.transport, h0, h2);
    r.expect(Fh.on_obj == F21.on_obj && Fh.on_mor == F21.on_mor,
             "transport does not respect composition up to homotopy");
  }
  // change of base: restriction along an interval into the chain
  {
    auto G = groth_chain();
    auto bdl = bundle_of(G, 3);
    FinCat B1 = linear_cat(1);
    auto u = functor_by_objects(B1, G->base, {0, 1});
    auto NB1 = nerve_of_category(B1, 3);
    SMap nu = nerve_of_functor(u, NB1, *bdl.NB);
    Pullback P = pullback(nu, bdl.proj, 3);
    r.expect(is_cocartesian_fibration(P.to_left, 3).ok, "restricted projection not a fibration");
    for (auto& e : P.set->simplices(1))
      r.expect(is_cocartesian_edge(P.to_left, e, 3).ok ==
                   is_cocartesian_edge(bdl.proj, P.to_right.apply(e), 3).ok,
               "pullback square does not preserve and reflect cocartesian edges");
    auto Gr = groth_collapse();
    auto bdl_r = bundle_of(Gr, 3);
    FinFunctor emb;
    emb.src = &Gr->total;
    emb.tgt = &G->total;
    for (int o = 0; o < Gr->total.n_obj; ++o) {
      auto [b, x] = Gr->obj_key[static_cast<size_t>(o)];
      emb.on_obj.push_back(G->total_obj(u.obj(b), x));
    }
    for (int m = 0; m < Gr->total.n_mor(); ++m) {
      const auto& k = Gr->mor_key[static_cast<size_t>(m)];
      emb.on_mor.push_back(G->total_mor(u.mor(k.base_mor), k.fib_src_obj, k.fib_mor));
    }
    r.expect(validate(emb).ok, "restricted embedding invalid");
    SMap ne = nerve_of_functor(emb, *bdl_r.NE, *bdl.NE);
    for (int d = 0; d <= 3; ++d) {
      r.expect(sz(P.set, d) == sz(bdl_r.NE->set, d), "pullback size differs from restriction");
      std::set<CellId> seen;
      bool good = true;
      for (int i = 0; i < sz(bdl_r.NE->set, d); ++i) {
        auto c = P.cell_of(bdl_r.proj.on_cell(CellId{d, i}), ne.on_cell(CellId{d, i}));
        if (!c || !c->epi.is_identity()) good = false;
        if (c) seen.insert(c->cell);
      }
      r.expect(good && static_cast<int>(seen.size()) == sz(P.set, d),
               "pullback cells do not match the restricted comprehension");
    }
  }
  return finish("theorem:general-comprehension",
                "comprehension agrees with pointwise nerves, composition, and base change", r);
}

// ---------------------------------------------------------------------------
// 11. conservativity of the shape-3 extension
// ---------------------------------------------------------------------------

inline CheckResult check_extension_conservativity() {
  using namespace checks_detail;
  Recorder r;
  auto bdl = bundle_of(groth_flip(), 3);
  auto d = cone3_flip_instance(bdl);
  auto rep = extension_conservativity(d, 3);
  r.expect(rep.coherent, "instance data incoherent");
  r.expect(rep.nadir_cocartesian, "nadir projection not a cocartesian fibration");
  r.expect(rep.square_pullback, "naturality square not a pullback");
  r.expect(rep.arrows_cocartesian, "coherence arrows into the nadir not cocartesian");
  r.expect(rep.base_arrow_invertible, "base coherence arrow not invertible");
  r.expect(rep.projections_invertible, "projected coherence arrows not invertible");
  r.expect(rep.conclusion, "total coherence arrow not certified invertible");
  r.expect(rep.ok, rep.note.empty() ? "certificate incomplete" : rep.note);
  return finish("lemma:extension-conservativity",
                "the first coherence arrow is certified invertible", r);
}

// ---------------------------------------------------------------------------
// 12. slices over objects are right fibrations with hom-set fibres
// ---------------------------------------------------------------------------

inline CheckResult check_yoneda_slices() {
  using namespace checks_detail;
  Recorder r;
  std::vector<FinCat> cats = {linear_cat(1), linear_cat(2), cyclic2_cat(), walking_iso_cat()};
  for (auto& D : cats) {
    auto M = nerve_of_category(D, 4);
    for (int a = 0; a < D.n_obj; ++a) {
      auto Y = yoneda_object(M.set, a, 3);
      r.expect(validate(Y.proj).ok, "slice projection invalid over " + D.name);
      r.expect(is_right_fibration(Y.proj, 3).ok,
               "slice projection not a right fibration over " + D.name);
      for (int x = 0; x < D.n_obj; ++x) {
        auto F = fibre(Y.proj, x);
        int expect = static_cast<int>(D.hom(x, a).size());
        r.expect(F.set->size(0) == 0 ? expect == 0 : pi0_count(F.set) == expect,
                 "slice fibre components differ from the hom set of " + D.name);
      }
    }
  }
  return finish("definition:yoneda-embedding",
                "slice projections are right fibrations with hom-set fibres", r);
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_acceptance() {
  using namespace checks_detail;
  std::vector<std::pair<std::pair<std::string, std::string>, CheckResult (*)()>> table = {
      {{"observation:hcsimp-cubes", "cube isomorphism"}, &check_cube_isomorphism},
      {{"lemma:simplex-computad", "unique atomic factorization"}, &check_unique_factorization},
      {{"lemma:bead-shapes", "bead shape counts"}, &check_bead_shape_counts},
      {{"example:subcomputad-of-simplex", "boundary and horn complexes"},
       &check_boundary_horn_complexes},
      {{"lemma:commuting-comparisons", "comparison square"}, &check_comparison_square},
      {{"proposition:qcat-from-kan-enriched", "coherent nerve horns"},
       &check_nerve_quasicategory},
      {{"lemma:nerve-duals", "nerve duality"}, &check_nerve_duality},
      {{"proposition:hom-space-comparison", "hom comparisons"}, &check_hom_comparisons},
      {{"lemma:qcat-cocart", "cocartesian detection"}, &check_cocartesian_detection},
      {{"theorem:general-comprehension", "comprehension"}, &check_comprehension},
      {{"lemma:extension-conservativity", "conservativity"}, &check_extension_conservativity},
      {{"definition:yoneda-embedding", "yoneda slices"}, &check_yoneda_slices},
  };
  std::vector<CheckResult> out;
  for (auto& [meta, fn] : table) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back(checks_detail::failure(meta.first, meta.second, std::string("exception: ") + e.what()));
    }
  }
  return out;
}

}  // namespace hoco

#endif
