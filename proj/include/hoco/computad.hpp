#ifndef HOCO_COMPUTAD_HPP
#define HOCO_COMPUTAD_HPP

#include <functional>
#include <map>

#include "hoco/sset.hpp"

namespace hoco {

/// Atoms are the generating arrows of a free simplicial computad; every
/// arrow is a unique alternating word of degenerated atoms.
struct AtomId {
  int dim = -1;
  int idx = -1;
  bool operator==(const AtomId& o) const { return dim == o.dim && idx == o.idx; }
  bool operator!=(const AtomId& o) const { return !(*this == o); }
  bool operator<(const AtomId& o) const {
    if (dim != o.dim) return dim < o.dim;
    return idx < o.idx;
  }
  std::string str() const { return "a" + std::to_string(dim) + ":" + std::to_string(idx); }
};

struct Letter {
  SOp epi;      // [m] ->> [dim(atom)]
  AtomId atom;
  bool operator==(const Letter& o) const { return epi == o.epi && atom == o.atom; }
  bool operator<(const Letter& o) const {
    if (atom != o.atom) return atom < o.atom;
    return epi < o.epi;
  }
};

/// A normal-form arrow: a diagram-ordered path of letters from src to tgt.
/// No letters means the (degenerate) identity arrow at src == tgt.
struct Word {
  int src = -1, tgt = -1;
  int dim = 0;
  std::vector<Letter> letters;

  bool is_identity() const { return letters.empty(); }
  bool operator==(const Word& o) const {
    return src == o.src && tgt == o.tgt && dim == o.dim && letters == o.letters;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const {
    if (src != o.src) return src < o.src;
    if (tgt != o.tgt) return tgt < o.tgt;
    if (dim != o.dim) return dim < o.dim;
    return letters < o.letters;
  }
};

struct CAtom {
  int src = -1, tgt = -1;
  std::vector<Word> faces;  // r+1 face words for an r-dimensional atom
  std::string label;
};

struct Computad {
  int n_objects = 0;
  std::vector<std::string> obj_names;
  std::vector<std::vector<CAtom>> atoms;  // by dimension
  std::string name;

  int top_dim() const { return static_cast<int>(atoms.size()) - 1; }
  int size(int d) const {
    if (d < 0 || d > top_dim()) return 0;
    return static_cast<int>(atoms[static_cast<size_t>(d)].size());
  }
  const CAtom& atom(AtomId a) const {
    return atoms[static_cast<size_t>(a.dim)][static_cast<size_t>(a.idx)];
  }
  bool has(AtomId a) const {
    return a.dim >= 0 && a.dim <= top_dim() && a.idx >= 0 && a.idx < size(a.dim);
  }

  Word identity(int obj, int dim) const {
    Word w;
    w.src = w.tgt = obj;
    w.dim = dim;
    return w;
  }
  Word word_of_atom(AtomId a) const {
    Word w;
    w.src = atom(a).src;
    w.tgt = atom(a).tgt;
    w.dim = a.dim;
    w.letters.push_back(Letter{op_identity(a.dim), a});
    return w;
  }

  /// Diagrammatic composition: w1 from a to b, then w2 from b to c.
  Word then(const Word& w1, const Word& w2) const {
    if (w1.tgt != w2.src || w1.dim != w2.dim)
      throw invalid_input("word composition mismatch");
    Word w;
    w.src = w1.src;
    w.tgt = w2.tgt;
    w.dim = w1.dim;
    w.letters = w1.letters;
    w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
    return w;
  }

  /// The action f . b of an arbitrary operator on a single atom, in normal
  /// form. Face maps may break the atom into a composite word.
  Word act_atom(AtomId f, const SOp& b) const {
    auto fac = epi_mono_factor(b);
    if (fac.mono.is_identity()) {
      Word w;
      w.src = atom(f).src;
      w.tgt = atom(f).tgt;
      w.dim = b.source_dim();
      w.letters.push_back(Letter{fac.epi, f});
      return w;
    }
    // peel the largest missing value of the mono as a face
    int missing = -1;
    {
      std::vector<char> seen(static_cast<size_t>(fac.mono.target) + 1, 0);
      for (int v : fac.mono.img) seen[static_cast<size_t>(v)] = 1;
      for (int v = fac.mono.target; v >= 0; --v)
        if (!seen[static_cast<size_t>(v)]) { missing = v; break; }
    }
    const Word& fw = atom(f).faces[static_cast<size_t>(missing)];
    SOp rest;
    rest.target = fac.mono.target - 1;
    for (int v : fac.mono.img) rest.img.push_back(v < missing ? v : v - 1);
    Word w1 = act_word(fw, rest);
    return act_word(w1, fac.epi);
  }

  /// Letterwise operator action on a word, renormalised.
  Word act_word(const Word& w, const SOp& a) const {
    if (a.target != w.dim) throw invalid_input("word action: dimension mismatch");
    Word out;
    out.src = w.src;
    out.tgt = w.tgt;
    out.dim = a.source_dim();
    for (auto& l : w.letters) {
      Word piece = act_atom(l.atom, hoco::compose(l.epi, a));
      out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return out;
  }

  bool word_well_formed(const Word& w, std::string* why = nullptr) const {
    auto fail = [&](std::string m) {
      if (why) *why = std::move(m);
      return false;
    };
    if (w.src < 0 || w.src >= n_objects || w.tgt < 0 || w.tgt >= n_objects)
      return fail("bad endpoints");
    if (w.letters.empty()) return w.src == w.tgt ? true : fail("identity with src != tgt");
    int at = w.src;
    for (auto& l : w.letters) {
      if (!has(l.atom)) return fail("unknown atom");
      if (!l.epi.is_epi() || l.epi.target != l.atom.dim || l.epi.source_dim() != w.dim)
        return fail("bad letter operator");
      if (atom(l.atom).src != at) return fail("letters not composable");
      at = atom(l.atom).tgt;
    }
    return at == w.tgt ? true : fail("word target mismatch");
  }
};

inline ValidationReport validate(const Computad& K) {
  ValidationReport r;
  for (int d = 0; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      AtomId a{d, i};
      const CAtom& at = K.atom(a);
      if (at.src < 0 || at.src >= K.n_objects || at.tgt < 0 || at.tgt >= K.n_objects) {
        r.fail("atom " + a.str() + " has bad endpoints");
        continue;
      }
      if (static_cast<int>(at.faces.size()) != (d == 0 ? 0 : d + 1)) {
        r.fail("atom " + a.str() + " has wrong face count");
        continue;
      }
      for (int j = 0; j <= d && d > 0; ++j) {
        const Word& fw = at.faces[static_cast<size_t>(j)];
        std::string why;
        if (!K.word_well_formed(fw, &why)) {
          r.fail("atom " + a.str() + " face " + std::to_string(j) + ": " + why);
          continue;
        }
        if (fw.dim != d - 1 || fw.src != at.src || fw.tgt != at.tgt)
          r.fail("atom " + a.str() + " face " + std::to_string(j) + " endpoint/dim mismatch");
      }
    }
  if (!r.ok) return r;
  // simplicial identities on face words
  for (int d = 2; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      AtomId a{d, i};
      for (int j = 0; j <= d; ++j)
        for (int k = 0; k < j; ++k) {
          Word lhs = K.act_word(K.atom(a).faces[static_cast<size_t>(j)], op_delta(d - 1, k));
          Word rhs = K.act_word(K.atom(a).faces[static_cast<size_t>(k)], op_delta(d - 1, j - 1));
          if (lhs != rhs)
            r.fail("simplicial identity fails at atom " + a.str() + " (" + std::to_string(k) +
                   "," + std::to_string(j) + ")");
        }
    }
  return r;
}

/// A simplicial functor between computads, specified on atoms.
struct CFunctor {
  const Computad* src = nullptr;
  const Computad* tgt = nullptr;
  std::vector<int> on_obj;
  std::vector<std::vector<Word>> on_atom;  // per atom, a word in tgt

  int obj(int o) const { return on_obj[static_cast<size_t>(o)]; }
  const Word& atom_image(AtomId a) const {
    return on_atom[static_cast<size_t>(a.dim)][static_cast<size_t>(a.idx)];
  }
  Word apply(const Word& w) const {
    Word out;
    out.src = obj(w.src);
    out.tgt = obj(w.tgt);
    out.dim = w.dim;
    for (auto& l : w.letters) {
      Word piece = tgt->act_word(atom_image(l.atom), l.epi);
      out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return out;
  }
};

inline ValidationReport validate(const CFunctor& F) {
  ValidationReport r;
  const Computad& S = *F.src;
  for (int d = 0; d <= S.top_dim(); ++d)
    for (int i = 0; i < S.size(d); ++i) {
      AtomId a{d, i};
      const Word& im = F.atom_image(a);
      std::string why;
      if (!F.tgt->word_well_formed(im, &why)) {
        r.fail("image of " + a.str() + " malformed: " + why);
        continue;
      }
      if (im.dim != d || im.src != F.obj(S.atom(a).src) || im.tgt != F.obj(S.atom(a).tgt)) {
        r.fail("image of " + a.str() + " has wrong type");
        continue;
      }
      for (int j = 0; j <= d && d > 0; ++j) {
        Word lhs = F.apply(S.atom(a).faces[static_cast<size_t>(j)]);
        Word rhs = F.tgt->act_word(im, op_delta(d, j));
        if (lhs != rhs) r.fail("functor not simplicial at " + a.str() + " face " + std::to_string(j));
      }
    }
  return r;
}

/// Check that F exhibits its source as a subcomputad: injective on objects,
/// atoms map to atoms injectively (never to identities or longer words).
inline ValidationReport subcomputad_check(const CFunctor& F) {
  ValidationReport r = validate(F);
  if (!r.ok) return r;
  {
    std::map<int, int> seen;
    for (int o = 0; o < F.src->n_objects; ++o) {
      if (seen.count(F.obj(o))) r.fail("objects not injective");
      seen[F.obj(o)] = o;
    }
  }
  std::map<AtomId, AtomId> image;
  for (int d = 0; d <= F.src->top_dim(); ++d)
    for (int i = 0; i < F.src->size(d); ++i) {
      AtomId a{d, i};
      const Word& im = F.atom_image(a);
      if (im.letters.size() != 1 || !im.letters[0].epi.is_identity()) {
        r.fail("atom " + a.str() + " does not map to an atom");
        continue;
      }
      AtomId b = im.letters[0].atom;
      if (image.count(b)) r.fail("atoms not injective at " + a.str());
      image[b] = a;
    }
  if (!r.ok) return r;
  // factorisation closure: faces of image atoms factor through image atoms
  for (auto& [b, a] : image) {
    (void)a;
    for (auto& fw : F.tgt->atom(b).faces)
      for (auto& l : fw.letters)
        if (!image.count(l.atom))
          r.fail("image not closed under factorisation at atom " + b.str());
  }
  return r;
}

/// Pushout of computads along a subcomputad inclusion:
///   A --incl--> B
///   |           |
///  att          |
///   v           v
///   C --------> P
struct ComputadPushout {
  Computad result;
  CFunctor from_c;  // C -> P
  CFunctor from_b;  // B -> P
};

inline ComputadPushout pushout_along_subcomputad(const CFunctor& incl, const CFunctor& att) {
  if (incl.src != att.src) throw invalid_input("pushout: span feet differ");
  auto sub_ok = subcomputad_check(incl);
  if (!sub_ok.ok) throw invalid_input("pushout: not a subcomputad inclusion");
  const Computad& A = *incl.src;
  const Computad& B = *incl.tgt;
  const Computad& C = *att.tgt;

  ComputadPushout P;
  P.result.name = "pushout(" + B.name + "," + C.name + ")";
  // objects: C's objects, then B-objects outside the image of A
  std::vector<int> b_obj_to_p(static_cast<size_t>(B.n_objects), -1);
  for (int o = 0; o < A.n_objects; ++o)
    b_obj_to_p[static_cast<size_t>(incl.obj(o))] = att.obj(o);
  P.result.n_objects = C.n_objects;
  P.result.obj_names = C.obj_names;
  for (int o = 0; o < B.n_objects; ++o)
    if (b_obj_to_p[static_cast<size_t>(o)] < 0) {
      b_obj_to_p[static_cast<size_t>(o)] = P.result.n_objects++;
      P.result.obj_names.push_back(B.obj_names.empty() ? "b" + std::to_string(o)
                                                       : B.obj_names[static_cast<size_t>(o)]);
    }
  // atom bookkeeping
  std::map<AtomId, AtomId> a_image;  // atoms of B hit by A
  for (int d = 0; d <= A.top_dim(); ++d)
    for (int i = 0; i < A.size(d); ++i)
      a_image[incl.atom_image(AtomId{d, i}).letters[0].atom] = AtomId{d, i};
  int topd = std::max(B.top_dim(), C.top_dim());
  P.result.atoms.resize(static_cast<size_t>(topd) + 1);
  std::vector<std::vector<AtomId>> c_atom_to_p(static_cast<size_t>(C.top_dim()) + 1);
  std::vector<std::vector<AtomId>> b_atom_to_p(static_cast<size_t>(B.top_dim()) + 1);
  for (int d = 0; d <= topd; ++d) {
    if (d <= C.top_dim()) c_atom_to_p[static_cast<size_t>(d)].resize(static_cast<size_t>(C.size(d)));
    if (d <= B.top_dim()) b_atom_to_p[static_cast<size_t>(d)].resize(static_cast<size_t>(B.size(d)));
  }
  // translation of a word of B into P; needs C-word translation for A-atoms,
  // filled in below once functors exist. Build skeleton first: C atoms copied,
  // then new B atoms, dimension by dimension, rewriting face words on the fly.
  P.from_c.src = &C;
  P.from_b.src = &B;
  P.from_c.on_obj.resize(static_cast<size_t>(C.n_objects));
  for (int o = 0; o < C.n_objects; ++o) P.from_c.on_obj[static_cast<size_t>(o)] = o;
  P.from_b.on_obj = b_obj_to_p;
  P.from_c.on_atom.resize(static_cast<size_t>(C.top_dim()) + 1);
  P.from_b.on_atom.resize(static_cast<size_t>(B.top_dim()) + 1);

  auto translate_c_word = [&](const Word& w) -> Word {
    Word out;
    out.src = w.src;
    out.tgt = w.tgt;
    out.dim = w.dim;
    for (auto& l : w.letters)
      out.letters.push_back(Letter{l.epi, c_atom_to_p[static_cast<size_t>(l.atom.dim)]
                                              [static_cast<size_t>(l.atom.idx)]});
    return out;
  };
  std::function<Word(const Word&)> translate_b_word = [&](const Word& w) -> Word {
    Word out;
    out.src = b_obj_to_p[static_cast<size_t>(w.src)];
    out.tgt = b_obj_to_p[static_cast<size_t>(w.tgt)];
    out.dim = w.dim;
    for (auto& l : w.letters) {
      auto it = a_image.find(l.atom);
      if (it == a_image.end()) {
        out.letters.push_back(Letter{l.epi, b_atom_to_p[static_cast<size_t>(l.atom.dim)]
                                                [static_cast<size_t>(l.atom.idx)]});
      } else {
        Word cim = translate_c_word(att.atom_image(it->second));
        Word moved = P.result.act_word(cim, l.epi);
        out.letters.insert(out.letters.end(), moved.letters.begin(), moved.letters.end());
      }
    }
    return out;
  };

  for (int d = 0; d <= topd; ++d) {
    for (int i = 0; d <= C.top_dim() && i < C.size(d); ++i) {
      CAtom at = C.atom(AtomId{d, i});
      for (auto& fw : at.faces) fw = translate_c_word(fw);
      c_atom_to_p[static_cast<size_t>(d)][static_cast<size_t>(i)] =
          AtomId{d, static_cast<int>(P.result.atoms[static_cast<size_t>(d)].size())};
      P.result.atoms[static_cast<size_t>(d)].push_back(std::move(at));
    }
    for (int i = 0; d <= B.top_dim() && i < B.size(d); ++i) {
      if (a_image.count(AtomId{d, i})) continue;
      CAtom at = B.atom(AtomId{d, i});
      at.src = b_obj_to_p[static_cast<size_t>(at.src)];
      at.tgt = b_obj_to_p[static_cast<size_t>(at.tgt)];
      for (auto& fw : at.faces) fw = translate_b_word(fw);
      b_atom_to_p[static_cast<size_t>(d)][static_cast<size_t>(i)] =
          AtomId{d, static_cast<int>(P.result.atoms[static_cast<size_t>(d)].size())};
      P.result.atoms[static_cast<size_t>(d)].push_back(std::move(at));
    }
  }
  while (!P.result.atoms.empty() && P.result.atoms.back().empty()) P.result.atoms.pop_back();
  // functor tables
  P.from_c.tgt = nullptr;  // set by caller once result has a stable address
  P.from_b.tgt = nullptr;
  for (int d = 0; d <= C.top_dim(); ++d)
    for (int i = 0; i < C.size(d); ++i) {
      Word w;
      AtomId p = c_atom_to_p[static_cast<size_t>(d)][static_cast<size_t>(i)];
      w.src = P.result.atom(p).src;
      w.tgt = P.result.atom(p).tgt;
      w.dim = d;
      w.letters.push_back(Letter{op_identity(d), p});
      P.from_c.on_atom[static_cast<size_t>(d)].push_back(std::move(w));
    }
  for (int d = 0; d <= B.top_dim(); ++d)
    for (int i = 0; i < B.size(d); ++i) {
      AtomId b{d, i};
      auto it = a_image.find(b);
      if (it != a_image.end()) {
        P.from_b.on_atom[static_cast<size_t>(d)].push_back(
            translate_c_word(att.atom_image(it->second)));
      } else {
        AtomId p = b_atom_to_p[static_cast<size_t>(d)][static_cast<size_t>(i)];
        P.from_b.on_atom[static_cast<size_t>(d)].push_back(P.result.word_of_atom(p));
      }
    }
  return P;
}

}  // namespace hoco

#endif
