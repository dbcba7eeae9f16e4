#pragma once

#include <array>
#include <string>
#include <vector>

#include "scspan/presentation.hpp"

// Automorphisms of pi_1(S) given by generator images, and the Dehn twist
// generating family.  Validation is the soundness gate: a candidate is
// accepted only if it sends the relator to a conjugate of itself (sign +1,
// i.e. orientation preserving) and acts symplectically on homology.  Maps
// passing the gate are induced by homeomorphisms, so they carry simple
// curves to simple curves.

namespace scspan {

struct RelatorNotPreserved : Error {
  using Error::Error;
};
struct NotSymplectic : Error {
  using Error::Error;
};

struct EndoByImages {
  int genus = 2;
  std::vector<GroupWord> images;  // position p: a_i at 2(i-1), b_i at 2(i-1)+1
  bool validated = false;
  std::string name;

  const GroupWord& image_of_pos(int pos) const {
    return images[static_cast<std::size_t>(pos)];
  }
};

inline EndoByImages identity_endo(int genus) {
  EndoByImages e;
  e.genus = genus;
  e.name = "id";
  for (int p = 0; p < 2 * genus; ++p)
    e.images.push_back(GroupWord{static_cast<Letter>(2 * p)});
  return e;
}

inline GroupWord apply(const EndoByImages& e, const GroupWord& w) {
  GroupWord out;
  for (Letter x : w.letters) {
    const GroupWord& img = e.image_of_pos(gen_pos(x));
    if (!is_inverse_letter(x))
      out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    else {
      GroupWord inv = img.inverse();
      out.letters.insert(out.letters.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return free_reduce(out);
}

// f o g
inline EndoByImages compose(const EndoByImages& f, const EndoByImages& g) {
  EndoByImages e;
  e.genus = f.genus;
  e.name = f.name + "*" + g.name;
  for (const auto& img : g.images) e.images.push_back(apply(f, img));
  return e;
}

// column p = homology class of the image of generator p, so the matrix acts
// on column vectors: h(apply(e, w)) = M h(w)
using IntMat = std::vector<std::vector<std::int64_t>>;

inline IntMat abelianization_matrix(const EndoByImages& e) {
  int n = 2 * e.genus;
  IntMat m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int p = 0; p < n; ++p) {
    auto h = homology_class(e.images[static_cast<std::size_t>(p)], e.genus);
    for (int r = 0; r < n; ++r)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] = h[static_cast<std::size_t>(r)];
  }
  return m;
}

// standard symplectic form in basis (a1, b1, ..., ag, bg): <a_i, b_i> = 1
inline IntMat symplectic_form(int genus) {
  int n = 2 * genus;
  IntMat j(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < genus; ++i) {
    j[static_cast<std::size_t>(2 * i)][static_cast<std::size_t>(2 * i + 1)] = 1;
    j[static_cast<std::size_t>(2 * i + 1)][static_cast<std::size_t>(2 * i)] = -1;
  }
  return j;
}

inline IntMat mat_mul(const IntMat& x, const IntMat& y) {
  std::size_t n = x.size();
  IntMat z(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

inline IntMat mat_transpose(const IntMat& x) {
  std::size_t n = x.size();
  IntMat t(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = x[i][j];
  return t;
}

inline bool is_symplectic(const IntMat& m, int genus) {
  IntMat j = symplectic_form(genus);
  return mat_mul(mat_mul(mat_transpose(m), j), m) == j;
}

// (M - I)^2 = 0: homology action of a twist is a transvection
inline bool is_unipotent_transvection(const IntMat& m) {
  std::size_t n = m.size();
  IntMat d = m;
  for (std::size_t i = 0; i < n; ++i) d[i][i] -= 1;
  IntMat dd = mat_mul(d, d);
  for (const auto& row : dd)
    for (auto x : row)
      if (x != 0) return false;
  return true;
}

inline EndoByImages validate_automorphism(const EndoByImages& e) {
  SurfacePresentation p = SurfacePresentation::standard(e.genus);
  GroupWord im = apply(e, p.relator);
  RelatorConjugacy rc = is_relator_conjugate(im, p);
  if (rc == RelatorConjugacy::minus)
    throw RelatorNotPreserved("relator image is conjugate to the inverse relator "
                              "(orientation reversing): " + e.name);
  if (rc == RelatorConjugacy::no)
    throw RelatorNotPreserved("relator image is not a conjugate of the relator: " + e.name);
  if (!is_symplectic(abelianization_matrix(e), e.genus))
    throw NotSymplectic("abelianized action is not symplectic: " + e.name);
  EndoByImages out = e;
  out.validated = true;
  return out;
}

// ---- Dehn twist generating family ----------------------------------------
//
// Twists along the Lickorish-Humphries curves: the handle curves a_i, b_i
// and the chain curves c_i joining handles i and i+1, plus all inverses.
// Image words were derived so that every map fixes the relator exactly in
// the free group (so the formulas restrict to the two-handle subsurface and
// embed into any genus); validate_automorphism re-checks each one on
// construction.

namespace detail {

inline GroupWord shift_handles(const GroupWord& w, int by) {
  GroupWord out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) {
    Generator g = Generator::from_code(x);
    g.index += by;
    out.letters.push_back(g.code());
  }
  out.reduced = w.reduced;
  return out;
}

}  // namespace detail

// twist along the a_i curve: b_i picks up a_i^{-sign}, everything else fixed
inline EndoByImages twist_about_a(int genus, int i, int sign) {
  EndoByImages e = identity_endo(genus);
  e.name = "T[a" + std::to_string(i) + "]" + (sign < 0 ? "^-1" : "");
  int pos = 2 * (i - 1) + 1;
  GroupWord im = e.images[static_cast<std::size_t>(pos)];
  im.letters.push_back(sign > 0 ? A(i) : a(i));
  e.images[static_cast<std::size_t>(pos)] = free_reduce(im);
  return validate_automorphism(e);
}

// twist along the b_i curve: a_i picks up b_i^{sign}
inline EndoByImages twist_about_b(int genus, int i, int sign) {
  EndoByImages e = identity_endo(genus);
  e.name = "T[b" + std::to_string(i) + "]" + (sign < 0 ? "^-1" : "");
  int pos = 2 * (i - 1);
  GroupWord im = e.images[static_cast<std::size_t>(pos)];
  im.letters.push_back(sign > 0 ? b(i) : B(i));
  e.images[static_cast<std::size_t>(pos)] = free_reduce(im);
  return validate_automorphism(e);
}

// twist along the chain curve c_i between handles i and i+1; the curve meets
// b_i and b_{i+1} once each and is disjoint from every a_j
inline EndoByImages twist_about_chain(int genus, int i, int sign) {
  if (i < 1 || i + 1 > genus) throw Error("chain curve index out of range");
  static const char* fw_b1 = "b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1 a2^-1 b1";
  static const char* fw_b2 = "a2^-1 b1 a1^-1 b1^-1 a2 b2 a2^-1";
  static const char* bw_b1 = "a2 b2 a2 b2^-1 a2^-1 b1 a1";
  static const char* bw_b2 = "b2 a2 b2^-1 a2^-1 b1 a1 b1^-1 a2 b2";
  EndoByImages e = identity_endo(genus);
  e.name = "T[c" + std::to_string(i) + "]" + (sign < 0 ? "^-1" : "");
  GroupWord im1 = parse_word(sign > 0 ? fw_b1 : bw_b1);
  GroupWord im2 = parse_word(sign > 0 ? fw_b2 : bw_b2);
  e.images[static_cast<std::size_t>(2 * (i - 1) + 1)] =
      free_reduce(detail::shift_handles(im1, i - 1));
  e.images[static_cast<std::size_t>(2 * i + 1)] =
      free_reduce(detail::shift_handles(im2, i - 1));
  return validate_automorphism(e);
}

// twist along the dual chain curve d_i between handles i and i+1; the curve
// meets a_i and a_{i+1} once each and is disjoint from every b_j
inline EndoByImages twist_about_dual_chain(int genus, int i, int sign) {
  if (i < 1 || i + 1 > genus) throw Error("dual chain curve index out of range");
  static const char* fw_a1 = "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b1 a1";
  static const char* fw_a2 = "b1 a1 b1 a1^-1 b1^-1 a2 b2";
  static const char* bw_a1 = "b1^-1 a2 b2^-1 a2^-1 b1 a1 b1^-1";
  static const char* bw_a2 = "a2 b2^-1 a2^-1 b1 a1 b1^-1 a1^-1 b1^-1 a2";
  EndoByImages e = identity_endo(genus);
  e.name = "T[d" + std::to_string(i) + "]" + (sign < 0 ? "^-1" : "");
  GroupWord im1 = parse_word(sign > 0 ? fw_a1 : bw_a1);
  GroupWord im2 = parse_word(sign > 0 ? fw_a2 : bw_a2);
  e.images[static_cast<std::size_t>(2 * (i - 1))] =
      free_reduce(detail::shift_handles(im1, i - 1));
  e.images[static_cast<std::size_t>(2 * i)] =
      free_reduce(detail::shift_handles(im2, i - 1));
  return validate_automorphism(e);
}

// The generating family: twists about the a_i, b_i, chain and dual-chain
// curves plus inverses, 2(4g - 2) maps.  The Lickorish-Humphries curves are
// the subfamily without the d_i; the dual chains are added so that already
// at small composition depth the orbit of a separating seed is rich enough
// for the certificate runs.
inline std::vector<EndoByImages> twist_generators(int genus) {
  if (genus < 2) throw Error("twist_generators requires genus >= 2");
  std::vector<EndoByImages> out;
  for (int i = 1; i <= genus; ++i)
    for (int sign : {+1, -1}) out.push_back(twist_about_a(genus, i, sign));
  for (int i = 1; i <= genus; ++i)
    for (int sign : {+1, -1}) out.push_back(twist_about_b(genus, i, sign));
  for (int i = 1; i + 1 <= genus; ++i)
    for (int sign : {+1, -1}) out.push_back(twist_about_chain(genus, i, sign));
  for (int i = 1; i + 1 <= genus; ++i)
    for (int sign : {+1, -1}) out.push_back(twist_about_dual_chain(genus, i, sign));
  return out;
}

}  // namespace scspan
