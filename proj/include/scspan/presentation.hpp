#pragma once

#include <array>
#include <cassert>
#include <string>
#include <vector>

#include "scspan/word.hpp"

// The one-relator presentation pi_1(S) = <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>
// together with Dehn's algorithm for it.  For genus >= 2 the relator is a
// small-cancellation word, so greedy replacement of any subword longer than
// half a relator rotation solves the word problem.

namespace scspan {

struct SurfacePresentation {
  int genus = 2;
  GroupWord relator;

  static SurfacePresentation standard(int g) {
    if (g < 2) throw Error("surface presentation requires genus >= 2");
    SurfacePresentation p;
    p.genus = g;
    GroupWord r;
    for (int i = 1; i <= g; ++i) {
      r = concat(r, commutator(GroupWord{a(i)}, GroupWord{b(i)}));
    }
    p.relator = free_reduce(r);
    assert(p.relator.size() == 4 * static_cast<std::size_t>(g));
    assert(is_null_homologous(p.relator, g));
    return p;
  }
};

enum class RelatorConjugacy { no, plus, minus };

// Precomputes relator rotations once; reuse across many reductions.
class DehnReducer {
 public:
  explicit DehnReducer(const SurfacePresentation& p)
      : genus_(p.genus), half_(2 * p.genus) {
    const GroupWord r = free_reduce(p.relator);
    const GroupWord ri = r.inverse();
    const std::size_t len = r.size();
    for (std::size_t k = 0; k < len; ++k) {
      rotations_.push_back(rotate_word(r, k));
      rotations_.push_back(rotate_word(ri, k));
    }
    relator_canon_ = cyclic_canonical(r);
    relator_inv_canon_ = cyclic_canonical(ri);
  }

  int genus() const { return genus_; }
  std::size_t relator_length() const { return 4 * static_cast<std::size_t>(genus_); }

  // longest match of a rotation prefix at w[i..); returns (length, rotation id)
  std::pair<std::size_t, std::size_t> best_match(const std::vector<Letter>& w,
                                                 std::size_t i) const {
    std::size_t best_len = 0, best_rot = 0;
    for (std::size_t rid = 0; rid < rotations_.size(); ++rid) {
      const auto& r = rotations_[rid].letters;
      std::size_t l = 0;
      while (l < r.size() && i + l < w.size() && w[i + l] == r[l]) ++l;
      if (l > best_len) {
        best_len = l;
        best_rot = rid;
      }
    }
    return {best_len, best_rot};
  }

  // Dehn reduction of a based word: free reduction plus replacement of any
  // subword strictly longer than half a relator rotation by the shorter
  // complement.  Same pi_1(S) element; empty result iff trivial in pi_1(S).
  GroupWord reduce(GroupWord w) const {
    w = free_reduce(w);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        auto [len, rid] = best_match(w.letters, i);
        if (len <= half_) continue;
        w = replace_at(w, i, len, rid);
        changed = true;
        break;
      }
    }
    return w;
  }

  // Cyclic-word variant: also rewrites subwords that wrap around the end,
  // returning the canonical rotation of the shortened class.
  CyclicWord reduce_cyclic(const GroupWord& w0) const {
    GroupWord w = cyclic_reduce(w0);
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t n = w.letters.size();
      if (n == 0) break;
      for (std::size_t start = 0; start < n && !changed; ++start) {
        GroupWord rot = rotate_word(w, start);
        auto [len, rid] = best_match(rot.letters, 0);
        if (len > half_) {
          w = cyclic_reduce(replace_at(rot, 0, len, rid));
          changed = true;
        }
      }
    }
    return cyclic_canonical(w);
  }

  bool is_identity(const GroupWord& w) const { return reduce(w).empty(); }

  bool equal_in_group(const GroupWord& u, const GroupWord& v) const {
    return is_identity(concat(u, v.inverse()));
  }

  RelatorConjugacy relator_conjugacy(const GroupWord& w) const {
    CyclicWord c = cyclic_canonical(w);
    if (c == relator_canon_) return RelatorConjugacy::plus;
    if (c == relator_inv_canon_) return RelatorConjugacy::minus;
    return RelatorConjugacy::no;
  }

 private:
  GroupWord replace_at(const GroupWord& w, std::size_t i, std::size_t len,
                       std::size_t rid) const {
    // rotation r = u v with u = w[i..i+len); in the group u = v^-1, and
    // |v| < |u|, so splicing v^-1 in place of u shortens w
    const GroupWord& r = rotations_[rid];
    GroupWord tail;
    tail.letters.assign(r.letters.begin() + static_cast<std::ptrdiff_t>(len),
                        r.letters.end());
    GroupWord repl = tail.inverse();
    GroupWord out;
    out.letters.reserve(w.size() - len + repl.size());
    out.letters.insert(out.letters.end(), w.letters.begin(),
                       w.letters.begin() + static_cast<std::ptrdiff_t>(i));
    out.letters.insert(out.letters.end(), repl.letters.begin(), repl.letters.end());
    out.letters.insert(out.letters.end(),
                       w.letters.begin() + static_cast<std::ptrdiff_t>(i + len),
                       w.letters.end());
    return free_reduce(out);
  }

  int genus_;
  std::size_t half_;
  std::vector<GroupWord> rotations_;
  CyclicWord relator_canon_, relator_inv_canon_;
};

inline GroupWord dehn_reduce(const GroupWord& w, const SurfacePresentation& p) {
  return DehnReducer(p).reduce(w);
}

// decides, in the ambient free group, whether w is conjugate to the relator
// (plus) or its inverse (minus)
inline RelatorConjugacy is_relator_conjugate(const GroupWord& w,
                                             const SurfacePresentation& p) {
  return DehnReducer(p).relator_conjugacy(w);
}

}  // namespace scspan
