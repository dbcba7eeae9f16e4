#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "scspan/word.hpp"

// Finite deck transformation groups.  Two realizations:
//   - Abelian(m, 2g): D = (Z/m)^{2g} with phi(a1) = e1, ..., phi(bg) = e_2g.
//     Elements are mixed-radix encoded vectors.
//   - Permutations: D given by the right-regular permutations of the 2g
//     generator images on {0..n-1}; elements are enumerated by closure from
//     the identity point 0.  Covers the trivial deck (n = 1) and any finite
//     group the caller can present this way.
//
// Element ids double as cover vertex ids; id 0 is the identity.

namespace scspan {

struct NonGenerating : Error {
  using Error::Error;
};
struct DegenerateDeck : Error {
  using Error::Error;
};
struct InvalidDeckSpec : Error {
  using Error::Error;
};

class DeckGroup {
 public:
  static DeckGroup abelian(int m, int genus) {
    if (genus < 2) throw InvalidDeckSpec("deck group needs genus >= 2");
    if (m < 2)
      throw DegenerateDeck("abelian deck modulus m must be >= 2 (m=1 is the degenerate trivial cover)");
    DeckGroup d;
    d.abelian_m_ = m;
    d.num_gens_ = 2 * genus;
    std::int64_t n = 1;
    for (int i = 0; i < d.num_gens_; ++i) {
      n *= m;
      if (n > (1LL << 30)) throw InvalidDeckSpec("abelian deck group too large");
    }
    d.n_ = static_cast<int>(n);
    return d;
  }

  static DeckGroup trivial(int genus) {
    std::vector<std::vector<int>> id_images(2 * static_cast<std::size_t>(genus),
                                            std::vector<int>{0});
    return from_permutations(1, id_images, std::nullopt);
  }

  // gen_images[j] is the right-regular permutation of generator j (order
  // a1,b1,...,ag,bg) acting on {0..n-1}
  static DeckGroup from_permutations(int n, std::vector<std::vector<int>> gen_images,
                                     std::optional<int> declared_min_generators) {
    DeckGroup d;
    d.n_ = n;
    d.num_gens_ = static_cast<int>(gen_images.size());
    d.declared_min_gens_ = declared_min_generators;
    if (n < 1) throw InvalidDeckSpec("deck group order must be >= 1");
    if (d.num_gens_ < 4 || d.num_gens_ % 2 != 0)
      throw InvalidDeckSpec("need 2g >= 4 generator images");
    for (const auto& p : gen_images) {
      if (static_cast<int>(p.size()) != n) throw InvalidDeckSpec("permutation degree mismatch");
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int x : p) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
          throw InvalidDeckSpec("generator image is not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
      }
    }
    d.perm_gens_ = std::move(gen_images);
    d.build_closure();
    return d;
  }

  int size() const { return n_; }
  int num_gens() const { return num_gens_; }
  bool is_abelian_form() const { return abelian_m_ > 0; }
  int modulus() const { return abelian_m_; }

  // lower bound on the number of generators D needs; exact (= 2g) for the
  // abelian form with m >= 2, user-declared for permutation groups
  int min_generators() const {
    if (abelian_m_ > 0) return num_gens_;
    return declared_min_gens_.value_or(n_ == 1 ? 0 : 1);
  }

  // right multiplication by phi(x_j)^{+-1}
  int step(int v, int gen, bool inverse) const {
    if (abelian_m_ > 0) {
      std::int64_t unit = 1;
      for (int j = 0; j < gen; ++j) unit *= abelian_m_;
      int digit = static_cast<int>((v / unit) % abelian_m_);
      int nd = inverse ? (digit + abelian_m_ - 1) % abelian_m_ : (digit + 1) % abelian_m_;
      return static_cast<int>(v + (nd - digit) * unit);
    }
    return inverse ? perm_gens_inv_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(v)]
                   : perm_gens_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(v)];
  }

  int image_of(const GroupWord& w) const {
    int v = 0;
    for (Letter x : w.letters) v = step(v, gen_pos(x), is_inverse_letter(x));
    return v;
  }

  // vertex of g_u * g_v
  int mul(int u, int v) const {
    if (abelian_m_ > 0) {
      int out = 0;
      std::int64_t unit = 1;
      for (int j = 0; j < num_gens_; ++j) {
        int du = static_cast<int>((u / unit) % abelian_m_);
        int dv = static_cast<int>((v / unit) % abelian_m_);
        out += static_cast<int>(((du + dv) % abelian_m_) * unit);
        unit *= abelian_m_;
      }
      return out;
    }
    return elem_perm_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
  }

  int order_of(int e) const {
    if (e == 0) return 1;
    int t = e, k = 1;
    while (t != 0) {
      t = mul(e, t);
      ++k;
      if (k > n_ + 1) throw Error("order computation ran past group size");
    }
    return k;
  }

  // abelianized digits (abelian form only)
  std::vector<int> digits(int v) const {
    std::vector<int> d(static_cast<std::size_t>(num_gens_));
    std::int64_t unit = 1;
    for (int j = 0; j < num_gens_; ++j) {
      d[static_cast<std::size_t>(j)] = static_cast<int>((v / unit) % abelian_m_);
      unit *= abelian_m_;
    }
    return d;
  }

  std::string describe() const {
    if (abelian_m_ > 0)
      return "(Z/" + std::to_string(abelian_m_) + ")^" + std::to_string(num_gens_);
    return "permutation group of order " + std::to_string(n_);
  }

  // the generator images must reach every element, else the cover would be
  // disconnected
  void check_generates() const {
    if (abelian_m_ > 0) return;  // standard basis images always generate
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> queue{0};
    seen[0] = true;
    std::size_t head = 0;
    int count = 1;
    while (head < queue.size()) {
      int v = queue[head++];
      for (int j = 0; j < num_gens_; ++j)
        for (bool inv : {false, true}) {
          int t = step(v, j, inv);
          if (!seen[static_cast<std::size_t>(t)]) {
            seen[static_cast<std::size_t>(t)] = true;
            queue.push_back(t);
            ++count;
          }
        }
    }
    if (count != n_)
      throw NonGenerating("phi images generate only " + std::to_string(count) + " of " +
                          std::to_string(n_) + " deck elements");
  }

 private:
  void build_closure() {
    // enumerate elements as permutations reachable from the identity;
    // regular action demands exactly n_ of them, one per point
    perm_gens_inv_.assign(perm_gens_.size(), {});
    for (std::size_t j = 0; j < perm_gens_.size(); ++j) {
      perm_gens_inv_[j].assign(static_cast<std::size_t>(n_), 0);
      for (int x = 0; x < n_; ++x)
        perm_gens_inv_[j][static_cast<std::size_t>(perm_gens_[j][static_cast<std::size_t>(x)])] = x;
    }
    std::vector<int> identity(static_cast<std::size_t>(n_));
    std::iota(identity.begin(), identity.end(), 0);
    elem_perm_.assign(static_cast<std::size_t>(n_), {});
    std::vector<bool> have(static_cast<std::size_t>(n_), false);
    elem_perm_[0] = identity;
    have[0] = true;
    std::vector<int> queue{0};
    std::size_t head = 0;
    while (head < queue.size()) {
      int v = queue[head++];
      for (std::size_t j = 0; j < perm_gens_.size(); ++j)
        for (bool inv : {false, true}) {
          const auto& gp = inv ? perm_gens_inv_[j] : perm_gens_[j];
          int t = gp[static_cast<std::size_t>(v)];
          // rho_{g h} = rho_h o rho_g: compose element perm with generator perm
          std::vector<int> comp(static_cast<std::size_t>(n_));
          for (int x = 0; x < n_; ++x)
            comp[static_cast<std::size_t>(x)] =
                gp[static_cast<std::size_t>(elem_perm_[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)])];
          if (!have[static_cast<std::size_t>(t)]) {
            have[static_cast<std::size_t>(t)] = true;
            elem_perm_[static_cast<std::size_t>(t)] = std::move(comp);
            queue.push_back(t);
          } else if (elem_perm_[static_cast<std::size_t>(t)] != comp) {
            throw InvalidDeckSpec(
                "generator permutations do not define a regular action "
                "(group order exceeds degree)");
          }
        }
    }
    // unreached points are caught later by check_generates
    for (int v = 0; v < n_; ++v)
      if (!have[static_cast<std::size_t>(v)]) elem_perm_[static_cast<std::size_t>(v)] = identity;
  }

  int n_ = 0;
  int num_gens_ = 0;
  int abelian_m_ = 0;  // 0 for permutation form
  std::optional<int> declared_min_gens_;
  std::vector<std::vector<int>> perm_gens_, perm_gens_inv_;
  std::vector<std::vector<int>> elem_perm_;  // right-regular permutation per element
};

}  // namespace scspan
