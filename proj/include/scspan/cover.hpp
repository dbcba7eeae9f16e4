#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "scspan/deck.hpp"
#include "scspan/lattice.hpp"
#include "scspan/presentation.hpp"

// The regular cover of the genus-g surface attached to phi: pi_1(S) -> D.
// Vertices are deck elements, one directed edge (v, x) from v to v*phi(x)
// per generator x, one lifted relator 2-cell based at each vertex.  First
// homology of the cover is presented as Z^{E-V+1} (cycle coordinates of the
// Schreier graph, non-tree edges only) modulo the lattice B spanned by the
// 2-cell boundaries.
//
// Conventions: the edge (v, x) points along x, so traversing x^-1
// contributes -1 to that edge's coordinate; the spanning tree is BFS from
// the identity with generator order a1, b1, ..., ag, bg (forward edge before
// backward edge); 2-cells read the relator left to right from their base
// vertex.

namespace scspan {

struct CoverComplex {
  SurfacePresentation pres;
  DeckGroup deck;
  int n = 0;          // vertices = |D|
  long long edges = 0;
  int ambient = 0;    // E - V + 1 = cycle coordinate rank

  std::vector<std::int32_t> bfs_order;      // vertices in tree order
  std::vector<std::int32_t> cycle_of_edge;  // edge id -> cycle coord or -1 (tree)
  std::vector<std::int32_t> parent_vertex;  // BFS tree, -1 at the identity
  std::vector<std::int64_t> parent_edge;    // edge id linking to parent
  std::vector<bool> parent_edge_forward;    // true: parent --x--> v
  IntMatrix boundary;                       // n x ambient 2-cell boundary rows

  // letters read along the tree path v -> root
  GroupWord word_up(int v) const {
    GroupWord w;
    while (parent_vertex[static_cast<std::size_t>(v)] >= 0) {
      int g = static_cast<int>(parent_edge[static_cast<std::size_t>(v)] % deck.num_gens());
      Letter x = static_cast<Letter>(2 * g);
      w.letters.push_back(parent_edge_forward[static_cast<std::size_t>(v)] ? invert(x) : x);
      v = parent_vertex[static_cast<std::size_t>(v)];
    }
    w.reduced = false;
    return w;
  }

  long long edge_id(int v, int gen) const {
    return static_cast<long long>(v) * deck.num_gens() + gen;
  }

  // walk a word from `start`, accumulating signed non-tree edge counts;
  // returns the end vertex
  int walk(const GroupWord& w, int start, std::vector<std::int64_t>* acc) const {
    int v = start;
    for (Letter x : w.letters) {
      int gen = gen_pos(x);
      if (gen >= deck.num_gens()) throw Error("letter outside cover alphabet");
      if (!is_inverse_letter(x)) {
        long long e = edge_id(v, gen);
        int c = cycle_of_edge[static_cast<std::size_t>(e)];
        if (acc && c >= 0) (*acc)[static_cast<std::size_t>(c)] += 1;
        v = deck.step(v, gen, false);
      } else {
        int u = deck.step(v, gen, true);
        long long e = edge_id(u, gen);
        int c = cycle_of_edge[static_cast<std::size_t>(e)];
        if (acc && c >= 0) (*acc)[static_cast<std::size_t>(c)] -= 1;
        v = u;
      }
    }
    return v;
  }

  std::vector<BigInt> cycle_vector(const GroupWord& w, int start, int repeats = 1) const {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(ambient), 0);
    int v = start;
    for (int r = 0; r < repeats; ++r) v = walk(w, v, &acc);
    if (v != start) throw Error("cycle_vector: walk did not close up");
    std::vector<BigInt> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i];
    return out;
  }
};

inline long long genus_of_cover(long long base_genus, long long n) {
  return n * (base_genus - 1) + 1;
}

inline CoverComplex build_cover(const SurfacePresentation& pres, DeckGroup deck) {
  deck.check_generates();
  if (deck.num_gens() != 2 * pres.genus)
    throw InvalidDeckSpec("deck group generator count does not match presentation");

  CoverComplex c{pres, std::move(deck)};
  c.n = c.deck.size();
  const int gens = c.deck.num_gens();
  c.edges = static_cast<long long>(c.n) * gens;
  c.ambient = static_cast<int>(c.edges) - c.n + 1;

  // BFS spanning tree from the identity; deterministic neighbor order
  c.cycle_of_edge.assign(static_cast<std::size_t>(c.edges), -2);  // -2 unseen
  c.parent_vertex.assign(static_cast<std::size_t>(c.n), -1);
  c.parent_edge.assign(static_cast<std::size_t>(c.n), -1);
  c.parent_edge_forward.assign(static_cast<std::size_t>(c.n), false);
  std::vector<bool> seen(static_cast<std::size_t>(c.n), false);
  std::vector<std::int32_t> queue{0};
  seen[0] = true;
  std::size_t head = 0;
  while (head < queue.size()) {
    int v = queue[head++];
    for (int g = 0; g < gens; ++g) {
      int fwd = c.deck.step(v, g, false);
      if (!seen[static_cast<std::size_t>(fwd)]) {
        seen[static_cast<std::size_t>(fwd)] = true;
        c.cycle_of_edge[static_cast<std::size_t>(c.edge_id(v, g))] = -1;  // tree
        c.parent_vertex[static_cast<std::size_t>(fwd)] = v;
        c.parent_edge[static_cast<std::size_t>(fwd)] = c.edge_id(v, g);
        c.parent_edge_forward[static_cast<std::size_t>(fwd)] = true;
        queue.push_back(fwd);
      }
      int bwd = c.deck.step(v, g, true);
      if (!seen[static_cast<std::size_t>(bwd)]) {
        seen[static_cast<std::size_t>(bwd)] = true;
        c.cycle_of_edge[static_cast<std::size_t>(c.edge_id(bwd, g))] = -1;
        c.parent_vertex[static_cast<std::size_t>(bwd)] = v;
        c.parent_edge[static_cast<std::size_t>(bwd)] = c.edge_id(bwd, g);
        c.parent_edge_forward[static_cast<std::size_t>(bwd)] = false;
        queue.push_back(bwd);
      }
    }
  }
  c.bfs_order = queue;

  int next_cycle = 0;
  for (long long e = 0; e < c.edges; ++e) {
    if (c.cycle_of_edge[static_cast<std::size_t>(e)] == -2)
      c.cycle_of_edge[static_cast<std::size_t>(e)] = next_cycle++;
  }
  if (next_cycle != c.ambient) throw Error("cycle coordinate count mismatch");

  // one relator lift per vertex
  c.boundary = IntMatrix(static_cast<std::size_t>(c.n), static_cast<std::size_t>(c.ambient));
  for (int v = 0; v < c.n; ++v) {
    std::vector<BigInt> row = c.cycle_vector(c.pres.relator, v);
    for (int j = 0; j < c.ambient; ++j)
      c.boundary.at(static_cast<std::size_t>(v), static_cast<std::size_t>(j)) =
          row[static_cast<std::size_t>(j)];
  }
  return c;
}

// ---- lift decomposition ---------------------------------------------------

struct LiftComponent {
  int start_vertex = 0;
  std::vector<BigInt> cycle;  // class representative in Z^{E-V+1}
};

struct LiftDecomposition {
  CyclicWord curve;
  int d = 1;  // order of phi(curve) in D
  std::vector<LiftComponent> components;  // n/d of them, ascending start vertex
};

inline LiftDecomposition lift_decompose(const CoverComplex& c, const CyclicWord& w) {
  if (w.trivial()) throw Error("lift_decompose: curve word is trivial");
  LiftDecomposition out;
  out.curve = w;
  int h = c.deck.image_of(w.rep);
  out.d = c.deck.order_of(h);
  std::vector<bool> used(static_cast<std::size_t>(c.n), false);
  for (int v = 0; v < c.n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    int t = v;
    for (int k = 0; k < out.d; ++k) {
      used[static_cast<std::size_t>(t)] = true;
      t = c.deck.mul(t, h);  // right multiply: same component, shifted basepoint
    }
    LiftComponent comp;
    comp.start_vertex = v;
    comp.cycle = c.cycle_vector(w.rep, v, out.d);
    out.components.push_back(std::move(comp));
  }
  return out;
}

// class of a component in H1 = Z^{E-V+1} / B is its cycle vector mod B
inline const std::vector<BigInt>& component_homology(const LiftComponent& comp) {
  return comp.cycle;
}

// ---- H1 quotient data -------------------------------------------------------

struct H1Data {
  int ambient = 0;
  int boundary_rank = 0;
  long long h1_rank = 0;
};

namespace detail {

// exact rank of the boundary lattice.  For large covers the exact value is
// certified by a mod-p rank: the 2-cell boundaries always sum to zero, so
// rank <= n-1, and rank mod p is a lower bound; when they meet the rank is
// pinned without big-integer elimination.
inline int boundary_rank(const IntMatrix& b, int n) {
  bool zero_sum = true;
  for (std::size_t ccol = 0; ccol < b.cols && zero_sum; ++ccol) {
    BigInt s = 0;
    for (std::size_t r = 0; r < b.rows; ++r) s += b.at(r, ccol);
    if (s != 0) zero_sum = false;
  }
  if (zero_sum && n > 200) {
    constexpr std::int64_t p = 2147483647;  // 2^31 - 1
    std::vector<std::vector<std::int64_t>> m(b.rows, std::vector<std::int64_t>(b.cols));
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c) {
        std::int64_t v = static_cast<std::int64_t>(b.at(r, c) % p);
        m[r][c] = v < 0 ? v + p : v;
      }
    auto mulmod = [](std::int64_t x, std::int64_t y) {
      return static_cast<std::int64_t>((__int128)x * y % p);
    };
    auto powmod = [&](std::int64_t base, std::int64_t e) {
      std::int64_t r = 1;
      while (e) {
        if (e & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        e >>= 1;
      }
      return r;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < b.cols && rank < m.size(); ++col) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][col] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[rank], m[piv]);
      std::int64_t inv = powmod(m[rank][col], p - 2);
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        std::int64_t f = mulmod(m[r][col], inv);
        for (std::size_t c = col; c < b.cols; ++c) {
          m[r][c] = (m[r][c] - mulmod(f, m[rank][c])) % p;
          if (m[r][c] < 0) m[r][c] += p;
        }
      }
      ++rank;
    }
    if (static_cast<int>(rank) == n - 1) return n - 1;
    // fall through to the exact path if the bound was not met
  }
  return static_cast<int>(hnf(b).rank);
}

}  // namespace detail

inline H1Data h1_quotient_data(const CoverComplex& c) {
  H1Data d;
  d.ambient = c.ambient;
  d.boundary_rank = detail::boundary_rank(c.boundary, c.n);
  d.h1_rank = static_cast<long long>(c.ambient) - d.boundary_rank;
  return d;
}

// ---- serialization ----------------------------------------------------------

inline void serialize_cover(std::ostream& os, const CoverComplex& c) {
  os << "scspan-cover v1\n";
  os << "genus " << c.pres.genus << " deck " << c.deck.describe() << "\n";
  os << "vertices " << c.n << " edges " << c.edges << " faces " << c.n << "\n";
  for (long long e = 0; e < c.edges; ++e) {
    int v = static_cast<int>(e / c.deck.num_gens());
    int g = static_cast<int>(e % c.deck.num_gens());
    Letter x = static_cast<Letter>(2 * g);
    int cyc = c.cycle_of_edge[static_cast<std::size_t>(e)];
    os << "edge " << e << ' ' << v << ' ' << letter_name(x) << ' '
       << c.deck.step(v, g, false) << ' ';
    if (cyc < 0)
      os << "tree\n";
    else
      os << "cycle " << cyc << "\n";
  }
  os << "boundary\n";
  write_triplets(os, c.boundary);
}

}  // namespace scspan
