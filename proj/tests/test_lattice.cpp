#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "scspan/lattice.hpp"

using namespace scspan;

// ---- independent oracles ------------------------------------------------

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (auto& x : m.a) x = d(rng);
  return m;
}

// random unimodular matrix: product of elementary row ops on the identity
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < ops; ++k) {
    std::size_t i = row(rng), j = row(rng);
    if (i == j) {
      if (rng() & 1)
        for (std::size_t c = 0; c < n; ++c) u.at(i, c) = -u.at(i, c);
      continue;
    }
    BigInt q = coef(rng);
    for (std::size_t c = 0; c < n; ++c) u.at(i, c) += q * u.at(j, c);
  }
  return u;
}

// Brute-force membership oracle for 3xN lattices: enumerate integer
// coefficient triples inside a box.
bool enumeration_member(const std::vector<BigInt>& v, const IntMatrix& l, long box) {
  std::vector<BigInt> acc(l.cols);
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      for (long z = -box; z <= box; ++z) {
        bool ok = true;
        for (std::size_t c = 0; c < l.cols && ok; ++c) {
          BigInt s = BigInt(x) * l.at(0, c) + BigInt(y) * l.at(1, c) +
                     BigInt(z) * l.at(2, c);
          if (s != v[c]) ok = false;
        }
        if (ok) return true;
      }
  return false;
}

// Cramer oracle for full-rank 3x3: v = x L has the unique rational solution
// x = v adj(L) / det(L); v is in the lattice iff that solution is integral.
// Returns nullopt when det = 0.
std::optional<bool> cramer_member(const std::vector<BigInt>& v, const IntMatrix& l) {
  BigInt dl = det(l);
  if (dl == 0) return std::nullopt;
  // adjugate of l^T (since we solve x l = v, i.e. l^T x^T = v^T)
  IntMatrix lt = l.transpose();
  auto cof = [&](std::size_t r, std::size_t c) {
    std::size_t r0 = (r + 1) % 3, r1 = (r + 2) % 3;
    std::size_t c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    if (r0 > r1) std::swap(r0, r1);
    if (c0 > c1) std::swap(c0, c1);
    BigInt minor = lt.at(r0, c0) * lt.at(r1, c1) - lt.at(r0, c1) * lt.at(r1, c0);
    return ((r + c) % 2 == 0) ? minor : -minor;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    BigInt num = 0;
    for (std::size_t j = 0; j < 3; ++j) num += cof(j, i) * v[j];
    if (num % dl != 0) return false;
  }
  return true;
}

std::vector<BigInt> bigvec(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

// ---- frozen examples ----------------------------------------------------

TEST_CASE("hnf of simple matrices") {
  CHECK(hnf(IntMatrix::identity(3)).H == IntMatrix::identity(3));

  IntMatrix diag(2, 2);
  diag.at(0, 0) = 2;
  diag.at(1, 1) = 3;
  CHECK(hnf(diag).H == diag);

  // rows {(2,4),(3,5)}: row ops give {(1,1),(0,2)}; |det| = 2 preserved
  IntMatrix m = IntMatrix::from_rows({bigvec({2, 4}), bigvec({3, 5})}, 2);
  HnfResult h = hnf(m);
  IntMatrix expect = IntMatrix::from_rows({bigvec({1, 1}), bigvec({0, 2})}, 2);
  CHECK(h.H == expect);
  CHECK(abs(det(h.U)) == 1);
  CHECK(h.U * m == h.H);
}

TEST_CASE("snf of simple matrices") {
  IntMatrix z(3, 2);
  CHECK(snf(z).factors.empty());
  CHECK(snf(z).D.is_zero());

  CHECK(snf(IntMatrix::identity(4)).D == IntMatrix::identity(4));

  IntMatrix diag(2, 2);
  diag.at(0, 0) = 2;
  diag.at(1, 1) = 3;
  SnfResult s = snf(diag);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] == 1);
  CHECK(s.factors[1] == 6);
}

TEST_CASE("membership with certifying coefficients") {
  IntMatrix l = IntMatrix::from_rows({bigvec({2, 4}), bigvec({3, 5})}, 2);

  auto zero = membership(bigvec({0, 0}), l);
  REQUIRE(zero.has_value());
  CHECK(std::all_of(zero->begin(), zero->end(), [](const BigInt& x) { return x == 0; }));

  // (1,1) = (3,5) - (2,4)
  auto one = membership(bigvec({1, 1}), l);
  REQUIRE(one.has_value());
  CHECK((*one)[0] * 2 + (*one)[1] * 3 == 1);
  CHECK((*one)[0] * 4 + (*one)[1] * 5 == 1);

  IntMatrix even = IntMatrix::from_rows({bigvec({2, 0})}, 2);
  CHECK_FALSE(membership(bigvec({1, 0}), even).has_value());
}

TEST_CASE("saturation") {
  IntMatrix l = IntMatrix::from_rows({bigvec({2, 4})}, 2);
  IntMatrix sat = saturation(l);
  CHECK(sat == IntMatrix::from_rows({bigvec({1, 2})}, 2));
  CHECK(saturation(sat) == sat);

  IntMatrix l2 = IntMatrix::from_rows({bigvec({2, 0}), bigvec({0, 3})}, 2);
  CHECK(saturation(l2) == IntMatrix::identity(2));
}

TEST_CASE("quotient invariants") {
  CHECK(quotient_invariants(IntMatrix::identity(3)).factors.empty());
  CHECK(quotient_invariants(IntMatrix::identity(3)).free_rank == 0);

  IntMatrix two = IntMatrix::from_rows({bigvec({2, 0}), bigvec({0, 2})}, 2);
  auto q = quotient_invariants(two);
  REQUIRE(q.factors.size() == 2);
  CHECK(q.factors[0] == 2);
  CHECK(q.factors[1] == 2);
  CHECK(q.free_rank == 0);

  IntMatrix partial = IntMatrix::from_rows({bigvec({2, 0})}, 2);
  auto q2 = quotient_invariants(partial);
  REQUIRE(q2.factors.size() == 1);
  CHECK(q2.factors[0] == 2);
  CHECK(q2.free_rank == 1);
}

TEST_CASE("primitivity against a quotient lattice") {
  // B = {0} in Z^2: quotient is Z^2 itself
  IntMatrix b(0, 2);
  b.cols = 2;
  QuotientData q = QuotientData::of(b);
  CHECK_FALSE(is_primitive(bigvec({0, 0}), q));
  CHECK(is_primitive(bigvec({1, 0}), q));
  CHECK(is_primitive(bigvec({2, 3}), q));
  CHECK_FALSE(is_primitive(bigvec({2, 4}), q));
}

// ---- randomized properties ----------------------------------------------

TEST_CASE("hnf recomposition, unimodularity, lattice equality") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, r, c, 9);
    HnfResult h = hnf(m);
    CHECK(h.U * m == h.H);
    CHECK(abs(det(h.U)) == 1);
    // mutual membership: row lattices of M and H coincide
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(membership(m.row(i), h.H).has_value());
      CHECK(membership(h.H.row(i), m).has_value());
    }
    // canonical shape: pivots positive, entries above pivots in [0, p)
    std::size_t prev_col = 0;
    bool first = true;
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t col = 0;
      while (col < c && h.H.at(i, col) == 0) ++col;
      REQUIRE(col < c);
      if (!first) CHECK(col > prev_col);
      first = false;
      prev_col = col;
      CHECK(h.H.at(i, col) > 0);
      for (std::size_t i2 = 0; i2 < i; ++i2) {
        CHECK(h.H.at(i2, col) >= 0);
        CHECK(h.H.at(i2, col) < h.H.at(i, col));
      }
    }
  }
}

TEST_CASE("snf divisibility chain and unimodular invariance") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, 9);
    SnfResult s = snf(m);
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
      CHECK(s.factors[i] > 0);
      CHECK(s.factors[i + 1] % s.factors[i] == 0);
    }
    IntMatrix u = random_unimodular(rng, r);
    IntMatrix v = random_unimodular(rng, c);
    SnfResult s2 = snf(u * m * v);
    CHECK(s2.factors == s.factors);
  }
}

TEST_CASE("snf matches the gcd-of-minors characterization on 2x2") {
  std::mt19937_64 rng(203);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_matrix(rng, 2, 2, 9);
    SnfResult s = snf(m);
    BigInt g1 = gcd(gcd(abs(m.at(0, 0)), abs(m.at(0, 1))),
                    gcd(abs(m.at(1, 0)), abs(m.at(1, 1))));
    BigInt d = abs(det(m));
    if (d == 0) {
      if (g1 == 0)
        CHECK(s.factors.empty());
      else {
        REQUIRE(s.factors.size() == 1);
        CHECK(s.factors[0] == g1);
      }
    } else {
      REQUIRE(s.factors.size() == 2);
      CHECK(s.factors[0] == g1);
      CHECK(s.factors[0] * s.factors[1] == d);
    }
  }
}

TEST_CASE("membership agrees with brute-force search on 3x3") {
  std::mt19937_64 rng(303);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    IntMatrix l = random_matrix(rng, 3, 3, 3);
    // half the probes are constructed members with small coefficients
    std::vector<BigInt> v(3);
    if (t & 1) {
      std::uniform_int_distribution<long> cd(-3, 3);
      long x = cd(rng), y = cd(rng), z = cd(rng);
      for (std::size_t c = 0; c < 3; ++c)
        v[c] = BigInt(x) * l.at(0, c) + BigInt(y) * l.at(1, c) + BigInt(z) * l.at(2, c);
      CHECK(enumeration_member(v, l, 3));
    } else {
      std::uniform_int_distribution<long> vd(-6, 6);
      for (auto& x : v) x = vd(rng);
    }
    auto got = membership(v, l);
    if (got) {
      // certify exactly
      for (std::size_t c = 0; c < 3; ++c) {
        BigInt s = 0;
        for (std::size_t r = 0; r < 3; ++r) s += (*got)[r] * l.at(r, c);
        CHECK(s == v[c]);
      }
    }
    auto oracle = cramer_member(v, l);
    if (oracle) {
      CHECK(*oracle == got.has_value());
      ++checked;
    } else if (t & 1) {
      CHECK(got.has_value());
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("saturation properties") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 4, c = 2 + rng() % 4;
    IntMatrix l = random_matrix(rng, r, c, 5);
    IntMatrix sat = saturation(l);
    // contains L
    for (std::size_t i = 0; i < r; ++i) CHECK(membership(l.row(i), sat).has_value());
    // idempotent
    CHECK(saturation(sat) == sat);
    // quotient Sat/L is finite: same rank
    CHECK(hnf(sat).rank == hnf(l).rank);
    // Z^c / Sat is torsion-free
    CHECK(quotient_invariants(sat).factors.empty());
  }
}

TEST_CASE("incremental RowHnf matches from-scratch hnf") {
  std::mt19937_64 rng(505);
  for (int t = 0; t < 80; ++t) {
    std::size_t c = 2 + rng() % 5;
    std::size_t nrows = 1 + rng() % 8;
    IntMatrix m = random_matrix(rng, nrows, c, 9);
    RowHnf inc(c);
    for (std::size_t r = 0; r < nrows; ++r) inc.add_row(m.row(r));
    HnfResult h = hnf(m);
    IntMatrix expect(h.rank, c);
    for (std::size_t r = 0; r < h.rank; ++r)
      for (std::size_t cc = 0; cc < c; ++cc) expect.at(r, cc) = h.H.at(r, cc);
    CHECK(inc.to_matrix() == expect);
    CHECK(inc.rank() == h.rank);
    // adding any lattice member is a no-op
    if (nrows > 0) {
      RowHnf copy = inc;
      CHECK_FALSE(copy.add_row(m.row(0)));
      CHECK(copy == inc);
    }
  }
}

TEST_CASE("RowHnf full-lattice detection") {
  RowHnf h(3);
  h.add_row(bigvec({1, 0, 0}));
  h.add_row(bigvec({0, 1, 0}));
  CHECK_FALSE(h.is_full_lattice());
  h.add_row(bigvec({0, 0, 2}));
  CHECK_FALSE(h.is_full_lattice());
  h.add_row(bigvec({0, 0, 1}));
  CHECK(h.is_full_lattice());
}

TEST_CASE("triplet round-trip") {
  std::mt19937_64 rng(606);
  IntMatrix m = random_matrix(rng, 4, 7, 9);
  m.at(2, 3) = BigInt("123456789012345678901234567890");
  std::stringstream ss;
  write_triplets(ss, m);
  CHECK(read_triplets(ss) == m);
}
