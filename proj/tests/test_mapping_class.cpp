#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "scspan/curves.hpp"
#include "scspan/mapping_class.hpp"

using namespace scspan;

namespace {

GroupWord random_word(std::mt19937_64& rng, int genus, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 4 * genus - 1);
  GroupWord w;
  std::size_t n = len_dist(rng);
  for (std::size_t i = 0; i < n; ++i)
    w.letters.push_back(static_cast<Letter>(letter_dist(rng)));
  return free_reduce(w);
}

std::vector<std::int64_t> mat_apply(const IntMat& m, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

}  // namespace

TEST_CASE("identity endomorphism validates with identity abelianization") {
  EndoByImages id = validate_automorphism(identity_endo(2));
  CHECK(id.validated);
  auto m = abelianization_matrix(id);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(m[r][c] == (r == c ? 1 : 0));
}

TEST_CASE("a1 twist acts as a transvection") {
  EndoByImages t = twist_about_a(2, 1, +1);
  auto m = abelianization_matrix(t);
  // fixes a1, a2, b2; sends b1 to b1 -+ a1
  CHECK(is_symplectic(m, 2));
  CHECK(is_unipotent_transvection(m));
  for (int p : {0, 2, 3}) {
    std::vector<std::int64_t> e(4, 0);
    e[static_cast<std::size_t>(p)] = 1;
    CHECK(mat_apply(m, e) == e);
  }
  std::vector<std::int64_t> b1v{0, 1, 0, 0};
  auto im = mat_apply(m, b1v);
  CHECK(im[1] == 1);
  CHECK((im[0] == 1 || im[0] == -1));
  CHECK(im[2] == 0);
  CHECK(im[3] == 0);
}

TEST_CASE("orientation-reversing candidate is rejected") {
  EndoByImages e = identity_endo(2);
  e.name = "a1->a1^-1";
  e.images[0] = GroupWord{A(1)};
  CHECK_THROWS_AS(validate_automorphism(e), RelatorNotPreserved);
}

TEST_CASE("every shipped twist generator validates") {
  for (int g : {2, 3}) {
    auto twists = twist_generators(g);
    CHECK(twists.size() == 2 * (4 * static_cast<std::size_t>(g) - 2));
    for (const auto& t : twists) {
      CHECK(t.validated);
      auto m = abelianization_matrix(t);
      CHECK(is_symplectic(m, g));
      CHECK(is_unipotent_transvection(m));
    }
  }
}

TEST_CASE("twists come in inverse pairs") {
  auto twists = twist_generators(2);
  // family order: pairs (T, T^-1)
  for (std::size_t i = 0; i + 1 < twists.size(); i += 2) {
    EndoByImages c = compose(twists[i], twists[i + 1]);
    for (int p = 0; p < 4; ++p)
      CHECK(c.images[static_cast<std::size_t>(p)] == GroupWord{static_cast<Letter>(2 * p)});
  }
}

TEST_CASE("composition of validated twists validates") {
  auto twists = twist_generators(2);
  EndoByImages c = compose(twists[0], twists[4]);
  CHECK_NOTHROW(validate_automorphism(c));
  EndoByImages c2 = compose(twists[8], compose(twists[2], twists[11]));
  CHECK_NOTHROW(validate_automorphism(c2));
}

TEST_CASE("apply is a homomorphism compatible with abelianization") {
  auto twists = twist_generators(2);
  EndoByImages id = identity_endo(2);
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 100; ++t) {
    GroupWord w = random_word(rng, 2, 12);
    CHECK(apply(id, w) == free_reduce(w));
    const EndoByImages& e = twists[rng() % twists.size()];
    GroupWord x = random_word(rng, 2, 8), y = random_word(rng, 2, 8);
    CHECK(apply(e, commutator(x, y)) == commutator(apply(e, x), apply(e, y)));
    auto m = abelianization_matrix(e);
    CHECK(homology_class(apply(e, w), 2) == mat_apply(m, homology_class(w, 2)));
  }
}

TEST_CASE("chain twist braids with the b twists and commutes with the a twists") {
  SurfacePresentation p = SurfacePresentation::standard(2);
  DehnReducer dehn(p);
  EndoByImages Tc = twist_about_chain(2, 1, +1);
  EndoByImages Tb1 = twist_about_b(2, 1, +1), Ta1 = twist_about_a(2, 1, +1);
  std::mt19937_64 rng(5);
  auto eq_out = [&](const EndoByImages& f, const EndoByImages& g) {
    for (int t = 0; t < 20; ++t) {
      GroupWord w = random_word(rng, 2, 7);
      if (!(dehn.reduce_cyclic(apply(f, w)) == dehn.reduce_cyclic(apply(g, w))))
        return false;
    }
    return true;
  };
  CHECK(eq_out(compose(compose(Tc, Tb1), Tc), compose(compose(Tb1, Tc), Tb1)));
  CHECK(eq_out(compose(Tc, Ta1), compose(Ta1, Tc)));
  CHECK(eq_out(compose(compose(Ta1, Tb1), Ta1), compose(compose(Tb1, Ta1), Tb1)));
}

TEST_CASE("orbit seeds") {
  auto twists = twist_generators(2);
  auto nonsep0 = enumerate_simple_curves(2, 0, CurveFilter::nonsep, twists);
  REQUIRE(nonsep0.size() == 1);
  CHECK(nonsep0[0].word == cyclic_canonical(GroupWord{a(1)}));
  CHECK(nonsep0[0].type == TopoType::nonseparating);

  auto sep0 = enumerate_simple_curves(2, 0, CurveFilter::sep, twists);
  REQUIRE(sep0.size() == 1);
  CHECK(sep0[0].word == cyclic_canonical(commutator(GroupWord{a(1)}, GroupWord{b(1)})));
  CHECK(sep0[0].type == TopoType::separating);
}

TEST_CASE("orbit growth, monotonicity, and primitivity at depth 1") {
  auto twists = twist_generators(2);
  auto d0 = enumerate_simple_curves(2, 0, CurveFilter::nonsep, twists);
  auto d1 = enumerate_simple_curves(2, 1, CurveFilter::nonsep, twists);
  auto d2 = enumerate_simple_curves(2, 2, CurveFilter::nonsep, twists);
  CHECK(d1.size() > d0.size());
  CHECK(d2.size() > d1.size());

  // monotone: every depth-k curve appears at depth k+1
  std::set<CyclicWord> in_d2;
  for (const auto& c : d2) in_d2.insert(curve_key(c.word));
  for (const auto& c : d1) CHECK(in_d2.count(curve_key(c.word)) == 1);

  for (const auto& c : d1) {
    auto h = homology_class(c.word.rep, 2);
    std::int64_t g = 0;
    for (auto x : h) g = std::gcd(g, x < 0 ? -x : x);
    CHECK(g == 1);  // primitive class
  }
}

TEST_CASE("classification is twist invariant") {
  auto twists = twist_generators(2);
  auto sep = enumerate_simple_curves(2, 2, CurveFilter::sep, twists);
  for (const auto& c : sep) {
    CHECK(c.type == TopoType::separating);
    CHECK(is_null_homologous(c.word.rep, 2));
  }
  auto nonsep = enumerate_simple_curves(2, 2, CurveFilter::nonsep, twists);
  for (const auto& c : nonsep) {
    CHECK(c.type == TopoType::nonseparating);
    CHECK_FALSE(is_null_homologous(c.word.rep, 2));
  }
  // enough distinct separating curves for the depth-2 certificates
  CHECK(sep.size() >= 20);
}

TEST_CASE("curve set files round-trip the words") {
  auto twists = twist_generators(2);
  auto curves = enumerate_simple_curves(2, 1, CurveFilter::both, twists);
  std::stringstream ss;
  write_curves(ss, curves, twists);
  auto words = read_curve_words(ss);
  REQUIRE(words.size() == curves.size());
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i] == curves[i].word);
}
