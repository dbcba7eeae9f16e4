#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Words over the surface-group alphabet a_1, b_1, ..., a_g, b_g and their
// inverses.  A letter is packed into a small integer so that the fixed
// ordering used for canonical rotations,
//
//   a1 < a1^-1 < b1 < b1^-1 < a2 < a2^-1 < ...
//
// is plain integer comparison: bit 0 is the sign, bit 1 the a/b kind, the
// rest the (0-based) handle index.  Inversion is `code ^ 1`.

namespace scspan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

using Letter = std::int32_t;

constexpr Letter invert(Letter x) { return x ^ 1; }
constexpr bool is_inverse_letter(Letter x) { return (x & 1) != 0; }
// generator position in [0, 2g): a_i -> 2(i-1), b_i -> 2(i-1)+1
constexpr int gen_pos(Letter x) { return static_cast<int>(x >> 1); }
constexpr int letter_sign(Letter x) { return is_inverse_letter(x) ? -1 : +1; }

struct Generator {
  enum class Kind : std::uint8_t { A, B };
  int index = 1;  // 1-based handle index
  Kind kind = Kind::A;
  int sign = +1;

  Letter code() const {
    return static_cast<Letter>(4 * (index - 1) + (kind == Kind::B ? 2 : 0) +
                               (sign < 0 ? 1 : 0));
  }
  static Generator from_code(Letter c) {
    Generator g;
    g.index = static_cast<int>(c / 4) + 1;
    g.kind = (c & 2) ? Kind::B : Kind::A;
    g.sign = (c & 1) ? -1 : +1;
    return g;
  }
  Generator inverse() const { return from_code(invert(code())); }
  bool operator==(const Generator&) const = default;
};

// convenience letter constructors: a(1) == a_1, B(2) == b_2^-1
inline Letter a(int i) { return Generator{i, Generator::Kind::A, +1}.code(); }
inline Letter A(int i) { return Generator{i, Generator::Kind::A, -1}.code(); }
inline Letter b(int i) { return Generator{i, Generator::Kind::B, +1}.code(); }
inline Letter B(int i) { return Generator{i, Generator::Kind::B, -1}.code(); }

struct GroupWord {
  std::vector<Letter> letters;
  bool reduced = false;  // no adjacent x x^-1 pair when set

  GroupWord() : reduced(true) {}
  explicit GroupWord(std::vector<Letter> ls) : letters(std::move(ls)) {}
  GroupWord(std::initializer_list<Letter> ls) : letters(ls) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GroupWord inverse() const {
    GroupWord r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r.letters.push_back(invert(*it));
    r.reduced = reduced;
    return r;
  }

  bool operator==(const GroupWord& o) const { return letters == o.letters; }
  bool operator<(const GroupWord& o) const {
    if (letters.size() != o.letters.size())
      return letters.size() < o.letters.size();
    return letters < o.letters;
  }
};

inline GroupWord concat(const GroupWord& u, const GroupWord& v) {
  GroupWord r;
  r.letters.reserve(u.size() + v.size());
  r.letters.insert(r.letters.end(), u.letters.begin(), u.letters.end());
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  r.reduced = false;
  return r;
}

inline GroupWord free_reduce(const GroupWord& w) {
  GroupWord r;
  r.letters.reserve(w.size());
  for (Letter x : w.letters) {
    if (!r.letters.empty() && r.letters.back() == invert(x))
      r.letters.pop_back();
    else
      r.letters.push_back(x);
  }
  r.reduced = true;
  return r;
}

// freely reduced product
inline GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  return free_reduce(concat(u, v));
}

inline GroupWord pow(const GroupWord& w, int k) {
  GroupWord base = k >= 0 ? w : w.inverse();
  int reps = k >= 0 ? k : -k;
  GroupWord r;
  for (int i = 0; i < reps; ++i) r = concat(r, base);
  return free_reduce(r);
}

// [x, y] = x y x^-1 y^-1
inline GroupWord commutator(const GroupWord& x, const GroupWord& y) {
  return free_reduce(concat(concat(x, y), concat(x.inverse(), y.inverse())));
}

// x^y := y x y^-1
inline GroupWord conjugate(const GroupWord& x, const GroupWord& y) {
  return free_reduce(concat(concat(y, x), y.inverse()));
}

// exponent-sum vector, basis order (a1, b1, ..., ag, bg)
inline std::vector<std::int64_t> homology_class(const GroupWord& w, int genus) {
  std::vector<std::int64_t> h(2 * static_cast<std::size_t>(genus), 0);
  for (Letter x : w.letters) {
    int p = gen_pos(x);
    if (p >= 2 * genus) throw Error("letter outside genus-" + std::to_string(genus) + " alphabet");
    h[static_cast<std::size_t>(p)] += letter_sign(x);
  }
  return h;
}

inline bool is_null_homologous(const GroupWord& w, int genus) {
  auto h = homology_class(w, genus);
  return std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v == 0; });
}

// strips inverse first/last pairs; the result is a cyclically reduced word
// representing a conjugate element
inline GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(w);
  std::size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == invert(w.letters[hi - 1])) {
    ++lo;
    --hi;
  }
  GroupWord r;
  r.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                   w.letters.begin() + static_cast<std::ptrdiff_t>(hi));
  r.reduced = true;
  return r;
}

inline GroupWord rotate_word(const GroupWord& w, std::size_t k) {
  GroupWord r;
  std::size_t n = w.letters.size();
  if (n == 0) return w;
  k %= n;
  r.letters.reserve(n);
  r.letters.insert(r.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(k), w.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(k));
  r.reduced = w.reduced;
  return r;
}

inline GroupWord least_rotation(const GroupWord& w) {
  std::size_t n = w.letters.size();
  GroupWord best = w;
  for (std::size_t k = 1; k < n; ++k) {
    GroupWord cand = rotate_word(w, k);
    if (cand.letters < best.letters) best = cand;
  }
  return best;
}

// Free homotopy class of a loop: cyclically reduced word up to rotation,
// stored as the lexicographically least rotation.  The empty class stands
// for the trivial (null-homotopic) loop.
struct CyclicWord {
  GroupWord rep;  // canonical: cyclically reduced, least rotation

  bool trivial() const { return rep.empty(); }
  std::size_t size() const { return rep.size(); }

  CyclicWord inverse() const;

  bool operator==(const CyclicWord& o) const { return rep == o.rep; }
  bool operator<(const CyclicWord& o) const { return rep < o.rep; }
};

inline CyclicWord cyclic_canonical(const GroupWord& w) {
  CyclicWord c;
  c.rep = least_rotation(cyclic_reduce(w));
  return c;
}

inline CyclicWord CyclicWord::inverse() const { return cyclic_canonical(rep.inverse()); }

// identifies a curve with its reverse; used as dedupe key for curve sets
inline CyclicWord curve_key(const CyclicWord& c) {
  CyclicWord inv = c.inverse();
  return inv < c ? inv : c;
}

// ---- text syntax ------------------------------------------------------
//
// whitespace-separated letters: `a1 b2^-1 A1`, where `A1` is shorthand for
// `a1^-1`; exponents expand (`a1^3`, `b2^-2`).  print_word emits lowercase
// letters with run-length exponents and round-trips through parse_word.

inline std::string letter_name(Letter x) {
  Generator g = Generator::from_code(x);
  std::string s(1, g.kind == Generator::Kind::A ? 'a' : 'b');
  s += std::to_string(g.index);
  if (g.sign < 0) s += "^-1";
  return s;
}

inline std::string print_word(const GroupWord& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    Generator g = Generator::from_code(w.letters[i]);
    if (!out.empty()) out += ' ';
    out += (g.kind == Generator::Kind::A ? 'a' : 'b');
    out += std::to_string(g.index);
    std::int64_t e = static_cast<std::int64_t>(j - i) * g.sign;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    i = j;
  }
  return out;
}

inline std::string print_word(const CyclicWord& c) { return print_word(c.rep); }

inline GroupWord parse_word(std::string_view text) {
  GroupWord w;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad word syntax: " + why + " in \"" + std::string(text) + "\"");
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    Generator g;
    if (c == 'a' || c == 'A')
      g.kind = Generator::Kind::A;
    else if (c == 'b' || c == 'B')
      g.kind = Generator::Kind::B;
    else
      fail(std::string("unexpected character '") + c + "'");
    g.sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : +1;
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail("missing generator index");
    int idx = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      ++i;
    }
    if (idx < 1) fail("generator index must be >= 1");
    g.index = idx;
    std::int64_t expo = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("missing exponent digits");
      std::int64_t e = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i] - '0');
        ++i;
      }
      expo = neg ? -e : e;
    }
    if (expo == 0) continue;
    Letter base = g.code();
    if (expo < 0) {
      base = invert(base);
      expo = -expo;
    }
    for (std::int64_t k = 0; k < expo; ++k) w.letters.push_back(base);
  }
  w.reduced = false;
  return w;
}

}  // namespace scspan
