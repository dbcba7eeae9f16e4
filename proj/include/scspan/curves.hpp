#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "scspan/mapping_class.hpp"

// Provably simple closed curves as mapping-class-orbit images of the seed
// curves a_1 (nonseparating) and [a_1,b_1] (separating).  Every orbit member
// is simple because the twists are validated automorphisms, hence induced by
// homeomorphisms.  On a closed orientable surface a simple curve separates
// iff it is null homologous, so classification is an exponent-sum check.

namespace scspan {

enum class TopoType { nonseparating, separating };
enum class CurveFilter { nonsep, sep, both };

struct CurveClass {
  CyclicWord word;              // Dehn-reduced canonical representative
  std::string seed;             // "a1" or "[a1,b1]"
  std::vector<int> twists;      // indices into the twist family, applied left to right
  int depth = 0;
  TopoType type = TopoType::nonseparating;
};

inline TopoType classify(const CyclicWord& w, int genus) {
  return is_null_homologous(w.rep, genus) ? TopoType::separating
                                          : TopoType::nonseparating;
}

inline TopoType classify(const CurveClass& c, int genus) { return classify(c.word, genus); }

// Breadth-first orbit of the seeds under the twist family, deduped by the
// canonical cyclic form of curve-or-inverse after cyclic Dehn reduction.
// Levels are produced one at a time so saturation-style consumers can stop
// without paying for deeper frontiers.
class OrbitEnumerator {
 public:
  OrbitEnumerator(int genus, CurveFilter filter, const std::vector<EndoByImages>& twists)
      : genus_(genus), twists_(&twists), dehn_(SurfacePresentation::standard(genus)) {
    for (const auto& t : twists)
      if (!t.validated) throw Error("orbit enumeration: unvalidated twist " + t.name);
    if (filter == CurveFilter::nonsep || filter == CurveFilter::both) {
      CurveClass seed;
      seed.word = dehn_.reduce_cyclic(GroupWord{a(1)});
      seed.seed = "a1";
      push(seed);
    }
    if (filter == CurveFilter::sep || filter == CurveFilter::both) {
      CurveClass seed;
      seed.word = dehn_.reduce_cyclic(commutator(GroupWord{a(1)}, GroupWord{b(1)}));
      seed.seed = "[a1,b1]";
      push(seed);
    }
  }

  int current_depth() const { return depth_; }

  // curves discovered at the current depth
  const std::vector<CurveClass>& frontier() const { return frontier_; }

  // expand one level; returns the number of new curves
  std::size_t step() {
    std::vector<CurveClass> current = std::move(frontier_);
    frontier_.clear();
    ++depth_;
    for (const auto& c : current) {
      for (std::size_t t = 0; t < twists_->size(); ++t) {
        CurveClass next;
        next.word = dehn_.reduce_cyclic(apply((*twists_)[t], c.word.rep));
        if (next.word.trivial()) throw Error("twist image of a curve became trivial");
        next.seed = c.seed;
        next.twists = c.twists;
        next.twists.push_back(static_cast<int>(t));
        next.depth = depth_;
        push(next);
      }
    }
    return frontier_.size();
  }

 private:
  void push(CurveClass c) {
    CyclicWord key = curve_key(c.word);
    if (seen_.count(key)) return;
    seen_.insert(std::move(key));
    c.type = classify(c.word, genus_);
    frontier_.push_back(std::move(c));
  }

  int genus_;
  const std::vector<EndoByImages>* twists_;
  DehnReducer dehn_;
  int depth_ = 0;
  std::set<CyclicWord> seen_;
  std::vector<CurveClass> frontier_;
};

inline std::vector<CurveClass> enumerate_simple_curves(
    int genus, int depth, CurveFilter filter,
    const std::vector<EndoByImages>& twists) {
  if (depth < 0) throw Error("orbit depth must be >= 0");
  OrbitEnumerator orbit(genus, filter, twists);
  std::vector<CurveClass> out = orbit.frontier();
  for (int level = 1; level <= depth; ++level) {
    orbit.step();
    out.insert(out.end(), orbit.frontier().begin(), orbit.frontier().end());
  }
  return out;
}

// ---- line-oriented curve set files ---------------------------------------

inline void write_curves(std::ostream& os, const std::vector<CurveClass>& curves,
                         const std::vector<EndoByImages>& twists) {
  os << "# scspan curve set: " << curves.size() << " curves\n";
  for (const auto& c : curves) {
    os << "# provenance: seed " << c.seed;
    if (!c.twists.empty()) {
      os << ", twists";
      for (int t : c.twists)
        os << ' ' << (t < static_cast<int>(twists.size()) ? twists[static_cast<std::size_t>(t)].name
                                                          : std::to_string(t));
    }
    os << ", depth " << c.depth << ", "
       << (c.type == TopoType::separating ? "separating" : "nonseparating") << "\n";
    os << print_word(c.word) << "\n";
  }
}

inline std::vector<CyclicWord> read_curve_words(std::istream& is) {
  std::vector<CyclicWord> out;
  std::string line;
  while (std::getline(is, line)) {
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.push_back(cyclic_canonical(parse_word(line)));
  }
  return out;
}

}  // namespace scspan
