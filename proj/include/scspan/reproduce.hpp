#pragma once

#include <iomanip>
#include <ostream>

#include "scspan/experiments.hpp"

// Headline reproduction run: the worked cover family for g = 2, its spanning
// and non-spanning verdicts, the bounded lemma certificates, and the
// composed-cover certificate, assembled into one report.

namespace scspan {

inline json reproduce_report(int lemma_depth = 2, int stage2_max_depth = 6) {
  const int g = 2;
  SurfacePresentation pres = SurfacePresentation::standard(g);
  auto twists = twist_generators(g);

  json rep;
  rep["report"] = "reproduction report";
  ExperimentConfig cfg;
  cfg.genus = g;
  cfg.depth = lemma_depth;
  rep["config"] = config_json(cfg);

  // cover statistics for m = 2 and m = 3
  CoverComplex cover2 = build_cover(pres, DeckGroup::abelian(2, g));
  CoverComplex cover3 = build_cover(pres, DeckGroup::abelian(3, g));
  rep["covers"] = json{{"m2", cover_stats_json(cover2)}, {"m3", cover_stats_json(cover3)}};

  json genus_table = json::array();
  for (int m : {2, 3, 5}) {
    long long n = 1;
    for (int i = 0; i < 2 * g; ++i) n *= m;
    genus_table.push_back({{"m", m}, {"degree", n}, {"genus", genus_of_cover(g, n)}});
  }
  rep["genus_table"] = genus_table;

  // m = 2: the order relations span
  auto rel_curves = order_relation_curves(g, 2, cover2.deck, 4, twists);
  std::vector<GroupWord> relations;
  json rel_list = json::array();
  int certified = 0;
  for (const auto& rc : rel_curves) {
    rel_list.push_back({{"deck_element", rc.deck_element},
                        {"curve", print_word(rc.word)},
                        {"vacuous", rc.vacuous},
                        {"simple_certified", rc.simple_certified},
                        {"provenance", rc.provenance}});
    if (!rc.vacuous) relations.push_back(rc.relation);
    if (rc.simple_certified) ++certified;
  }
  RelationsSpanResult m2span = relations_spanning_set(cover2, relations);
  rep["m2_spanning"] = json{{"relation_curves", rel_list},
                            {"relation_count", rel_curves.size()},
                            {"vacuous_count", m2span.vacuous_count},
                            {"simple_certified_count", certified},
                            {"span", span_report_json(m2span.report)}};

  // m = 3: nonseparating orbit to depth saturation
  OrbitSpanResult m3span =
      orbit_span_saturation(cover3, CurveFilter::nonsep, stage2_max_depth, 3, twists);
  rep["m3_nonspanning"] = orbit_span_json(m3span);

  // null-lift certificates
  rep["null_lift_certificates"] =
      json{{"m2", check_null_lift_nonseparating(cover2, lemma_depth, twists).to_json()},
           {"m3", check_null_lift_nonseparating(cover3, lemma_depth, twists).to_json()}};

  // composed-cover counterexample certificate
  rep["counterexample"] =
      counterexample_certificate(g, 2, 3, lemma_depth, twists).to_json();

  return rep;
}

// ---- plain-text rendering ----------------------------------------------------

namespace detail {

inline void render_json_text(std::ostream& os, const json& j, int indent) {
  std::string pad(static_cast<std::size_t>(2 * indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value().front().is_object() ||
                                      it.value().front().is_array()))) {
        os << pad << it.key() << ":\n";
        render_json_text(os, it.value(), indent + 1);
      } else if (it.value().is_array()) {
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      } else {
        os << pad << it.key() << ": "
           << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    int idx = 0;
    for (const auto& el : j) {
      os << pad << "- [" << idx++ << "]\n";
      render_json_text(os, el, indent + 1);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace detail

inline void render_report(std::ostream& os, const json& j, const std::string& format) {
  if (format == "json") {
    os << std::setw(2) << j << "\n";
  } else {
    if (j.contains("report")) os << "== " << j["report"].get<std::string>() << " ==\n";
    detail::render_json_text(os, j, 0);
  }
}

}  // namespace scspan
