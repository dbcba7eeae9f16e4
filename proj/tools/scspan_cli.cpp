// Command-line front end: builds covers, enumerates curve orbits, runs span
// reports and the lemma/counterexample certificates, and reproduces the
// headline computations.  Exit codes: 0 computed, 1 input error, 2 infeasible
// request.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "scspan/reproduce.hpp"

using namespace scspan;

namespace {

struct CommonOpts {
  int genus = 2;
  int m = 2;
  std::string group_file;
  int depth = 2;
  std::string filter = "both";
  int window = 3;
  std::string out;
  std::string format = "text";
};

CurveFilter parse_filter(const std::string& f) {
  if (f == "nonsep") return CurveFilter::nonsep;
  if (f == "sep") return CurveFilter::sep;
  if (f == "both") return CurveFilter::both;
  throw ParseError("unknown filter: " + f);
}

DeckGroup deck_from_opts(const CommonOpts& o) {
  if (!o.group_file.empty()) {
    std::ifstream in(o.group_file);
    if (!in) throw ParseError("cannot open group file: " + o.group_file);
    json spec = json::parse(in);
    std::optional<int> min_gens;
    if (spec.contains("min_generators")) min_gens = spec["min_generators"].get<int>();
    return DeckGroup::from_permutations(spec.at("n").get<int>(),
                                        spec.at("gen_images").get<std::vector<std::vector<int>>>(),
                                        min_gens);
  }
  if (o.m == 1) return DeckGroup::trivial(o.genus);
  return DeckGroup::abelian(o.m, o.genus);
}

ExperimentConfig config_from(const CommonOpts& o) {
  ExperimentConfig cfg;
  cfg.genus = o.genus;
  cfg.m = o.group_file.empty() ? o.m : 0;
  cfg.group_file = o.group_file;
  cfg.filter = parse_filter(o.filter);
  cfg.depth = o.depth;
  cfg.saturation_window = o.window;
  cfg.out_path = o.out;
  cfg.format = o.format;
  return cfg;
}

void emit(const CommonOpts& o, const json& report) {
  if (o.out.empty()) {
    render_report(std::cout, report, o.format);
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw Error("cannot open output path: " + o.out);
  render_report(out, report, o.format);
  std::cerr << "wrote " << o.out << "\n";
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_m = true) {
  cmd->add_option("--genus", o.genus, "base surface genus (>= 2)");
  if (with_m) {
    cmd->add_option("--m", o.m, "abelian deck modulus; cover is (Z/m)^(2g)");
    cmd->add_option("--group-file", o.group_file,
                    "JSON permutation deck spec (overrides --m)");
  }
  cmd->add_option("--out", o.out, "write the report to this path");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

std::vector<GroupWord> relation_family(const std::string& name, const CommonOpts& o,
                                       const CoverComplex& cover,
                                       const std::vector<EndoByImages>& twists,
                                       json* curves_meta) {
  std::vector<GroupWord> rels;
  auto add_orders = [&]() {
    auto rc = order_relation_curves(o.genus, o.m, cover.deck, 4, twists);
    json list = json::array();
    for (const auto& r : rc) {
      list.push_back({{"deck_element", r.deck_element},
                      {"curve", print_word(r.word)},
                      {"vacuous", r.vacuous},
                      {"simple_certified", r.simple_certified},
                      {"provenance", r.provenance}});
      if (!r.vacuous) rels.push_back(r.relation);
    }
    (*curves_meta)["order_relation_curves"] = list;
  };
  if (!name.empty() && name[0] == '@') {
    std::ifstream in(name.substr(1));
    if (!in) throw ParseError("cannot open relations file: " + name.substr(1));
    std::string line;
    while (std::getline(in, line)) {
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      rels.push_back(parse_word(line));
    }
  } else if (name == "all-orders") {
    add_orders();
  } else if (name == "generator-orders") {
    rels = generator_order_relations(o.genus, o.m);
  } else if (name == "generator-orders+commutators") {
    rels = generator_order_relations(o.genus, o.m);
    for (auto& c : commutator_relations(o.genus)) rels.push_back(c);
  } else if (name == "all-orders+commutators") {
    add_orders();
    for (auto& c : commutator_relations(o.genus)) rels.push_back(c);
  } else {
    throw ParseError("unknown relation family: " + name);
  }
  return rels;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact span computations for lifted simple curves in finite regular covers"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* cover_cmd = app.add_subcommand("cover", "cover complex operations");
  cover_cmd->require_subcommand(1);
  auto* cover_build = cover_cmd->add_subcommand("build", "build a cover and report statistics");
  bool serialize = false;
  add_common(cover_build, o);
  cover_build->add_flag("--serialize", serialize, "emit the full structured cover description");

  auto* curves_cmd = app.add_subcommand("curves", "curve orbit operations");
  auto* curves_enum = curves_cmd->add_subcommand("enumerate", "enumerate simple curves by twist orbit");
  add_common(curves_enum, o, /*with_m=*/false);
  curves_enum->add_option("--depth", o.depth, "orbit composition depth K");
  curves_enum->add_option("--filter", o.filter, "curve type filter")
      ->check(CLI::IsMember({"nonsep", "sep", "both"}));

  auto* span_cmd = app.add_subcommand("span", "span computations");
  auto* span_report = span_cmd->add_subcommand("report", "span of lifted curve classes against H1");
  add_common(span_report, o);
  span_report->add_option("--depth", o.depth, "orbit depth cap / saturation search bound");
  span_report->add_option("--filter", o.filter, "curve type filter")
      ->check(CLI::IsMember({"nonsep", "sep", "both"}));
  span_report->add_option("--window", o.window, "depth-saturation stop window");
  std::string family = "orbit";
  span_report->add_option("--family", family,
                          "curve family: orbit | all-orders | generator-orders | "
                          "generator-orders+commutators | all-orders+commutators | @file");

  auto* lemma_cmd = app.add_subcommand("lemma", "bounded lemma verifications");
  auto* null_lift = lemma_cmd->add_subcommand("null-lift", "separating curves 1-lift to nonseparating curves");
  add_common(null_lift, o);
  null_lift->add_option("--depth", o.depth, "orbit depth K");

  auto* certify_cmd = app.add_subcommand("certify", "counterexample certificates");
  auto* counter = certify_cmd->add_subcommand("counterexample", "composed-cover counterexample evidence");
  int m1 = 2, m2 = 3;
  bool literal = false;
  int stage2_depth = 6;
  add_common(counter, o, /*with_m=*/false);
  counter->add_option("--m1", m1, "first cover modulus (>= 2)");
  counter->add_option("--m2", m2, "second cover modulus (>= 3)");
  counter->add_option("--depth", o.depth, "stage-1 orbit depth K");
  counter->add_option("--stage2-depth", stage2_depth, "stage-2 saturation search bound");
  counter->add_flag("--literal-composed", literal, "request the literal composed cover (infeasible)");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "reproduce the headline computations");
  add_common(reproduce_cmd, o, /*with_m=*/false);
  reproduce_cmd->add_option("--depth", o.depth, "certificate orbit depth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cover_build) {
      CoverComplex cover = build_cover(SurfacePresentation::standard(o.genus), deck_from_opts(o));
      if (serialize && !o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) throw Error("cannot open output path: " + o.out);
        serialize_cover(out, cover);
        std::cerr << "wrote " << o.out << "\n";
      } else if (serialize) {
        serialize_cover(std::cout, cover);
      } else {
        json rep{{"report", "cover statistics"},
                 {"config", config_json(config_from(o))},
                 {"cover", cover_stats_json(cover)}};
        emit(o, rep);
      }
    } else if (*curves_enum) {
      auto twists = twist_generators(o.genus);
      auto curves = enumerate_simple_curves(o.genus, o.depth, parse_filter(o.filter), twists);
      if (o.out.empty()) {
        write_curves(std::cout, curves, twists);
      } else {
        std::ofstream out(o.out);
        if (!out) throw Error("cannot open output path: " + o.out);
        write_curves(out, curves, twists);
        std::cerr << "wrote " << o.out << " (" << curves.size() << " curves)\n";
      }
    } else if (*span_report) {
      auto twists = twist_generators(o.genus);
      CoverComplex cover = build_cover(SurfacePresentation::standard(o.genus), deck_from_opts(o));
      json rep{{"report", "span report"},
               {"config", config_json(config_from(o))},
               {"cover", cover_stats_json(cover)}};
      if (family == "orbit") {
        OrbitSpanResult r = orbit_span_saturation(cover, parse_filter(o.filter), o.depth,
                                                  o.window, twists);
        rep["family"] = "orbit";
        rep.update(orbit_span_json(r));
      } else {
        json curves_meta = json::object();
        auto rels = relation_family(family, o, cover, twists, &curves_meta);
        RelationsSpanResult r = relations_spanning_set(cover, rels);
        rep["family"] = family;
        rep["relations"] = static_cast<int>(rels.size());
        rep["vacuous_count"] = r.vacuous_count;
        rep["span"] = span_report_json(r.report);
        rep.update(curves_meta);
      }
      emit(o, rep);
    } else if (*null_lift) {
      auto twists = twist_generators(o.genus);
      CoverComplex cover = build_cover(SurfacePresentation::standard(o.genus), deck_from_opts(o));
      Certificate cert = check_null_lift_nonseparating(cover, o.depth, twists);
      emit(o, cert.to_json());  // a failed claim is still a computed report
    } else if (*counter) {
      auto twists = twist_generators(o.genus);
      Certificate cert =
          counterexample_certificate(o.genus, m1, m2, o.depth, twists, literal, stage2_depth);
      emit(o, cert.to_json());
    } else if (*reproduce_cmd) {
      emit(o, reproduce_report(o.depth));
    }
  } catch (const InfeasibleRequest& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
