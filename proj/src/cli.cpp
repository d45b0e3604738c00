#include "tk/cli.hpp"

#include "tk/grunbaum.hpp"
#include "tk/json_io.hpp"
#include "tk/oracles.hpp"
#include "tk/sampling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace tk {

namespace {

struct Options {
  std::string input = "-";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 50000;
  std::size_t samples = 8;
  bool floats = false;
  bool no_verify = false;
  bool exhaustive = false;
  std::string mode = "global";
  std::string sign;
  std::size_t subset_size = 0;
};

struct Outcome {
  Json result;
  int status = 0;
};

/// Input was well-formed JSON but not a valid job.
struct InputError : Error {
  using Error::Error;
};

Json read_input(const Options& opt, std::istream& in) {
  std::stringstream buffer;
  if (opt.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream f(opt.input);
    if (!f) throw InputError("cannot open input file '" + opt.input + "'");
    buffer << f.rdbuf();
  }
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema) {
    throw InputError("unsupported schema " + j["schema"].dump() + ", expected \"" + std::string(kSchema) + "\"");
  }
  return j;
}

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("input needs field '") + key + "'");
  return j[key];
}

std::vector<Line<Rat>> lines_from(const Json& j) {
  if (!j.is_array()) throw InputError("'lines' must be an array");
  std::vector<Line<Rat>> out;
  for (const auto& l : j) out.push_back(line_from_json(l));
  for (const auto& l : out) {
    if (l.dim() != out.front().dim()) throw DimensionError("lines differ in dimension");
  }
  return out;
}

std::optional<SignClass> sign_option(const Options& opt, Eigen::Index d) {
  if (opt.sign.empty()) return std::nullopt;
  auto s = SignClass::parse(opt.sign);
  if (s.dim() != d) throw DimensionError("--sign has " + std::to_string(s.dim()) + " entries, boxes have d = " + std::to_string(d));
  return s;
}

void certify(bool ok, const std::string& what) {
  if (!ok) throw InternalError("re-verification failed: " + what);
}

bool meets_by_oracle(const Line<Rat>& line, const Box<Rat>& box) { return !oracles::t_interval(line, box).empty; }

Outcome cmd_convert(const Options& opt, const Json& in) {
  PlueckerPoint<Rat> p = [&] {
    if (in.contains("line")) return line_to_pluecker(line_from_json(in["line"]));
    if (in.contains("cremona")) return line_to_pluecker(from_cremona(cremona_from_json(in["cremona"])));
    if (in.contains("pluecker")) {
      auto pt = pluecker_from_json(in["pluecker"]);
      if (pt.chart() == Chart::Q) {
        if (!check_lg_relations(pt)) throw PreconditionError("q-chart point violates the linear LG relations");
        pt = cremona_transform(pt);
      }
      if (!check_pluecker_relations(pt)) throw PreconditionError("p-chart point is not on the Grassmannian");
      return pt;
    }
    throw InputError("convert needs one of 'line', 'cremona', 'pluecker'");
  }();
  Json r;
  const bool finite = [&] {
    for (Eigen::Index i = 1; i <= p.dim(); ++i) {
      if (p.at(0, i) != 0) return true;
    }
    return false;
  }();
  std::optional<Line<Rat>> line;
  if (in.contains("line")) line = line_from_json(in["line"]);
  else if (finite) line = pluecker_to_line(p);
  r["line"] = line ? to_json(*line) : Json(nullptr);
  r["pluecker_p"] = to_json(p);
  const auto ind = classify_indeterminacy(p);
  if (ind.none()) {
    const auto qp = cremona_transform(p);
    r["pluecker_q"] = to_json(qp);
    if (!opt.no_verify) {
      certify(check_lg_relations(qp), "image violates the LG relations");
      certify(projectively_equal(cremona_transform(qp), p), "Cremona transform is not an involution here");
    }
  } else {
    r["pluecker_q"] = nullptr;
    r["indeterminacy"] = ind.describe();
  }
  if (line) {
    const auto signs = line_sign(*line);
    Json sj = Json::array();
    for (const auto& s : signs) sj.push_back(to_json(s));
    r["sign_classes"] = sj;
    r["cremona"] = is_weakly_ascending(line->dir()) ? to_json(to_cremona(*line)) : Json(nullptr);
    const auto reflected = reflect(*line, signs.front());
    r["cremona_reflected"] = Json{{"sign", to_json(signs.front())}, {"cremona", to_json(to_cremona(reflected))}};
    if (!opt.no_verify) {
      certify(same_line(reflect(from_cremona(to_cremona(reflected)), signs.front()), *line), "Cremona round trip");
      certify(projectively_equal(line_to_pluecker(*line), p), "Pluecker round trip");
    }
  }
  r["verified"] = !opt.no_verify;
  return {r, 0};
}

Outcome cmd_transversal(const Options& opt, const Json& in) {
  const auto boxes = boxes_from_json(in);
  if (boxes.empty()) throw InputError("'boxes' must be nonempty");
  const Eigen::Index d = family_dim(boxes);
  Json r;
  std::optional<SignWitness<Rat>> witness;
  if (const auto eps = sign_option(opt, d)) {
    witness = sign_transversal_witness(boxes, *eps);
    r = Json{{"feasible", witness.has_value()}, {"witness", witness ? to_json(*witness) : Json(nullptr)}};
  } else {
    if (d < 2) throw InputError("transversal over all sign classes needs d >= 2; pass --sign for d = 1");
    const auto cert = santalo_transversal(boxes);
    witness = cert.witness;
    r = to_json(cert);
  }
  if (witness && !opt.no_verify) {
    for (const auto& b : boxes) certify(meets_by_oracle(witness->line, b), "witness misses a box");
  }
  r["verified"] = witness.has_value() && !opt.no_verify;
  return {r, witness ? 0 : 1};
}

Outcome cmd_hyperplane(const Options& opt, const Json& in) {
  const auto boxes = boxes_from_json(in);
  if (boxes.empty()) throw InputError("'boxes' must be nonempty");
  const Eigen::Index d = family_dim(boxes);
  std::optional<std::pair<SignClass, Hyperplane<Rat>>> found;
  if (const auto eps = sign_option(opt, d)) {
    if (auto h = hyperplane_transversal(boxes, *eps)) found = std::make_pair(*eps, *h);
  } else {
    found = hyperplane_transversal_any(boxes);
  }
  if (found && !opt.no_verify) {
    for (const auto& b : boxes) certify(hyperplane_meets_box(found->second, b), "hyperplane misses a box");
  }
  Json r{{"feasible", found.has_value()},
         {"sign", found ? to_json(found->first) : Json(nullptr)},
         {"hyperplane", found ? to_json(found->second) : Json(nullptr)},
         {"verified", found.has_value() && !opt.no_verify}};
  return {r, found ? 0 : 1};
}

Outcome cmd_star(const Options& opt, const Json& in) {
  const Json& sj = require(in, "starboxes");
  if (!sj.is_array() || sj.empty()) throw InputError("'starboxes' must be a nonempty array");
  std::vector<StarBox<Rat>> sboxes;
  for (const auto& s : sj) sboxes.push_back(starbox_from_json(s));
  for (const auto& s : sboxes) {
    if (s.dim() != sboxes.front().dim()) throw DimensionError("star boxes differ in dimension");
  }
  Json r;
  if (in.contains("flats")) {
    Json rows = Json::array();
    for (const auto& fj : in["flats"]) {
      const auto flat = starflat_from_json(fj);
      if (flat.dim() != sboxes.front().dim()) throw DimensionError("flat and star boxes differ in dimension");
      Json row = Json::array();
      for (const auto& s : sboxes) {
        const bool hit = star_transversal(flat, s);
        if (!opt.no_verify) certify(hit == meets_by_oracle(flat.coefficient_line(), s.coefficient_box()), "star predicate");
        row.push_back(hit);
      }
      rows.push_back(Json{{"flat", to_json(flat)}, {"transverse", row}});
    }
    r["results"] = rows;
    return {r, 0};
  }
  const auto flat = star_family_transversal(sboxes);
  if (flat && !opt.no_verify) {
    certify(flat->proper(), "flat is not proper");
    for (const auto& s : sboxes) certify(meets_by_oracle(flat->coefficient_line(), s.coefficient_box()), "flat misses a star box");
  }
  r["feasible"] = flat.has_value();
  r["flat"] = flat ? to_json(*flat) : Json(nullptr);
  r["verified"] = flat.has_value() && !opt.no_verify;
  return {r, flat ? 0 : 1};
}

Outcome cmd_helly(const Options& opt, const Json& in) {
  const auto boxes = boxes_from_json(in);
  if (boxes.empty()) throw InputError("'boxes' must be nonempty");
  const auto mode = parse_helly_mode(opt.mode);
  HellyOptions ho;
  ho.jobs = opt.jobs;
  ho.exhaustive = opt.exhaustive;
  if (opt.subset_size > 0) ho.subset_size = opt.subset_size;
  const auto rep = helly_check(boxes, mode, sign_option(opt, family_dim(boxes)), ho);
  Json r{{"mode", to_string(mode)}};
  if (!opt.sign.empty()) r["sign"] = opt.sign;
  r["report"] = to_json(rep);
  return {r, 0};
}

Outcome cmd_hull(const Options& opt, const Json& in) {
  const auto lines = lines_from(require(in, "lines"));
  if (lines.empty()) throw InputError("'lines' must be nonempty");
  std::vector<CremonaLine<Rat>> gens;
  for (const auto& l : lines) gens.push_back(to_cremona(l));
  RationalSampler rng(opt.seed);
  Json samples = Json::array();
  for (std::size_t k = 0; k < opt.samples; ++k) {
    std::vector<Rat> weights;
    Rat total(0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      weights.emplace_back(rng.integer(0, 12));
      total += weights.back();
    }
    if (total == 0) {
      weights.assign(gens.size(), Rat(1));
      total = Rat(static_cast<long>(gens.size()));
    }
    for (auto& w : weights) w /= total;
    const auto c = cremona_combination(gens, weights, Combination::Convex);
    const auto line = from_cremona(c);
    if (!opt.no_verify) certify(cremona_hull_membership(gens, c), "sample outside the hull");
    Json wj = Json::array();
    for (const auto& w : weights) wj.push_back(to_json(w));
    Json poly = Json::array(), polyf = Json::array();
    for (int t = -2; t <= 2; ++t) {
      const VecQ pt = line.point_at(Rat(t));
      poly.push_back(to_json(pt));
      polyf.push_back(to_float_json(pt));
    }
    Json s{{"weights", wj}, {"line", to_json(line)}, {"cremona", to_json(c)}, {"polyline", poly}};
    if (opt.floats) s["polyline_float"] = polyf;
    samples.push_back(std::move(s));
  }
  Json r{{"generators", Json::array()}, {"samples", samples}};
  for (const auto& g : gens) r["generators"].push_back(to_json(g));
  if (opt.floats) r["float_note"] = "polyline_float is a decimal rendering for plotting only; exact values are in polyline";
  if (in.contains("queries")) {
    Json qs = Json::array();
    for (const auto& q : lines_from(in["queries"])) {
      const bool member = is_weakly_ascending(q.dir()) && cremona_hull_membership(gens, to_cremona(q));
      qs.push_back(Json{{"line", to_json(q)}, {"in_hull", member}});
    }
    r["queries"] = qs;
  }
  return {r, 0};
}

Outcome cmd_span(const Options& opt, const Json& in) {
  const auto lines = lines_from(require(in, "lines"));
  if (lines.empty()) throw InputError("'lines' must be nonempty");
  const auto m = build_span_matrix(lines);
  Json r{{"matrix", to_json(m)}};
  Json pts = Json::array();
  if (in.contains("points")) {
    for (const auto& pj : in["points"]) {
      const auto p = vec_from_json(pj);
      if (p.size() != m.dim()) throw DimensionError("query point dimension differs from d");
      Json e{{"point", to_json(p)}, {"rank", rank_at_point(m, p)}};
      if (m.n() <= m.dim() - 1) e["on_scroll"] = scroll_membership(m, p);
      if (m.n() == m.dim()) e["lines_through_point_dim"] = secancy_defect_locus_check(lines, p);
      pts.push_back(std::move(e));
    }
  }
  r["points"] = pts;
  Json spans = Json::array();
  if (in.contains("weights")) {
    for (const auto& wj : in["weights"]) {
      std::vector<Rat> w;
      for (const auto& x : wj) w.push_back(rat_from_json(x));
      const auto s = span_line_at(lines, w);
      Json e{{"weights", wj}};
      if (const auto* l = std::get_if<Line<Rat>>(&s)) {
        e["line"] = to_json(*l);
        if (!opt.no_verify && m.n() <= m.dim() - 1) {
          for (int t = 0; t < 3; ++t) certify(scroll_membership(m, l->point_at(Rat(t))), "span line leaves the scroll");
        }
      } else {
        e["pluecker"] = to_json(std::get<PlueckerPoint<Rat>>(s));
      }
      spans.push_back(std::move(e));
    }
  }
  r["span_lines"] = spans;
  return {r, 0};
}

Outcome cmd_cone(const Options& opt, const Json& in) {
  const auto lines = lines_from(require(in, "lines"));
  if (lines.size() != 2) throw InputError("cone needs exactly two lines");
  const auto cone = meeting_cone(lines[0], lines[1]);
  if (!opt.no_verify) {
    for (const auto& l : lines) certify(quadric_value(cone, l.dir()) == 0, "generator direction off the quadric");
    if (!cone.degenerate) {
      const auto mid = span_line_at(lines, {Rat(1, 2), Rat(1, 2)});
      if (const auto* l = std::get_if<Line<Rat>>(&mid)) {
        certify(oracles::reciprocal_collinearity<Rat>({lines[0].dir(), lines[1].dir(), l->dir()}) == 0,
                "Cremona midpoint off the reciprocal plane");
        certify(quadric_value(cone, l->dir()) == 0, "Cremona midpoint off the quadric");
      }
    }
  }
  Json r{{"cone", to_json(cone)}};
  if (in.contains("queries")) {
    Json qs = Json::array();
    for (const auto& q : lines_from(in["queries"])) {
      Json e{{"line", to_json(q)}, {"quadric_value", to_json(quadric_value(cone, q.dir()))}};
      e["in_frame_hull"] = cone.frame ? Json(frame_hull_membership_meeting(cone, q)) : Json(nullptr);
      qs.push_back(std::move(e));
    }
    r["queries"] = qs;
  }
  return {r, 0};
}

Outcome cmd_grunbaum(const Options& opt) {
  const auto inst = grunbaum_search(opt.seed, opt.budget);
  if (!inst) return {Json{{"found", false}, {"seed", opt.seed}, {"budget", opt.budget}}, 1};
  Json boxes = Json::array(), stabbers = Json::array();
  for (const auto& b : inst->squares) boxes.push_back(to_json(b));
  for (const auto& l : inst->stabbers) stabbers.push_back(to_json(l));
  Json r{{"found", true}, {"seed", opt.seed}, {"attempts", inst->attempts}, {"boxes", boxes}, {"stabbers", stabbers}};
  if (!opt.no_verify) {
    const auto rep = verify_grunbaum(inst->squares, opt.jobs);
    certify(rep.tightness_instance, "instance is not a 5-of-6 tightness instance");
    r["verification"] = to_json(rep);
  }
  return {r, 0};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"schema", kSchema}, {"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  Options opt;
  CLI::App app{"Line transversals to axis-parallel boxes with exact rational arithmetic", "tk"};
  app.require_subcommand(1);
  app.add_option("-i,--input", opt.input, "input JSON file, '-' for stdin")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads for subset enumeration")->check(CLI::Range(1U, 1024U));
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--budget", opt.budget, "attempt budget for randomized searches")->capture_default_str();
  app.add_option("--samples", opt.samples, "number of hull samples")->capture_default_str();
  app.add_flag("--float", opt.floats, "add decimal renderings to plot output");
  app.add_flag("--no-verify", opt.no_verify, "skip re-verification of certificates");
  app.add_flag("--exhaustive", opt.exhaustive, "enumerate every subset even if the family is feasible");
  app.add_option("--mode", opt.mode, "helly mode: ascending, sign, global, hyperplane, hyperplane-global, star")
      ->capture_default_str();
  app.add_option("--sign", opt.sign, "sign class as a string of '+' and '-'");
  app.add_option("--subset-size", opt.subset_size, "subset size instead of the Helly number");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"convert", "convert a line between rectilinear, Cremona and Pluecker coordinates"},
      {"transversal", "line transversal to a box family"},
      {"hyperplane", "hyperplane transversal to a box family"},
      {"star", "(d-2)-flat transversals to star boxes"},
      {"helly", "Helly-type verification of a box family"},
      {"hull", "sample the Cremona-convex hull of lines"},
      {"span", "span matrix, ranks and span lines"},
      {"cone", "meeting cone and frame hull of two meeting lines in R^3"},
      {"grunbaum-search", "search six squares, every five with a transversal, all six without"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump(2) << '\n';
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    Outcome o;
    if (command == "grunbaum-search") {
      o = cmd_grunbaum(opt);
    } else {
      const Json input = read_input(opt, in);
      if (command == "convert") o = cmd_convert(opt, input);
      else if (command == "transversal") o = cmd_transversal(opt, input);
      else if (command == "hyperplane") o = cmd_hyperplane(opt, input);
      else if (command == "star") o = cmd_star(opt, input);
      else if (command == "helly") o = cmd_helly(opt, input);
      else if (command == "hull") o = cmd_hull(opt, input);
      else if (command == "span") o = cmd_span(opt, input);
      else o = cmd_cone(opt, input);
    }
    out << Json{{"schema", kSchema}, {"command", command}, {"result", o.result}}.dump(2) << '\n';
    return o.status;
  } catch (const InternalError& e) {
    out << error_json("verification", e.what()).dump(2) << '\n';
    return 3;
  } catch (const Error& e) {
    out << error_json("input", e.what()).dump(2) << '\n';
    return 2;
  } catch (const Json::exception& e) {
    out << error_json("input", e.what()).dump(2) << '\n';
    return 2;
  }
}

}  // namespace tk
