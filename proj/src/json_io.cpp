#include "tk/json_io.hpp"

namespace tk {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw PreconditionError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw PreconditionError(std::string("missing field '") + key + "'");
  return *it;
}

void expect_type(const Json& j, std::string_view tag) {
  if (!j.is_object()) throw PreconditionError("expected a '" + std::string(tag) + "' object");
  const auto it = j.find("type");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != tag)) {
    throw PreconditionError("expected type '" + std::string(tag) + "'");
  }
}

Json index_array(const std::vector<Eigen::Index>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

}  // namespace

Json to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw PreconditionError("rationals must be strings \"p/q\" or integers, got " + j.dump());
}

Json to_json(const VecQ& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

VecQ vec_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of rationals");
  VecQ v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rat_from_json(j[i]);
  return v;
}

Json to_json(const SignClass& s) { return s.str(); }

SignClass sign_from_json(const Json& j) {
  if (j.is_string()) return SignClass::parse(j.get<std::string>());
  if (j.is_array()) return SignClass(j.get<std::vector<int>>());
  throw PreconditionError("sign class must be a string like \"+-\" or an array of +1/-1");
}

Json to_json(const Box<Rat>& b) { return Json{{"min", to_json(b.min_corner())}, {"max", to_json(b.max_corner())}}; }

Box<Rat> box_from_json(const Json& j) { return {vec_from_json(field(j, "min")), vec_from_json(field(j, "max"))}; }

std::vector<Box<Rat>> boxes_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : field(j, "boxes");
  if (!arr.is_array()) throw PreconditionError("'boxes' must be an array");
  std::vector<Box<Rat>> out;
  for (const auto& b : arr) out.push_back(box_from_json(b));
  if (!out.empty()) family_dim(out);
  return out;
}

Json to_json(const Line<Rat>& l) { return Json{{"base", to_json(l.base())}, {"dir", to_json(l.dir())}}; }

Line<Rat> line_from_json(const Json& j) { return {vec_from_json(field(j, "base")), vec_from_json(field(j, "dir"))}; }

Json to_json(const CremonaLine<Rat>& c) {
  return Json{{"y", to_json(c.y())}, {"w", to_json(c.w())}, {"support", index_array(c.support())}};
}

CremonaLine<Rat> cremona_from_json(const Json& j) {
  CremonaLine<Rat> c(vec_from_json(field(j, "y")), vec_from_json(field(j, "w")));
  if (j.contains("support") && j["support"].get<std::vector<Eigen::Index>>() != c.support()) {
    throw PreconditionError("'support' does not match the nonzero entries of w");
  }
  return c;
}

Json to_json(const PlueckerPoint<Rat>& p) {
  Json entries = Json::object();
  for (const auto& [i, j] : pluecker_pairs(p.dim())) entries[pluecker_key(p.dim(), i, j)] = to_json(p.at(i, j));
  return Json{{"dim", p.dim()}, {"chart", p.chart() == Chart::P ? "p" : "q"}, {"entries", entries}};
}

PlueckerPoint<Rat> pluecker_from_json(const Json& j) {
  const auto d = field(j, "dim").get<Eigen::Index>();
  const auto chart_text = field(j, "chart").get<std::string>();
  if (chart_text != "p" && chart_text != "q") throw PreconditionError("chart must be \"p\" or \"q\"");
  if (d < 2) throw PreconditionError("Pluecker space needs d >= 2");
  const Json& entries = field(j, "entries");
  const auto pairs = pluecker_pairs(d);
  if (!entries.is_object() || entries.size() != pairs.size()) {
    throw PreconditionError("Pluecker 'entries' must have one key per pair i < j");
  }
  VecQ e(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    e(static_cast<Eigen::Index>(k)) = rat_from_json(field(entries, pluecker_key(d, pairs[k].first, pairs[k].second).c_str()));
  }
  return {d, chart_text == "p" ? Chart::P : Chart::Q, std::move(e)};
}

Json to_json(const Hyperplane<Rat>& h) {
  return Json{{"type", "hyperplane"}, {"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}};
}

Hyperplane<Rat> hyperplane_from_json(const Json& j) {
  expect_type(j, "hyperplane");
  Hyperplane<Rat> h{vec_from_json(field(j, "normal")), rat_from_json(field(j, "offset"))};
  if (h.normal.size() == 0 || h.normal.isZero()) throw PreconditionError("hyperplane normal must be nonzero");
  return h;
}

Json to_json(const StarBox<Rat>& s) {
  return Json{{"type", "starbox"}, {"lower", to_json(s.lower())}, {"upper", to_json(s.upper())}};
}

StarBox<Rat> starbox_from_json(const Json& j) {
  expect_type(j, "starbox");
  return {vec_from_json(field(j, "lower")), vec_from_json(field(j, "upper"))};
}

Json to_json(const StarFlat<Rat>& f) {
  return Json{{"type", "starflat"}, {"base", to_json(f.base())}, {"dir", to_json(f.dir())}, {"proper", f.proper()}};
}

StarFlat<Rat> starflat_from_json(const Json& j) {
  expect_type(j, "starflat");
  return {vec_from_json(field(j, "base")), vec_from_json(field(j, "dir"))};
}

Json to_json(const SpanMatrix<Rat>& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < m.dim() - 1; ++i) row.push_back(to_json(m.form(r, i)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.dim()}, {"n", m.n()}, {"rows", std::move(rows)}};
}

Json to_json(const MeetingConeDescription<Rat>& c) {
  Json out{{"apex", to_json(c.apex)},
           {"quadric", Json{{"yz", to_json(c.A)}, {"xz", to_json(c.B)}, {"xy", to_json(c.C)}}},
           {"degenerate", c.degenerate},
           {"frame_hull_dimension", c.frame_hull_dimension},
           {"permutation", Json::array({c.permutation[0], c.permutation[1], c.permutation[2]})},
           {"directions", Json::array({to_json(c.directions[0]), to_json(c.directions[1])})}};
  if (c.frame) {
    out["frame"] = Json{{"beta_over_alpha", Json::array({to_json(c.frame->beta_lo), to_json(c.frame->beta_hi)})},
                        {"gamma_over_alpha", Json::array({to_json(c.frame->gamma_lo), to_json(c.frame->gamma_hi)})}};
  } else {
    out["frame"] = nullptr;
  }
  return out;
}

Json to_json(const SignWitness<Rat>& w) {
  return Json{{"line", to_json(w.line)},
              {"sign", to_json(w.sign)},
              {"support", index_array(w.support)},
              {"cremona_reflected", to_json(to_cremona(reflect(w.line, w.sign)))}};
}

Json to_json(const TransversalCertificate<Rat>& c) {
  Json per_sign = Json::array();
  for (const auto& r : c.per_sign) {
    per_sign.push_back(Json{{"sign", to_json(r.sign)}, {"feasible", r.feasible}, {"supports_tried", r.supports_tried}});
  }
  return Json{{"feasible", c.feasible},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)},
              {"per_sign", std::move(per_sign)},
              {"lps_solved", c.lps_solved}};
}

Json to_json(const HellyReport& r) {
  Json violating = nullptr;
  if (r.violating_subset) violating = *r.violating_subset;
  return Json{{"family_size", r.family_size},
              {"helly_number", r.helly_number},
              {"subset_size", r.subset_size},
              {"all_subsets_feasible", r.all_subsets_feasible},
              {"family_feasible", r.family_feasible},
              {"violating_subset", violating},
              {"subsets_total", r.subsets_total},
              {"subsets_checked", r.subsets_checked},
              {"certified_by_family", r.certified_by_family},
              {"theorem_violation", r.theorem_violation},
              {"tightness_instance", r.tightness_instance}};
}

Json to_float_json(const VecQ& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_double(v(i)));
  return out;
}

}  // namespace tk
