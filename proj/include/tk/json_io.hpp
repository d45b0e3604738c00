#pragma once

// JSON encoding of the exact types. Rationals are strings "p/q" (or "p");
// input additionally accepts JSON integers. Floating-point input is rejected.

#include "tk/dual_flats.hpp"
#include "tk/helly.hpp"
#include "tk/pluecker.hpp"
#include "tk/span.hpp"
#include "tk/transversal.hpp"

#include <json.hpp>

#include <string_view>

namespace tk {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "tk/1";

Json to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json to_json(const VecQ& v);
VecQ vec_from_json(const Json& j);

Json to_json(const SignClass& s);
SignClass sign_from_json(const Json& j);

Json to_json(const Box<Rat>& b);
Box<Rat> box_from_json(const Json& j);
std::vector<Box<Rat>> boxes_from_json(const Json& j);

Json to_json(const Line<Rat>& l);
Line<Rat> line_from_json(const Json& j);

Json to_json(const CremonaLine<Rat>& c);
CremonaLine<Rat> cremona_from_json(const Json& j);

Json to_json(const PlueckerPoint<Rat>& p);
PlueckerPoint<Rat> pluecker_from_json(const Json& j);

Json to_json(const Hyperplane<Rat>& h);
Hyperplane<Rat> hyperplane_from_json(const Json& j);

Json to_json(const StarBox<Rat>& s);
StarBox<Rat> starbox_from_json(const Json& j);

Json to_json(const StarFlat<Rat>& f);
StarFlat<Rat> starflat_from_json(const Json& j);

Json to_json(const SpanMatrix<Rat>& m);
Json to_json(const MeetingConeDescription<Rat>& c);

/// Witness in the input frame, plus Cremona coordinates of its reflection
/// into the ascending frame of its sign class.
Json to_json(const SignWitness<Rat>& w);
Json to_json(const TransversalCertificate<Rat>& c);
Json to_json(const HellyReport& r);

/// Decimal rendering for plot output only.
Json to_float_json(const VecQ& v);

}  // namespace tk
