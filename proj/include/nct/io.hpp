#pragma once

#include <json.hpp>

#include <string>

#include "nct/matrices.hpp"
#include "nct/moves.hpp"
#include "nct/seifert.hpp"

namespace nct {

using json = nlohmann::ordered_json;

// File payloads, version 1. Rationals travel as strings ("p/q" or "n"),
// group-ring elements as lists of {"coeff", "word"} with signed letters,
// move indices 1-based. Serialization is canonical: fixed key order, terms
// in their stored sorted order.

json read_json_file(const std::string &path);
json parse_json_text(const std::string &text);

LambdaMatrix parse_lambda_matrix(const json &j);
json to_json(const LambdaMatrix &m);

IntMatrix parse_seifert_payload(const json &j); // schema only; basis check is separate
json seifert_to_json(const IntMatrix &m);

MoveSequence parse_moves(const json &j, int gens);
json to_json(const MoveSequence &seq, int gens);

json to_json(const CyclicSeries &s);

} // namespace nct
