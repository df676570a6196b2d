#pragma once

#include <string>

#include <json.hpp>

#include "baire/bars.hpp"
#include "baire/cantor.hpp"
#include "baire/nbhd.hpp"
#include "baire/seq.hpp"
#include "baire/tree.hpp"

namespace baire::wire {

using Json = nlohmann::ordered_json;

/// Parses a JSON document; throws ParseError with the parser's
/// position-annotated message on malformed text.
Json parse_text(const std::string& text);

/// Canonical serialization: objects are emitted with the key order chosen
/// at construction (sorted keys everywhere; tree children maps in ascending
/// numeric order), no insignificant whitespace.
std::string dumps(const Json& j);

FiniteSeq parse_seq(const Json& j);
Json seq_json(const FiniteSeq& a);

Stream parse_stream(const Json& j);
Json stream_json(const Stream& s);  // pre: eventually periodic form

BrouwerTree parse_tree(const Json& j);
Json tree_json(const BrouwerTree& t);

NbhdTable parse_table(const Json& j);
Json table_json(const NbhdTable& t);

TruthTable parse_truth_table(const Json& j);
Json truth_table_json(const TruthTable& tt);

/// Accepts a tree ({"leaf"| "node"}) or a table form.
NeighborhoodFn parse_gamma(const Json& j);

/// Accepts a table form or a catalog reference {"fn": name[, params]}.
CBarFn parse_delta(const Json& j);

/// Accepts {"rule": name} or a boolean table {"table": {...}, "default": b}.
DetachablePredicate parse_predicate(const Json& j);

Json eval_json(const EvalResult& r);
Json check_report_json(const CheckReport& r);
Json verdict_json(const BarVerdict& v);
Json gadget_json(const GadgetReport& r);
Json error_json(const Error& e);

/// Parses any recognized wire value and re-emits it canonically; identity
/// on already-canonical input.
std::string canonicalize(const std::string& text);

}  // namespace baire::wire
