#include "baire/wire.hpp"

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "baire/catalog.hpp"

namespace baire::wire {

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

Nat as_nat(const Json& j, const char* what) {
  // The parser stores exactly the naturals that fit the machine width as
  // unsigned; anything negative, fractional, or oversized lands elsewhere.
  if (!j.is_number_unsigned()) fail(std::string(what) + ": expected a machine-width natural number");
  return j.get<Nat>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) fail(std::string(what) + ": expected a boolean");
  return j.get<bool>();
}

const Json& field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

void expect_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) fail(std::string(what) + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail(std::string(what) + ": unknown key \"" + it.key() + "\"");
  }
}

Nat parse_decimal(const std::string& text, const char* what) {
  if (text.empty()) fail(std::string(what) + ": empty number");
  if (text.size() > 1 && text[0] == '0') fail(std::string(what) + ": non-canonical number \"" + text + "\"");
  Nat value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(std::string(what) + ": bad number \"" + text + "\"");
  return value;
}

std::string path_key(const FiniteSeq& a) {
  std::string out;
  for (Nat i = 0; i < a.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.at(i));
  }
  return out;
}

FiniteSeq parse_path_key(const std::string& key) {
  if (key.empty()) return FiniteSeq{};
  std::vector<Nat> items;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = key.find(',', start);
    std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    items.push_back(parse_decimal(part, "table key"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return FiniteSeq(std::move(items));
}

TableDefaultRule parse_default_rule(const Json& j) {
  expect_keys(j, {"kind", "value", "base", "slope"}, "default rule");
  std::string kind = field(j, "kind", "default rule").get<std::string>();
  if (kind == "const") {
    expect_keys(j, {"kind", "value"}, "const default rule");
    return TableDefaultRule{as_nat(field(j, "value", "const default rule"), "default value"), 0};
  }
  if (kind == "affine") {
    expect_keys(j, {"kind", "base", "slope"}, "affine default rule");
    return TableDefaultRule{as_nat(field(j, "base", "affine default rule"), "base"),
                            as_nat(field(j, "slope", "affine default rule"), "slope")};
  }
  fail("default rule: unknown kind \"" + kind + "\"");
}

Json default_rule_json(const TableDefaultRule& rule) {
  Json out = Json::object();
  if (rule.slope == 0) {
    out["kind"] = "const";
    out["value"] = rule.base;
  } else {
    out["base"] = rule.base;
    out["kind"] = "affine";
    out["slope"] = rule.slope;
  }
  return out;
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string dumps(const Json& j) { return j.dump(); }

FiniteSeq parse_seq(const Json& j) {
  if (!j.is_array()) fail("sequence: expected an array");
  std::vector<Nat> items;
  items.reserve(j.size());
  for (const Json& x : j) items.push_back(as_nat(x, "sequence item"));
  return FiniteSeq(std::move(items));
}

Json seq_json(const FiniteSeq& a) {
  Json out = Json::array();
  for (Nat x : a) out.push_back(x);
  return out;
}

Stream parse_stream(const Json& j) {
  expect_keys(j, {"prefix", "period"}, "stream");
  FiniteSeq prefix = parse_seq(field(j, "prefix", "stream"));
  FiniteSeq period = parse_seq(field(j, "period", "stream"));
  if (period.empty()) fail("stream: period must be nonempty");
  return Stream::eventually_periodic(std::move(prefix), std::move(period));
}

Json stream_json(const Stream& s) {
  if (!s.is_eventually_periodic()) fail("stream: oracle streams have no wire form");
  Json out = Json::object();
  out["period"] = seq_json(s.ep_period());
  out["prefix"] = seq_json(s.ep_prefix());
  return out;
}

BrouwerTree parse_tree(const Json& j) {
  if (!j.is_object()) fail("tree: expected an object");
  if (j.contains("leaf")) {
    expect_keys(j, {"leaf"}, "tree");
    return BrouwerTree::leaf(as_nat(field(j, "leaf", "tree"), "leaf value"));
  }
  expect_keys(j, {"node"}, "tree");
  const Json& node = field(j, "node", "tree");
  expect_keys(node, {"children", "default"}, "node");
  const Json& children = field(node, "children", "node");
  if (!children.is_object()) fail("node: children must be an object");
  std::map<Nat, BrouwerTree> support;
  for (auto it = children.begin(); it != children.end(); ++it) {
    Nat index = parse_decimal(it.key(), "child index");
    if (!support.emplace(index, parse_tree(it.value())).second)
      fail("node: duplicate child index " + it.key());
  }
  return BrouwerTree::node(std::move(support), parse_tree(field(node, "default", "node")));
}

Json tree_json(const BrouwerTree& t) {
  Json out = Json::object();
  if (t.is_leaf()) {
    out["leaf"] = t.leaf_value();
    return out;
  }
  Json children = Json::object();
  for (const auto& [n, c] : t.children()) children[std::to_string(n)] = tree_json(c);
  Json node = Json::object();
  node["children"] = std::move(children);
  node["default"] = tree_json(t.default_child());
  out["node"] = std::move(node);
  return out;
}

NbhdTable parse_table(const Json& j) {
  expect_keys(j, {"table", "default"}, "table function");
  const Json& entries = field(j, "table", "table function");
  if (!entries.is_object()) fail("table function: table must be an object");
  NbhdTable out;
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    FiniteSeq key = parse_path_key(it.key());
    if (!out.entries.emplace(std::move(key), as_nat(it.value(), "table entry")).second)
      fail("table function: duplicate key \"" + it.key() + "\"");
  }
  out.fallback = parse_default_rule(field(j, "default", "table function"));
  return out;
}

Json table_json(const NbhdTable& t) {
  Json out = Json::object();
  out["default"] = default_rule_json(t.fallback);
  Json entries = Json::object();
  for (const auto& [k, v] : t.entries) entries[path_key(k)] = v;
  out["table"] = std::move(entries);
  return out;
}

TruthTable parse_truth_table(const Json& j) {
  expect_keys(j, {"arity", "outputs"}, "truth table");
  TruthTable tt;
  tt.arity = as_nat(field(j, "arity", "truth table"), "arity");
  if (tt.arity > 20) fail("truth table: arity too large");
  const Json& outputs = field(j, "outputs", "truth table");
  if (!outputs.is_object()) fail("truth table: outputs must be an object");
  tt.outputs.assign(Nat{1} << tt.arity, 0);
  std::vector<bool> seen(tt.outputs.size(), false);
  for (auto it = outputs.begin(); it != outputs.end(); ++it) {
    const std::string& key = it.key();
    if (key.size() != tt.arity) fail("truth table: key \"" + key + "\" must have length equal to arity");
    Nat index = 0;
    for (char c : key) {
      if (c != '0' && c != '1') fail("truth table: key \"" + key + "\" must be binary");
      index = (index << 1) | static_cast<Nat>(c - '0');
    }
    if (seen[index]) fail("truth table: duplicate key \"" + key + "\"");
    seen[index] = true;
    tt.outputs[index] = as_nat(it.value(), "truth table output");
  }
  for (Nat i = 0; i < tt.outputs.size(); ++i) {
    if (!seen[i]) fail("truth table: missing entries");
  }
  return tt;
}

Json truth_table_json(const TruthTable& tt) {
  Json out = Json::object();
  out["arity"] = tt.arity;
  Json outputs = Json::object();
  for (Nat i = 0; i < tt.outputs.size(); ++i) {
    std::string key(tt.arity, '0');
    for (Nat k = 0; k < tt.arity; ++k) {
      if ((i >> (tt.arity - 1 - k)) & 1) key[k] = '1';
    }
    outputs[key] = tt.outputs[i];
  }
  out["outputs"] = std::move(outputs);
  return out;
}

NeighborhoodFn parse_gamma(const Json& j) {
  if (!j.is_object()) fail("neighbourhood function: expected an object");
  if (j.contains("leaf") || j.contains("node")) return NeighborhoodFn::from_tree(parse_tree(j));
  if (j.contains("table")) return NeighborhoodFn::from_table(parse_table(j));
  fail("neighbourhood function: expected a tree or a table form");
}

namespace {

PointwiseFn parse_catalog_fn(const Json& j) {
  expect_keys(j, {"fn", "value", "index"}, "catalog function");
  std::string name = field(j, "fn", "catalog function").get<std::string>();
  if (name == "head") {
    expect_keys(j, {"fn"}, "catalog function");
    return catalog::head();
  }
  if (name == "sum2") {
    expect_keys(j, {"fn"}, "catalog function");
    return catalog::sum2();
  }
  if (name == "const") {
    expect_keys(j, {"fn", "value"}, "catalog function");
    return catalog::constant(as_nat(field(j, "value", "catalog function"), "const value"));
  }
  if (name == "index") {
    expect_keys(j, {"fn", "index"}, "catalog function");
    return catalog::index(as_nat(field(j, "index", "catalog function"), "index"));
  }
  fail("catalog function: unknown name \"" + name + "\"");
}

Json catalog_fn_json(const Json& j) {
  PointwiseFn f = parse_catalog_fn(j);  // validates
  Json out = Json::object();
  std::string name = j.at("fn").get<std::string>();
  if (name == "const") {
    out["fn"] = name;
    out["value"] = as_nat(j.at("value"), "const value");
  } else if (name == "index") {
    out["fn"] = name;
    out["index"] = as_nat(j.at("index"), "index");
  } else {
    out["fn"] = name;
  }
  (void)f;
  return out;
}

}  // namespace

CBarFn parse_delta(const Json& j) {
  if (!j.is_object()) fail("delta: expected an object");
  if (j.contains("fn")) return delta_from_function(parse_catalog_fn(j));
  if (j.contains("table")) return CBarFn::from_table(parse_table(j));
  fail("delta: expected a table form or a catalog reference");
}

DetachablePredicate parse_predicate(const Json& j) {
  if (!j.is_object()) fail("predicate: expected an object");
  if (j.contains("rule")) {
    expect_keys(j, {"rule"}, "predicate");
    std::string rule = field(j, "rule", "predicate").get<std::string>();
    if (auto p = catalog::predicate(rule)) return *p;
    fail("predicate: unknown rule \"" + rule + "\"");
  }
  expect_keys(j, {"table", "default"}, "predicate");
  const Json& entries = field(j, "table", "predicate");
  if (!entries.is_object()) fail("predicate: table must be an object");
  auto table = std::make_shared<std::map<FiniteSeq, bool>>();
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    if (!table->emplace(parse_path_key(it.key()), as_bool(it.value(), "predicate entry")).second)
      fail("predicate: duplicate key \"" + it.key() + "\"");
  }
  bool fallback = as_bool(field(j, "default", "predicate"), "predicate default");
  return DetachablePredicate{"", [table, fallback](const FiniteSeq& a) {
                               auto it = table->find(a);
                               return it != table->end() ? it->second : fallback;
                             }};
}

namespace {

Json predicate_table_json(const Json& j) {
  parse_predicate(j);  // validates
  Json out = Json::object();
  if (j.contains("rule")) {
    out["rule"] = j.at("rule").get<std::string>();
    return out;
  }
  out["default"] = j.at("default").get<bool>();
  std::map<FiniteSeq, bool> sorted;
  for (auto it = j.at("table").begin(); it != j.at("table").end(); ++it)
    sorted.emplace(parse_path_key(it.key()), it.value().get<bool>());
  Json entries = Json::object();
  for (const auto& [k, v] : sorted) entries[path_key(k)] = v;
  out["table"] = std::move(entries);
  return out;
}

}  // namespace

Json eval_json(const EvalResult& r) {
  Json out = Json::object();
  out["consumed"] = r.consumed;
  out["value"] = r.value;
  return out;
}

Json check_report_json(const CheckReport& r) {
  Json out = Json::object();
  out["alphabet"] = r.alphabet;
  out["depth"] = r.depth;
  out["passed"] = r.passed;
  if (!r.passed) {
    Json violation = Json::object();
    violation["at"] = seq_json(r.at);
    if (r.kind == CheckReport::Kind::Constancy) {
      violation["extension"] = seq_json(r.extension);
      violation["kind"] = "constancy";
    } else {
      violation["kind"] = "barring";
    }
    out["violation"] = std::move(violation);
  }
  return out;
}

Json verdict_json(const BarVerdict& v) {
  Json out = Json::object();
  out["branching"] = v.branching;
  out["depth"] = v.depth;
  out["passed"] = v.passed;
  if (v.witness) out["witness"] = seq_json(*v.witness);
  return out;
}

Json gadget_json(const GadgetReport& r) {
  Json out = Json::object();
  out["bar"] = r.bar;
  out["disjunct"] = r.disjunct == Disjunct::Left ? "Left" : "Right";
  out["horizon"] = r.horizon;
  out["inductive"] = r.inductive;
  out["subset"] = r.subset;
  return out;
}

Json error_json(const Error& e) {
  Json body = Json::object();
  if (const auto* dv = dynamic_cast<const DominationViolated*>(&e)) {
    body["at"] = seq_json(dv->at());
    body["code"] = e.code();
  } else if (const auto* nud = dynamic_cast<const NonUniformDefault*>(&e)) {
    body["at"] = seq_json(nud->at());
    body["code"] = e.code();
    body["index"] = nud->index();
  } else if (const auto* db = dynamic_cast<const DepthBudgetExceeded*>(&e)) {
    body["cap"] = db->cap();
    body["code"] = e.code();
    body["depth"] = db->depth();
  } else if (const auto* fe = dynamic_cast<const FuelExhausted*>(&e)) {
    body["code"] = e.code();
    body["fuel"] = fe->fuel();
    if (fe->path()) body["path"] = seq_json(*fe->path());
  } else if (const auto* nb = dynamic_cast<const NotBarWithinDepth*>(&e)) {
    body["code"] = e.code();
    body["witness"] = seq_json(nb->witness());
  } else {
    body["code"] = e.code();
  }
  Json out = Json::object();
  out["error"] = std::move(body);
  return out;
}

std::string canonicalize(const std::string& text) {
  Json j = parse_text(text);
  if (j.is_array()) return dumps(seq_json(parse_seq(j)));
  if (!j.is_object()) fail("unrecognized wire value");
  if (j.contains("leaf") || j.contains("node")) return dumps(tree_json(parse_tree(j)));
  if (j.contains("prefix") || j.contains("period")) return dumps(stream_json(parse_stream(j)));
  if (j.contains("arity")) return dumps(truth_table_json(parse_truth_table(j)));
  if (j.contains("fn")) return dumps(catalog_fn_json(j));
  if (j.contains("rule")) return dumps(predicate_table_json(j));
  if (j.contains("table")) {
    const Json& entries = field(j, "table", "wire value");
    bool boolean = false;
    if (entries.is_object() && entries.begin() != entries.end()) boolean = entries.begin().value().is_boolean();
    else boolean = j.contains("default") && j.at("default").is_boolean();
    if (boolean) return dumps(predicate_table_json(j));
    return dumps(table_json(parse_table(j)));
  }
  fail("unrecognized wire value");
}

}  // namespace baire::wire
