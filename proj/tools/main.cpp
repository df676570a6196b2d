#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "baire/bars.hpp"
#include "baire/cantor.hpp"
#include "baire/catalog.hpp"
#include "baire/config.hpp"
#include "baire/nbhd.hpp"
#include "baire/registry.hpp"
#include "baire/seq.hpp"
#include "baire/tree.hpp"
#include "baire/wire.hpp"

namespace {

using baire::Nat;
using Json = baire::wire::Json;

// Inline JSON if the argument starts with a bracket, else a file path.
Json load_arg(const std::string& arg) {
  std::size_t i = arg.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (arg[i] == '{' || arg[i] == '[')) return baire::wire::parse_text(arg);
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw baire::ParseError("cannot read file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return baire::wire::parse_text(buf.str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw baire::ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Json& j) { std::cout << baire::wire::dumps(j) << "\n"; }

// Materializes the positive values of g on sequences of length <= depth
// over {0..alphabet-1} as a table with constant default 0.
Json materialize_gamma(const baire::NeighborhoodFn& g, Nat depth, Nat alphabet) {
  baire::NbhdTable out;
  std::function<void(const baire::FiniteSeq&)> walk = [&](const baire::FiniteSeq& a) {
    Nat v = g.apply(a);
    if (v > 0) out.entries.emplace(a, v);
    if (a.size() == depth) return;
    for (Nat i = 0; i < alphabet; ++i) walk(a.append(i));
  };
  walk(baire::FiniteSeq{});
  return baire::wire::table_json(out);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("BAIRE_DEPTH_CAP")) {
    try {
      baire::config::set_depth_cap(std::stoull(cap));
    } catch (const std::exception&) {
      std::cout << "{\"error\":{\"code\":\"invalid-argument\",\"message\":\"BAIRE_DEPTH_CAP must be a natural number\"}}\n";
      return 2;
    }
  }

  CLI::App app{"Decision trees, neighbourhood functions, and bar constructions on Baire space"};
  app.require_subcommand(1);

  std::string tree_arg;
  std::string stream_arg;
  std::string gamma_arg;
  std::string delta_arg;
  std::string pred_arg;
  std::string table_arg;
  std::string alpha_arg;
  std::string beta_arg;
  std::string file_arg;
  Nat fuel = 32;
  Nat depth = 6;
  Nat branching = 4;
  Nat alphabet = 4;

  std::function<void()> action;

  auto* eval_cmd = app.add_subcommand("eval", "Run a tree against a stream");
  eval_cmd->add_option("--tree", tree_arg, "Tree (inline JSON or file)")->required();
  eval_cmd->add_option("--stream", stream_arg, "Stream (inline JSON or file)")->required();
  eval_cmd->callback([&] {
    action = [&] {
      baire::BrouwerTree t = baire::wire::parse_tree(load_arg(tree_arg));
      baire::Stream s = baire::wire::parse_stream(load_arg(stream_arg));
      emit(baire::wire::eval_json(baire::eval(t, s)));
    };
  });

  auto* evalk1_cmd = app.add_subcommand("eval-k1", "Evaluate a c-bar presentation against a stream");
  evalk1_cmd->add_option("--delta", delta_arg, "Delta (table form or catalog reference)")->required();
  evalk1_cmd->add_option("--stream", stream_arg, "Stream (inline JSON or file)")->required();
  evalk1_cmd->add_option("--fuel", fuel, "Scan and certification horizon (default 32)");
  evalk1_cmd->add_option("--alphabet", alphabet, "Certification alphabet size (default 4)");
  evalk1_cmd->callback([&] {
    action = [&] {
      baire::CBarFn d = baire::wire::parse_delta(load_arg(delta_arg));
      baire::Stream s = baire::wire::parse_stream(load_arg(stream_arg));
      Nat value = baire::eval_k1(d, s, fuel, alphabet);
      Json out = Json::object();
      out["alphabet"] = alphabet;
      out["fuel"] = fuel;
      out["value"] = value;
      emit(out);
    };
  });

  auto* convert_cmd = app.add_subcommand("convert", "Build a binary tree from a truth table");
  convert_cmd->add_option("--table", table_arg, "Truth table (inline JSON or file)")->required();
  convert_cmd->callback([&] {
    action = [&] {
      baire::TruthTable tt = baire::wire::parse_truth_table(load_arg(table_arg));
      emit(baire::wire::tree_json(baire::tree_from_uniform(tt)));
    };
  });

  auto* check_cmd = app.add_subcommand("check-k0", "Check the neighbourhood-function laws at a bound");
  check_cmd->add_option("--gamma", gamma_arg, "Neighbourhood function (tree or table form)")->required();
  check_cmd->add_option("--depth", depth, "Check depth (default 6)");
  check_cmd->add_option("--alphabet", alphabet, "Alphabet size (default 4)");
  check_cmd->callback([&] {
    action = [&] {
      baire::NeighborhoodFn g = baire::wire::parse_gamma(load_arg(gamma_arg));
      emit(baire::wire::check_report_json(baire::check_k0(g, depth, alphabet)));
    };
  });

  auto* isbar_cmd = app.add_subcommand("is-bar", "Check that a predicate bars all paths at a bound");
  isbar_cmd->add_option("--pred", pred_arg, "Predicate (rule or boolean table)")->required();
  isbar_cmd->add_option("--branching", branching, "Alphabet size (default 4)");
  isbar_cmd->add_option("--depth", depth, "Path length (default 6)");
  isbar_cmd->callback([&] {
    action = [&] {
      baire::DetachablePredicate p = baire::wire::parse_predicate(load_arg(pred_arg));
      baire::BarPredicate bp = baire::BarPredicate::detachable(p.decide);
      emit(baire::wire::verdict_json(baire::is_bar(bp, branching, depth)));
    };
  });

  auto* fan_cmd = app.add_subcommand("fan", "Least uniform securing depth of a binary bar");
  fan_cmd->add_option("--pred", pred_arg, "Predicate (rule or boolean table)")->required();
  fan_cmd->add_option("--depth", depth, "Search limit (default 6)");
  fan_cmd->callback([&] {
    action = [&] {
      baire::DetachablePredicate p = baire::wire::parse_predicate(load_arg(pred_arg));
      Json out = Json::object();
      out["bound"] = baire::fan_bound(p, depth);
      emit(out);
    };
  });

  auto* trim_cmd = app.add_subcommand("trim", "Delay every answer past its own value");
  trim_cmd->add_option("--tree", tree_arg, "Tree (inline JSON or file)")->required();
  trim_cmd->callback([&] {
    action = [&] {
      emit(baire::wire::tree_json(baire::trim(baire::wire::parse_tree(load_arg(tree_arg)))));
    };
  });

  auto* saturate_cmd = app.add_subcommand("saturate", "Replace values by shortest securing prefix length + 1");
  saturate_cmd->add_option("--gamma", gamma_arg, "Neighbourhood function (tree or table form)")->required();
  saturate_cmd->add_option("--depth", depth, "Materialization depth (default 6)");
  saturate_cmd->add_option("--alphabet", alphabet, "Materialization alphabet (default 4)");
  saturate_cmd->callback([&] {
    action = [&] {
      baire::NeighborhoodFn g = baire::wire::parse_gamma(load_arg(gamma_arg));
      Json out = Json::object();
      out["alphabet"] = alphabet;
      out["depth"] = depth;
      out["gamma"] = materialize_gamma(baire::saturate(g), depth, alphabet);
      emit(out);
    };
  });

  auto* synth_cmd = app.add_subcommand("synthesize", "Synthesize a realizing tree from a c-bar presentation");
  synth_cmd->add_option("--delta", delta_arg, "Delta (table form or catalog reference)")->required();
  synth_cmd->add_option("--branching", branching, "Branching alphabet (default 4)");
  synth_cmd->add_option("--fuel", fuel, "Search depth limit (default 32)");
  synth_cmd->callback([&] {
    action = [&] {
      baire::CBarFn d = baire::wire::parse_delta(load_arg(delta_arg));
      emit(baire::wire::tree_json(baire::tree_from_cbar(d, branching, fuel)));
    };
  });

  auto* llpo_cmd = app.add_subcommand("demo-llpo", "Run the bounded omniscience demonstrator");
  llpo_cmd->add_option("--alpha", alpha_arg, "First truncation (JSON array)")->required();
  llpo_cmd->add_option("--beta", beta_arg, "Second truncation (JSON array)")->required();
  llpo_cmd->callback([&] {
    action = [&] {
      baire::LlpoInstance inst{baire::wire::parse_seq(load_arg(alpha_arg)),
                               baire::wire::parse_seq(load_arg(beta_arg))};
      emit(baire::wire::gadget_json(baire::llpo_gadget(inst)));
    };
  });

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Parse a wire-format file and re-emit it canonically");
  roundtrip_cmd->add_option("file", file_arg, "Wire-format file")->required();
  roundtrip_cmd->callback([&] {
    action = [&] { std::cout << baire::wire::canonicalize(read_file(file_arg)) << "\n"; };
  });

  for (const auto& binding : baire::registry::kVerbs) {
    if (app.get_subcommand_no_throw(binding.verb) == nullptr) {
      std::cerr << "internal: verb missing for operation " << binding.operation << "\n";
      return 2;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json body = Json::object();
    body["code"] = "usage";
    body["message"] = e.what();
    Json out = Json::object();
    out["error"] = std::move(body);
    emit(out);
    return 2;
  }

  try {
    action();
    return 0;
  } catch (const baire::ParseError& e) {
    Json body = Json::object();
    body["code"] = "parse";
    body["message"] = e.what();
    Json out = Json::object();
    out["error"] = std::move(body);
    emit(out);
    return 2;
  } catch (const std::invalid_argument& e) {
    Json body = Json::object();
    body["code"] = "invalid-argument";
    body["message"] = e.what();
    Json out = Json::object();
    out["error"] = std::move(body);
    emit(out);
    return 2;
  } catch (const baire::Error& e) {
    emit(baire::wire::error_json(e));
    return 1;
  } catch (const std::exception& e) {
    Json body = Json::object();
    body["code"] = "internal";
    body["message"] = e.what();
    Json out = Json::object();
    out["error"] = std::move(body);
    emit(out);
    return 2;
  }
}
