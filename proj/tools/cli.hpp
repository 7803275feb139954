// Copyright 2026 The tdo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tdo/tdo.hpp"

// Command-line front end. Every invocation writes exactly one JSON report to
// `err`; circuit text goes to `out`. Exit codes: 0 ok, 1 domain or usage
// error, 2 I/O error.

namespace tdo::cli {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json metrics_json(const Metrics& m) {
  return Json{{"t_count", m.t_count},
              {"t_depth_as_written", m.t_depth_as_written},
              {"t_depth_scheduled", m.t_depth_scheduled},
              {"depth", m.depth},
              {"gate_count", m.gate_count},
              {"n_main", m.n_main},
              {"n_anc", m.n_anc}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

inline Circuit load(const std::string& path) { return parse_circuit(read_file(path)); }

inline SimOptions sim_options_from_env() {
  SimOptions opts;
  if (const char* v = std::getenv("TDO_MAX_QUBITS")) {
    try {
      std::size_t pos = 0;
      unsigned long n = std::stoul(v, &pos);
      if (pos == std::string(v).size() && n > 0) opts.max_state_qubits = n;
    } catch (const std::exception&) {
      // unparsable values leave the default cap in place
    }
  }
  return opts;
}

inline Json error_json(const std::exception& e) {
  Json j;
  if (const auto* se = dynamic_cast<const SourceError*>(&e)) {
    j["kind"] = "SourceError";
    j["line"] = se->line();
    j["column"] = se->column();
    j["message"] = se->message();
    return j;
  }
  if (const auto* ac = dynamic_cast<const AncillaContractViolated*>(&e)) {
    j["kind"] = "AncillaContractViolated";
    j["basis_input"] = ac->basis_input();
  } else if (const auto* na = dynamic_cast<const NotAlmostClassical*>(&e)) {
    j["kind"] = "NotAlmostClassical";
    j["gate"] = na->gate();
    j["position"] = na->position();
  } else if (dynamic_cast<const TooWide*>(&e)) {
    j["kind"] = "TooWide";
  } else if (dynamic_cast<const UnknownConstruction*>(&e)) {
    j["kind"] = "UnknownConstruction";
  } else if (dynamic_cast<const BadParams*>(&e)) {
    j["kind"] = "BadParams";
  } else if (dynamic_cast<const WidthMismatch*>(&e)) {
    j["kind"] = "WidthMismatch";
  } else if (dynamic_cast<const IoError*>(&e)) {
    j["kind"] = "IoError";
  } else {
    j["kind"] = "Error";
  }
  j["message"] = e.what();
  return j;
}

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"T-depth tools for Clifford+T circuits", "tdo"};
  app.require_subcommand(1);

  std::string file, file2, name, builtin;
  bool json = false;
  bool no_ancilla = false;
  bool up_to_phase = false;
  std::optional<std::size_t> controls;
  std::size_t stages = 1;

  auto* parse = app.add_subcommand("parse", "parse a circuit and print it canonically");
  parse->add_option("FILE", file)->required();
  parse->add_flag("--json", json);

  auto* metrics_cmd = app.add_subcommand("metrics", "T-count, T-depth and depth");
  metrics_cmd->add_option("FILE", file)->required();
  metrics_cmd->add_flag("--json", json, "suppress the plain-text summary on stdout");

  auto* emit = app.add_subcommand("emit", "print a named construction");
  emit->add_option("NAME", name)->required();
  emit->add_option("--controls", controls, "control count (multi-controlled-x)");
  emit->add_flag("--no-ancilla", no_ancilla);
  emit->add_flag("--json", json, "include metrics in the report");

  auto* rewrite = app.add_subcommand("rewrite", "rewrite to low T-depth with ancillas");
  rewrite->add_option("FILE", file)->required();
  rewrite->add_option("--stages", stages, "T-stage budget")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "exact equivalence of two circuits");
  verify->add_option("FILE1", file)->required();
  verify->add_option("FILE2", file2)->required();
  verify->add_flag("--up-to-global-phase", up_to_phase);

  auto* obstruct = app.add_subcommand("obstruct", "T-depth-1 impossibility certificate");
  auto* obstruct_file = obstruct->add_option("FILE", file);
  auto* obstruct_builtin =
      obstruct->add_option("--builtin", builtin)->check(CLI::IsMember({"tht"}));
  obstruct_file->excludes(obstruct_builtin);
  obstruct->require_option(1);

  std::string command = args.empty() ? "" : args.front();
  auto report = [&](Json body) {
    Json r;
    r["command"] = command;
    for (auto& [k, v] : body.items()) r[k] = v;
    err << r.dump() << '\n';
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report({{"status", "error"}, {"error", {{"kind", "UsageError"}, {"message", e.what()}}}});
    return 1;
  }

  const SimOptions opts = sim_options_from_env();
  try {
    Json payload;
    if (parse->parsed()) {
      Circuit c = load(file);
      out << emit_circuit(c);
      payload = metrics_json(metrics(c));
    } else if (metrics_cmd->parsed()) {
      Metrics m = metrics(load(file));
      payload = metrics_json(m);
      if (!json) {
        for (auto& [k, v] : payload.items()) out << k << ' ' << v.dump() << '\n';
      }
    } else if (emit->parsed()) {
      Circuit c = build(ConstructionId{name, controls, !no_ancilla});
      out << emit_circuit(c);
      payload["name"] = name;
      if (controls) payload["controls"] = *controls;
      payload["ancilla_form"] = !no_ancilla;
      if (json) payload["metrics"] = metrics_json(metrics(c));
    } else if (rewrite->parsed()) {
      Circuit c = load(file);
      Circuit r = stages == 1 ? rewrite_tdepth1(c) : rewrite_budgeted(c, stages);
      out << emit_circuit(r);
      payload["stages"] = stages;
      payload["ancillas_added"] = r.n_anc() - c.n_anc();
      payload["t_depth"] = t_depth_scheduled(r);
      payload["metrics"] = metrics_json(metrics(r));
    } else if (verify->parsed()) {
      Circuit a = load(file);
      Circuit b = load(file2);
      Equivalence eq = equivalent(a, b, up_to_phase, opts);
      payload["equivalent"] = eq.equivalent;
      if (eq.equivalent && up_to_phase) payload["phase"] = "w^" + std::to_string(*eq.phase);
    } else if (obstruct->parsed()) {
      Circuit c = builtin.empty() ? load(file) : tht_circuit();
      Verdict v = obstruction_verdict(c, opts);
      payload["e_zero"] = v.e_zero.to_string();
      payload["e_plus"] = v.e_plus.to_string();
      payload["ratio_rational"] =
          v.ratio_rational ? Json(*v.ratio_rational) : Json(nullptr);
      payload["conclusion"] = to_string(v.conclusion);
    }
    report({{"status", "ok"}, {"payload", payload}});
    return 0;
  } catch (const IoError& e) {
    report({{"status", "error"}, {"error", error_json(e)}});
    return 2;
  } catch (const Error& e) {
    report({{"status", "error"}, {"error", error_json(e)}});
    return 1;
  }
}

}  // namespace tdo::cli
