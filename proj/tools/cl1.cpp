// Copyright 2026 The cl1lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: proving, refuting, proof checking, game evaluation,
// strategy verification, diagonal counter-interpretations, terminal play and
// the HTTP session server.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cl1/classical.hpp"
#include "cl1/generic.hpp"
#include "cl1/http.hpp"
#include "cl1/json_io.hpp"
#include "cl1/parse.hpp"
#include "cl1/proof.hpp"
#include "cl1/session.hpp"
#include "cl1/verify.hpp"

namespace {

using cl1::Json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Config {
  std::size_t step_cap = cl1::kDefaultStepCap;
  std::size_t static_bound = cl1::kDefaultStaticBound;
  int port = 8080;
};

Json read_json_file(const std::string& path) {
  std::ifstream in;
  std::istream* src = &std::cin;
  if (path != "-") {
    in.open(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    src = &in;
  }
  Json j = Json::parse(*src, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("'" + path + "' is not valid JSON");
  return j;
}

void load_config(const std::string& path, Config& cfg) {
  if (path.empty()) return;
  const Json j = read_json_file(path);
  cfg.step_cap = j.value("step_cap", cfg.step_cap);
  cfg.static_bound = j.value("static_bound", cfg.static_bound);
  cfg.port = j.value("port", cfg.port);
}

cl1::Interpretation load_itp(const std::string& shorthand, const std::string& file) {
  if (!file.empty()) return cl1::interpretation_from_json(read_json_file(file));
  return cl1::interpretation_from_shorthand(shorthand);
}

cl1::Input parse_input(const std::string& text) {
  std::vector<std::uint64_t> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) terms.push_back(std::stoull(item));
  }
  return cl1::Input(std::move(terms));
}

std::string join_formulas(const std::vector<cl1::Formula>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) out += ", ";
    out += cl1::to_string(fs[i]);
  }
  return out;
}

int cmd_prove(const std::string& text, bool emit_proof, bool emit_refutation) {
  const cl1::Formula f = cl1::parse_formula(text);
  if (auto p = cl1::prove(f, cl1::System::CL1)) {
    std::cout << "provable\n";
    if (emit_proof) std::cout << cl1::proof_to_json(*p).dump(2) << "\n";
    return kExitYes;
  }
  std::cout << "unprovable\n";
  if (emit_refutation) std::cout << cl1::proof_to_json(*cl1::prove(f, cl1::System::CL1Prime)).dump(2) << "\n";
  return kExitNo;
}

int cmd_refute(const std::string& text) {
  const cl1::Formula f = cl1::parse_formula(text);
  if (auto p = cl1::prove(f, cl1::System::CL1Prime)) {
    std::cout << cl1::proof_to_json(*p).dump(2) << "\n";
    return kExitYes;
  }
  std::cout << "provable in CL1; no refutation\n";
  return kExitNo;
}

int cmd_check(const std::string& path) {
  const cl1::Proof p = cl1::proof_from_json(read_json_file(path));
  const cl1::ProofCheck c = cl1::check_proof(p);
  if (c) {
    std::cout << "ok: " << cl1::to_string(p.system) << " proof of " << cl1::to_string(p.goal()) << " in "
              << p.steps.size() << " steps\n";
    return kExitYes;
  }
  std::cout << "error at step " << c.step << ": " << c.reason << "\n";
  return kExitNo;
}

int cmd_eval(const std::string& text, const std::string& run_text, const std::string& run_file,
             const std::string& itp_text, const std::string& itp_file, const std::string& input_text) {
  const cl1::Formula f = cl1::parse_formula(text);
  const cl1::Run run = run_file.empty() ? cl1::parse_run(run_text) : cl1::run_from_json(read_json_file(run_file));
  const cl1::RunStatus st = cl1::run_status(f, run);
  if (st.illegal) {
    const cl1::Player w = cl1::adversary(st.illegal->offender);
    std::cout << cl1::to_char(w) << " wins: " << cl1::to_char(st.illegal->offender) << "-illegal at move "
              << st.illegal->index << "\n";
    return kExitYes;
  }
  const cl1::Interpretation itp = load_itp(itp_text, itp_file);
  const cl1::Player w = cl1::winner(f, run, itp, parse_input(input_text));
  std::cout << cl1::to_char(w) << ", limit " << cl1::to_string(st.position) << "\n";
  return kExitYes;
}

int cmd_legal_moves(const std::string& text, const std::string& who) {
  const cl1::Formula f = cl1::parse_formula(text);
  for (cl1::Player p : {cl1::Player::Top, cl1::Player::Bot}) {
    if (!who.empty() && who[0] != cl1::to_char(p)) continue;
    for (const cl1::LegalMove& m : cl1::legal_move_details(f, p)) {
      std::cout << cl1::to_char(p) << m.move.text() << "\t-> " << cl1::to_string(m.result) << "\n";
    }
  }
  return kExitYes;
}

int cmd_verify(const std::string& text) {
  const cl1::Formula f = cl1::parse_formula(text);
  const bool provable = cl1::duality_check(f) == cl1::System::CL1;
  const cl1::StrategyReport r = provable ? cl1::verify_winning(f, *cl1::prove(f, cl1::System::CL1))
                                         : cl1::verify_counter(f, *cl1::prove(f, cl1::System::CL1Prime));
  std::cout << (provable ? "provable" : "unprovable") << "; " << r.limits.size() << " limits; "
            << (r.passed ? (provable ? "all stable" : "all instable") : "FAILED") << "\n";
  std::cout << "limits: " << join_formulas(r.limits) << "\n";
  for (std::size_t i = 0; i < r.models.size(); ++i) {
    std::cout << "  falsified by " << cl1::valuation_to_json(r.models[i]).dump() << ": "
              << cl1::to_string(r.limits[i]) << "\n";
  }
  std::cout << "branches: " << r.branches.size() << " (" << r.stopped_branches() << " stopped, "
            << r.illegal_branches() << " adversary-illegal); nodes: " << r.nodes << "\n";
  for (const std::string& why : r.failures) std::cout << "  failure: " << why << "\n";
  return r.passed ? kExitYes : kExitNo;
}

int cmd_diagonal(const std::string& text, const std::string& policies_file, std::size_t randoms,
                 std::uint64_t seed, const Config& cfg) {
  const cl1::Formula f = cl1::parse_formula(text);
  auto refutation = cl1::prove(f, cl1::System::CL1Prime);
  if (!refutation) {
    std::cerr << "formula is CL1-provable; no counter-strategy exists\n";
    return kExitNo;
  }
  std::vector<std::unique_ptr<cl1::Agent>> policies;
  if (!policies_file.empty()) policies = cl1::agents_from_json(read_json_file(policies_file), f);
  for (std::size_t k = 0; k < randoms; ++k) policies.push_back(std::make_unique<cl1::RandomAgent>(f, seed + k));
  if (policies.empty()) {
    std::cerr << "no policies given (use --policies or --random)\n";
    return kExitError;
  }
  const cl1::DiagonalReport r = cl1::diagonal_interpretation(f, policies, *refutation, cfg.step_cap);
  std::cout << cl1::diagonal_to_json(r).dump(2) << "\n";
  return r.all_lost() ? kExitYes : kExitNo;
}

int cmd_static(const std::string& text, const std::string& itp_text, const Config& cfg) {
  const cl1::Formula f = cl1::parse_formula(text);
  std::vector<cl1::Valuation> vs;
  if (itp_text.empty()) {
    vs = cl1::all_valuations(f.atoms());
  } else {
    vs.push_back(cl1::valuation_at(cl1::interpretation_from_shorthand(itp_text), cl1::Input{}));
  }
  for (const cl1::Valuation& v : vs) {
    if (!cl1::check_static(f, v, cfg.static_bound)) {
      std::cout << "not static under " << cl1::valuation_to_json(v).dump() << "\n";
      return kExitNo;
    }
  }
  std::cout << "static under " << vs.size() << " valuation(s)\n";
  return kExitYes;
}

int cmd_equal(const std::string& a, const std::string& b, const Config& cfg) {
  const bool same = cl1::game_equal(cl1::parse_formula(a), cl1::parse_formula(b), {}, cfg.static_bound);
  std::cout << (same ? "equal" : "different") << "\n";
  return same ? kExitYes : kExitNo;
}

void print_state(const Json& st) {
  std::cout << "\nposition: " << st["formula_now_unicode"].get<std::string>() << "\n";
  std::cout << "run: " << cl1::format_run(cl1::run_from_json(st["run"])) << "\n";
  if (st["finished"].get<bool>()) return;
  std::cout << "your moves (" << st["human_role"].get<std::string>() << "):\n";
  for (const Json& m : st["legal_human_moves"]) {
    std::cout << "  " << m["move"].get<std::string>() << "\t-> " << m["preview"].get<std::string>() << "\n";
  }
  std::cout << "enter a move, 'stop' to make no more moves, or 'quit'\n";
}

int cmd_play(const std::string& text, const std::string& role, bool no_strategy, const std::string& itp_text) {
  cl1::SessionManager mgr;
  Json body{{"formula", text}, {"human_role", role}, {"free_play", no_strategy}};
  if (!itp_text.empty()) body["itp"] = cl1::interpretation_to_json(cl1::interpretation_from_shorthand(itp_text));
  cl1::ApiResponse r = mgr.create(body);
  if (r.status != 201) {
    std::cerr << r.body["error"].get<std::string>() << "\n";
    return kExitError;
  }
  const std::string id = r.body["id"];
  Json st = r.body["state"];
  std::cout << "you play " << role << "; strategy on the other side: " << st["strategy"].get<std::string>() << "\n";
  std::string line;
  while (true) {
    print_state(st);
    if (st["finished"].get<bool>()) {
      if (!st["winner"].is_null()) {
        std::cout << "winner: " << st["winner"].get<std::string>() << "\n";
        return kExitYes;
      }
      std::cout << "valuation needed for " << st["valuation_needed"].dump() << " (e.g. p=1,q=0): ";
      if (!std::getline(std::cin, line)) return kExitYes;
      try {
        r = mgr.set_interpretation(id, {{"itp", cl1::interpretation_to_json(cl1::interpretation_from_shorthand(line))}});
      } catch (const std::exception& e) {
        std::cout << e.what() << "\n";
        continue;
      }
      st = r.body;
      continue;
    }
    std::cout << "> ";
    if (!std::getline(std::cin, line) || line == "quit") return kExitYes;
    r = line == "stop" ? mgr.stop(id) : mgr.move(id, {{"move", line}});
    if (r.status != 200) {
      std::cout << r.body["error"].get<std::string>() << "\n";
      continue;
    }
    st = r.body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Propositional computability logic workbench"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with step_cap, static_bound, port");

  std::string formula, formula2, run_text, run_file, itp_text, itp_file, input_text, path, who, policies_file;
  std::string role = "B", host = "127.0.0.1";
  bool emit_proof = false, emit_refutation = false, no_strategy = false;
  std::size_t randoms = 0;
  std::uint64_t seed = 1;
  int port = 0;

  auto* prove = app.add_subcommand("prove", "decide CL1 provability (exit 0 provable, 1 unprovable)");
  prove->add_option("formula", formula)->required();
  prove->add_flag("--proof", emit_proof, "print the CL1 proof as JSON");
  prove->add_flag("--refute", emit_refutation, "print the CL1' proof when unprovable");

  auto* refute = app.add_subcommand("refute", "print a CL1' proof (exit 1 if the formula is CL1-provable)");
  refute->add_option("formula", formula)->required();

  auto* check = app.add_subcommand("check", "check a proof JSON file ('-' for stdin)");
  check->add_option("proof", path)->required();

  auto* eval = app.add_subcommand("eval", "winner of a run");
  eval->add_option("formula", formula)->required();
  eval->add_option("--run", run_text, "e.g. B1.1,T2.1.2 (S is the illegal move)");
  eval->add_option("--run-file", run_file, "run as JSON");
  eval->add_option("--itp", itp_text, "constant atoms, e.g. a=1,b=0");
  eval->add_option("--itp-file", itp_file, "interpretation JSON");
  eval->add_option("--input", input_text, "input terms, e.g. 3,0,1");

  auto* moves = app.add_subcommand("legal-moves", "list legal moves");
  moves->add_option("formula", formula)->required();
  moves->add_option("--player", who, "T or B");

  auto* verify = app.add_subcommand("verify", "extract the winning or counter strategy and verify it exhaustively");
  verify->add_option("formula", formula)->required();

  auto* diagonal = app.add_subcommand("diagonal", "build the diagonal counter-interpretation over a policy family");
  diagonal->add_option("formula", formula)->required();
  diagonal->add_option("--policies", policies_file, "JSON list of move lists or {\"random\":seed}");
  diagonal->add_option("--random", randoms, "append this many random agents");
  diagonal->add_option("--seed", seed, "first random seed");

  auto* stat = app.add_subcommand("static", "check delay-invariance of winners exhaustively");
  stat->add_option("formula", formula)->required();
  stat->add_option("--itp", itp_text, "one valuation instead of all, e.g. a=1");

  auto* equal = app.add_subcommand("equal", "compare two formulas as games");
  equal->add_option("first", formula)->required();
  equal->add_option("second", formula2)->required();

  auto* play = app.add_subcommand("play", "play in the terminal against the extracted strategy");
  play->add_option("formula", formula)->required();
  play->add_option("--role", role, "your side: T or B")->check(CLI::IsMember({"T", "B"}));
  play->add_flag("--no-strategy", no_strategy, "the computer makes no moves");
  play->add_option("--itp", itp_text, "constant atoms, e.g. a=1,b=0");

  auto* serve = app.add_subcommand("serve", "run the HTTP session API");
  serve->add_option("--port", port, "TCP port (default 8080 or config)");
  serve->add_option("--host", host, "bind address");

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg;
    load_config(config_path, cfg);
    if (*prove) return cmd_prove(formula, emit_proof, emit_refutation);
    if (*refute) return cmd_refute(formula);
    if (*check) return cmd_check(path);
    if (*eval) return cmd_eval(formula, run_text, run_file, itp_text, itp_file, input_text);
    if (*moves) return cmd_legal_moves(formula, who);
    if (*verify) return cmd_verify(formula);
    if (*diagonal) return cmd_diagonal(formula, policies_file, randoms, seed, cfg);
    if (*stat) return cmd_static(formula, itp_text, cfg);
    if (*equal) return cmd_equal(formula, formula2, cfg);
    if (*play) return cmd_play(formula, role, no_strategy, itp_text);
    if (*serve) {
      cl1::SessionManager mgr;
      const int p = port != 0 ? port : cfg.port;
      cl1::HttpService http(mgr);
      if (http.bind(host, p) < 0) {
        std::cerr << "cannot listen on " << host << ":" << p << "\n";
        return kExitError;
      }
      std::cerr << "listening on " << host << ":" << p << "\n";
      return http.run() ? kExitYes : kExitError;
    }
  } catch (const cl1::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
