// pbfa: analyze pseudo-Boolean functions on the hypercube from the command
// line. Inputs are chosen by flag (never sniffed): --table/--table-json for
// truth table files, --expr for polynomial expressions, --seq for symmetric
// value sequences. Exit codes: 0 ok, 1 sweep found a counterexample,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pbfa/analysis.hpp"
#include "pbfa/calculus.hpp"
#include "pbfa/decomposition.hpp"
#include "pbfa/expr_parser.hpp"
#include "pbfa/games.hpp"
#include "pbfa/monotonicity.hpp"
#include "pbfa/permutability.hpp"
#include "pbfa/polynomial.hpp"
#include "pbfa/reconstruction.hpp"
#include "pbfa/sweep.hpp"
#include "pbfa/symmetric.hpp"
#include "pbfa/table_io.hpp"

namespace {

using nlohmann::json;

struct InputArgs {
  std::string table_file;
  std::string table_json_file;
  std::string expr;
  std::string seq;
  int arity = 0;  // optional widening for --expr
};

void add_input_flags(CLI::App& cmd, InputArgs& in) {
  auto* table = cmd.add_option("--table", in.table_file, "truth table file (text format; '-' for stdin)");
  auto* table_json = cmd.add_option("--table-json", in.table_json_file, "truth table file (JSON format)");
  auto* expr = cmd.add_option("--expr", in.expr, "polynomial expression, e.g. \"x1 - x1*x2 + x2*x3\"");
  auto* seq = cmd.add_option("--seq", in.seq, "symmetric function as comma-separated values");
  cmd.add_option("--arity", in.arity, "widen an --expr input to this arity")->check(CLI::Range(0, 20));
  table->excludes(table_json)->excludes(expr)->excludes(seq);
  table_json->excludes(expr)->excludes(seq);
  expr->excludes(seq);
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

pbfa::FunctionTable load_input(const InputArgs& in, std::string& source) {
  if (!in.table_file.empty()) {
    source = "table:" + in.table_file;
    return pbfa::read_table_text(slurp(in.table_file));
  }
  if (!in.table_json_file.empty()) {
    source = "table-json:" + in.table_json_file;
    return pbfa::table_from_json(json::parse(slurp(in.table_json_file)));
  }
  if (!in.expr.empty()) {
    source = "expr:" + in.expr;
    pbfa::MultilinearPolynomial p = pbfa::parse_expression(in.expr);
    if (in.arity > 0) p = p.extended(in.arity);
    return pbfa::to_table(p);
  }
  if (!in.seq.empty()) {
    source = "seq:" + in.seq;
    return pbfa::seq_to_function(pbfa::parse_sequence(in.seq));
  }
  throw CLI::RequiredError("one of --table, --table-json, --expr, --seq");
}

pbfa::SubsetMask parse_coalition(const std::string& text, int arity) {
  pbfa::SubsetMask out = pbfa::SubsetMask::empty(arity);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out = out.with(std::stoi(item));
  }
  return out;
}

pbfa::AskOrder parse_order(const std::string& text) {
  pbfa::AskOrder order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("ask order entries look like \"1:mal\" or \"2:ben\", got \"" + item + "\"");
    }
    const int index = std::stoi(item.substr(0, colon));
    const std::string role = item.substr(colon + 1);
    pbfa::PlayerRole r;
    if (role == "ben" || role == "benevolent") {
      r = pbfa::PlayerRole::Benevolent;
    } else if (role == "mal" || role == "malevolent") {
      r = pbfa::PlayerRole::Malevolent;
    } else {
      throw std::invalid_argument("unknown role \"" + role + "\" (use ben/mal)");
    }
    order.push_back(pbfa::AskedPlayer{index, r});
  }
  return order;
}

json point_json(const pbfa::Point& p) {
  json arr = json::array();
  for (int k = 1; k <= p.arity(); ++k) arr.push_back(p.get(k) ? 1 : 0);
  return arr;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_analyze(const InputArgs& in, bool as_json) {
  std::string source;
  const pbfa::FunctionTable f = load_input(in, source);
  const pbfa::AnalysisReport report = pbfa::analyze(f, source);
  emit(pbfa::to_json(report), as_json, pbfa::to_text(report));
  return 0;
}

int cmd_derive(const InputArgs& in, const std::string& ops_text, bool as_json) {
  std::string source;
  const pbfa::FunctionTable f = load_input(in, source);
  const pbfa::OpSequence ops = pbfa::parse_op_sequence(ops_text);
  const pbfa::FunctionTable result = pbfa::apply_sequence(f, ops);
  json j = pbfa::table_to_json(result);
  j["ops"] = pbfa::format_op_sequence(ops);
  emit(j, as_json, pbfa::write_table_text(result));
  return 0;
}

int cmd_sections(const InputArgs& in, int p, bool as_json) {
  std::string source;
  const pbfa::FunctionTable f = load_input(in, source);
  json arr = json::array();
  std::ostringstream text;
  pbfa::for_each_section(f, p, [&](const pbfa::SubsetMask& keep, const pbfa::Point& base,
                                   const pbfa::FunctionTable& table) {
    if (as_json) {
      arr.push_back(json{{"variables", keep.elements()},
                         {"base", point_json(base)},
                         {"table", pbfa::table_to_json(table)}});
      return;
    }
    text << "S=" << keep.str() << " base=" << base.str() << " values:";
    for (std::uint32_t x = 0; x < table.size(); ++x) text << ' ' << table[x].str();
    text << "\n";
  });
  emit(arr, as_json, text.str());
  return 0;
}

int cmd_permute(const InputArgs& in, int p, bool max_mode, bool as_json) {
  std::string source;
  const pbfa::FunctionTable f = load_input(in, source);
  json j;
  std::ostringstream text;
  if (max_mode) {
    const pbfa::PermutabilityReport report = pbfa::max_permutability_degree(f);
    j["max_permutability"] = report.max_p;
    j["counterexample"] = report.counterexample ? pbfa::to_json(*report.counterexample) : json(nullptr);
    text << "max permutability degree: " << report.max_p << "\n";
    if (report.counterexample) {
      text << "counterexample: " << pbfa::format_op_sequence(report.counterexample->order_a) << " vs "
           << pbfa::format_op_sequence(report.counterexample->order_b) << " at "
           << report.counterexample->point.str() << "\n";
    }
  } else {
    const pbfa::PermutabilityCheck check = pbfa::has_p_permutable_derivatives(f, p);
    j["p"] = p;
    j["permutable"] = check.permutable;
    j["counterexample"] = check.counterexample ? pbfa::to_json(*check.counterexample) : json(nullptr);
    text << p << "-permutable: " << (check.permutable ? "yes" : "no") << "\n";
    if (check.counterexample) {
      text << "counterexample: " << pbfa::format_op_sequence(check.counterexample->order_a) << " = "
           << check.counterexample->value_a.str() << " vs "
           << pbfa::format_op_sequence(check.counterexample->order_b) << " = "
           << check.counterexample->value_b.str() << " at " << check.counterexample->point.str() << "\n";
    }
  }
  emit(j, as_json, text.str());
  return 0;
}

int cmd_reconstruct(const std::string& profile_file, bool as_json) {
  const pbfa::DerivativeProfile profile = pbfa::profile_from_json(json::parse(slurp(profile_file)));
  const pbfa::ReconstructionResult result = pbfa::reconstruct(profile);
  json j;
  std::ostringstream text;
  if (const auto* unique = std::get_if<pbfa::FunctionTable>(&result)) {
    j["kind"] = "unique";
    j["table"] = pbfa::table_to_json(*unique);
    text << "unique\n" << pbfa::write_table_text(*unique);
  } else if (const auto* pair = std::get_if<pbfa::ParityPair>(&result)) {
    j["kind"] = "parity_pair";
    j["even_value"] = pair->even_value.str();
    j["odd_value"] = pair->odd_value.str();
    pbfa::FunctionTable even(profile.arity), odd(profile.arity);
    for (std::uint32_t x = 0; x < even.size(); ++x) {
      const bool is_even = pbfa::Point(profile.arity, x).weight() % 2 == 0;
      even[x] = is_even ? pair->even_value : pair->odd_value;
      odd[x] = is_even ? pair->odd_value : pair->even_value;
    }
    j["tables"] = json::array({pbfa::table_to_json(even), pbfa::table_to_json(odd)});
    text << "parity pair: " << pair->even_value.str() << " on even weights, " << pair->odd_value.str()
         << " on odd (or the swap)\n"
         << pbfa::write_table_text(even) << pbfa::write_table_text(odd);
  } else {
    const auto& witness = std::get<pbfa::InconsistencyWitness>(result);
    const char* kind = "";
    switch (witness.kind) {
      case pbfa::InconsistencyWitness::Kind::InvariantBreach: kind = "invariant-breach"; break;
      case pbfa::InconsistencyWitness::Kind::EmptyIntersection: kind = "empty-intersection"; break;
      case pbfa::InconsistencyWitness::Kind::PropagationConflict: kind = "propagation-conflict"; break;
      case pbfa::InconsistencyWitness::Kind::VerificationMismatch: kind = "verification-mismatch"; break;
    }
    j["kind"] = "inconsistent";
    j["witness"] = json{{"kind", kind}, {"k", witness.k}, {"point", point_json(witness.point)},
                        {"detail", witness.detail}};
    text << "inconsistent (" << kind << "): " << witness.detail << " at k=" << witness.k << " "
         << witness.point.str() << "\n";
  }
  emit(j, as_json, text.str());
  return 0;
}

int cmd_symmetric(const std::string& seq_text, bool as_json) {
  const pbfa::SymmetricSequence s = pbfa::parse_sequence(seq_text);
  const int degree = pbfa::seq_local_monotonicity_degree(s);
  json j{{"arity", s.arity()}, {"sequence", json::array()}, {"degree", degree}};
  for (const pbfa::Rational& v : s.alpha) j["sequence"].push_back(v.str());
  std::ostringstream text;
  text << "arity: " << s.arity() << "\n";
  text << "local monotonicity degree: " << degree << "\n";
  if (s.arity() >= 1) {
    const pbfa::SymmetricSequence m = pbfa::seq_meet(s);
    const pbfa::SymmetricSequence v = pbfa::seq_join(s);
    j["meet_sequence"] = pbfa::format_sequence(m);
    j["join_sequence"] = pbfa::format_sequence(v);
    text << "meet derivative sequence: " << pbfa::format_sequence(m) << "\n";
    text << "join derivative sequence: " << pbfa::format_sequence(v) << "\n";
  }
  // For symmetric functions the permutability degree equals the local
  // monotonicity degree; `permute --max` computes it directly instead.
  j["permutability_degree"] = degree;
  text << "permutability degree: " << degree << "\n";
  emit(j, as_json, text.str());
  return 0;
}

int cmd_decompose(const InputArgs& in, bool as_json) {
  std::string source;
  const pbfa::FunctionTable f = load_input(in, source);
  const auto d = pbfa::decompose(f);
  if (!d) {
    emit(json{{"monotone", false}}, as_json, "not monotone: no pseudo-polynomial decomposition\n");
    return 0;
  }
  std::ostringstream text;
  text << "monotone: min=" << d->a.str() << " max=" << d->b.str() << "\n";
  text << "orientations:";
  for (std::size_t i = 0; i < d->phi.size(); ++i) {
    text << " x" << i + 1 << (d->phi[i] == pbfa::Orientation::Increasing ? ":inc" : ":dec");
  }
  text << "\ncoefficients:";
  for (std::uint32_t s = 0; s < d->lattice_coef.size(); ++s) {
    if (s != 0 && !(d->a < d->lattice_coef[s])) continue;
    text << ' ' << pbfa::SubsetMask(f.arity(), s).str() << "=" << d->lattice_coef[s].str();
  }
  text << "\n";
  emit(pbfa::to_json(*d), as_json, text.str());
  return 0;
}

int cmd_game(const std::string& mode, const InputArgs& in, const std::string& coalition_text,
             int player, const std::string& order_text, bool as_json) {
  std::string source;
  const pbfa::FunctionTable f = load_input(in, source);
  const pbfa::SubsetMask coalition = parse_coalition(coalition_text, f.arity());
  json j;
  std::ostringstream text;
  if (mode == "worth") {
    const pbfa::Rational w = pbfa::worth(f, coalition);
    j = json{{"coalition", coalition.elements()}, {"worth", w.str()}};
    text << "worth" << coalition.str() << " = " << w.str() << "\n";
  } else if (mode == "contrib") {
    const pbfa::Rational c = pbfa::marginal_contribution(f, player, coalition);
    j = json{{"player", player}, {"coalition", coalition.elements()}, {"contribution", c.str()}};
    text << "contribution of player " << player << " to " << coalition.str() << " = " << c.str() << "\n";
  } else {
    const pbfa::AskOrder order = parse_order(order_text);
    const pbfa::Rational outcome = pbfa::sequential_outcome(f, coalition, order);
    j = json{{"coalition", coalition.elements()}, {"order", order_text}, {"outcome", outcome.str()}};
    text << "outcome = " << outcome.str() << "\n";
  }
  emit(j, as_json, text.str());
  return 0;
}

int cmd_sweep(const std::vector<std::string>& claims, const pbfa::SweepOptions& options, bool as_json,
              bool list_only) {
  if (list_only) {
    for (const std::string& name : pbfa::sweep_claim_names()) std::cout << name << "\n";
    return 0;
  }
  const std::vector<pbfa::SweepResult> results = pbfa::run_sweeps(claims, options);
  bool failed = false;
  json arr = json::array();
  for (const pbfa::SweepResult& r : results) {
    failed = failed || !r.ok();
    if (as_json) {
      arr.push_back(json{{"claim", r.claim},
                         {"population", r.population},
                         {"checked", r.checked},
                         {"passed", r.passed},
                         {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
                         {"seconds", r.seconds}});
      continue;
    }
    std::cout << (r.ok() ? "PASS" : "FAIL") << " " << r.claim << ": " << r.passed << "/" << r.checked
              << " in " << r.seconds << "s  [" << r.population << "]\n";
    if (r.counterexample) std::cout << "     counterexample: " << *r.counterexample << "\n";
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-Boolean function analysis on the hypercube"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  InputArgs in;

  auto* analyze = app.add_subcommand("analyze", "full report: monotonicity, degrees, sections, decomposition");
  add_input_flags(*analyze, in);

  auto* derive = app.add_subcommand("derive", "apply derivative operators (right to left)");
  std::string ops_text;
  add_input_flags(*derive, in);
  derive->add_option("--op", ops_text, "operators, e.g. \"v2 ^1\" (^k meet, vk join, dk difference)")
      ->required();

  auto* sections = app.add_subcommand("sections", "enumerate all sections of a given arity");
  int section_arity = 1;
  add_input_flags(*sections, in);
  sections->add_option("--p", section_arity, "section arity")->required();

  auto* permute = app.add_subcommand("permute", "check p-permutability of lattice derivatives");
  int permute_p = 2;
  bool permute_max = false;
  add_input_flags(*permute, in);
  auto* p_opt = permute->add_option("--p", permute_p, "check a single p");
  permute->add_flag("--max", permute_max, "find the largest permutable p")->excludes(p_opt);

  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a function from its derivative profile");
  std::string profile_file;
  reconstruct->add_option("--profile", profile_file, "profile JSON file ('-' for stdin)")->required();

  auto* symmetric = app.add_subcommand("symmetric", "sequence calculus for symmetric functions");
  std::string seq_text;
  symmetric->add_option("--seq", seq_text, "comma-separated values a_0,...,a_n")->required();

  auto* game = app.add_subcommand("game", "cooperative-game readings of the function");
  game->require_subcommand(1);
  std::string coalition_text;
  std::string order_text;
  int player = 1;
  auto* worth = game->add_subcommand("worth", "worth of a coalition");
  add_input_flags(*worth, in);
  worth->add_option("--coalition", coalition_text, "comma-separated player indices");
  auto* contrib = game->add_subcommand("contrib", "marginal contribution of a player");
  add_input_flags(*contrib, in);
  contrib->add_option("--player", player, "player index")->required();
  contrib->add_option("--coalition", coalition_text, "comma-separated player indices");
  auto* outcome = game->add_subcommand("outcome", "sequential outcome for an ask order");
  add_input_flags(*outcome, in);
  outcome->add_option("--order", order_text, "ask order, e.g. \"1:mal,2:ben\"")->required();
  outcome->add_option("--coalition", coalition_text, "comma-separated player indices");

  auto* decompose = app.add_subcommand("decompose", "pseudo-polynomial decomposition of a monotone function");
  add_input_flags(*decompose, in);

  auto* sweep = app.add_subcommand("sweep", "run the claim-verification sweeps");
  std::vector<std::string> claim_names;
  pbfa::SweepOptions sweep_options;
  bool list_only = false;
  sweep->add_option("--claims", claim_names, "claims to run (default: all)")->delimiter(',');
  sweep->add_option("--max-arity", sweep_options.max_arity, "exhaustive Boolean arity bound (<= 4)");
  sweep->add_option("--samples", sweep_options.samples, "random population budget");
  sweep->add_option("--seed", sweep_options.seed, "random seed");
  sweep->add_flag("--list", list_only, "list claim names and exit");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return cmd_analyze(in, as_json);
    if (derive->parsed()) return cmd_derive(in, ops_text, as_json);
    if (sections->parsed()) return cmd_sections(in, section_arity, as_json);
    if (permute->parsed()) return cmd_permute(in, permute_p, permute_max, as_json);
    if (reconstruct->parsed()) return cmd_reconstruct(profile_file, as_json);
    if (symmetric->parsed()) return cmd_symmetric(seq_text, as_json);
    if (decompose->parsed()) return cmd_decompose(in, as_json);
    if (game->parsed()) {
      const std::string mode = worth->parsed() ? "worth" : (contrib->parsed() ? "contrib" : "outcome");
      return cmd_game(mode, in, coalition_text, player, order_text, as_json);
    }
    if (sweep->parsed()) return cmd_sweep(claim_names, sweep_options, as_json, list_only);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
