// Copyright 2026 The lgames Authors
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

// Command-line front end. Exit codes: 0 success/true, 1 false/UNSAT,
// 2 input error, 3 semantic error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lgames/io.hpp"
#include "lgames/lgames.hpp"

namespace {

using namespace lgames;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInput = 2;
constexpr int kSemantic = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(Rational::parse(part));
  return out;
}

void emit(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    write_file(path, j.dump(2) + "\n");
  }
}

StrategicGame load_game(const std::string& path) { return strategic_game_from_json(parse_json(read_file(path))); }

LogicalGame load_lgame(const std::string& path) { return logical_game_from_json(parse_json(read_file(path))); }

// Writes the game (or target game + sidecar) and reports the verification.
int write_representation(const Representation& rep, const std::string& method, const std::string& lgame_out,
                         const std::string& rep_out) {
  emit(lgame_out, to_json(rep.target));
  if (!rep_out.empty()) emit(rep_out, representation_sidecar(rep, method));
  auto report = verify_representation(rep);
  std::cerr << report.message << "\n";
  return report.pass ? kOk : kFalse;
}

struct Opts {
  // eval
  std::string algebra, formula, formula_file, assign;
  // files
  std::string game, lgame, rep, profile, out, lgame_out, rep_out, emit_formula;
  // corpus
  std::string c = "1", p, t = "1", grid;
  long n = 2, m = 4, steps = 8;
  // represent
  std::string method, anchors, b_anchors, lift;
  std::optional<long> rep_m;
  bool weak = false, trace = false;
};

int cmd_eval(const Opts& o) {
  Algebra alg = parse_algebra(o.algebra);
  std::string text = o.formula_file.empty() ? o.formula : read_file(o.formula_file);
  Formula f = parse_formula(text);
  Evaluation e;
  if (!o.assign.empty()) {
    for (const auto& item : split(o.assign, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("assignment '" + item + "' is not name=value");
      e[item.substr(0, eq)] = TruthValue::parse(item.substr(eq + 1));
    }
  }
  std::cout << evaluate(f, alg, e).str() << "\n";
  return kOk;
}

int cmd_corpus(const std::string& name, const Opts& o) {
  if (name == "new_technology") {
    Rational c = Rational::parse(o.c);
    auto rep = new_technology_representation(c);
    emit(o.out, to_json(rep.source));
    if (!o.lgame_out.empty()) emit(o.lgame_out, to_json(rep.target));
    if (!o.rep_out.empty()) emit(o.rep_out, representation_sidecar(rep, "corpus"));
    return kOk;
  }
  if (name == "matching_pennies") {
    auto rep = represent_binary_boolean(matching_pennies());
    emit(o.out, to_json(rep.source));
    if (!o.lgame_out.empty()) emit(o.lgame_out, to_json(rep.target));
    if (!o.rep_out.empty()) emit(o.rep_out, representation_sidecar(rep, "ab_i"));
    return kOk;
  }
  if (name == "love_and_hate") {
    auto rep = love_and_hate_representation(o.n, o.m);
    emit(o.out, to_json(rep.source));
    if (!o.lgame_out.empty()) emit(o.lgame_out, to_json(rep.target));
    if (!o.rep_out.empty()) emit(o.rep_out, representation_sidecar(rep, "corpus"));
    return kOk;
  }
  // vickrey
  Rational t = Rational::parse(o.t);
  auto p = rational_list(o.p);
  auto grid = o.grid.empty() ? vickrey_grid(t, o.steps) : rational_list(o.grid);
  auto rep = vickrey_representation(p, t, grid);
  emit(o.out, to_json(rep.source));
  if (!o.lgame_out.empty()) emit(o.lgame_out, to_json(rep.target));
  if (!o.rep_out.empty()) emit(o.rep_out, representation_sidecar(rep, "corpus"));
  return kOk;
}

int cmd_represent(const Opts& o) {
  StrategicGame g = load_game(o.game);
  const std::string& mth = o.method;
  if (mth == "ab_i") return write_representation(represent_binary_boolean(g), mth, o.lgame_out, o.rep_out);
  if (mth == "ab_ii") return write_representation(represent_binary_chain(g), mth, o.lgame_out, o.rep_out);
  if (mth == "ab_iii") {
    if (!o.rep_m) throw InputError("--m is required for ab_iii");
    Algebra alg = o.algebra.empty() ? catalog_lookup(AlgebraId::kL, static_cast<int>(*o.rep_m)) : parse_algebra(o.algebra);
    return write_representation(represent_binary_general(g, *o.rep_m, alg, rational_list(o.anchors)), mth,
                                o.lgame_out, o.rep_out);
  }
  if (mth == "vi") return write_representation(represent_rational_qg_delta(g), mth, o.lgame_out, o.rep_out);
  if (mth == "vi_gmc") return write_representation(represent_rational_gmc_delta(g, o.rep_m), mth, o.lgame_out, o.rep_out);
  if (mth == "vi_lm") return write_representation(represent_rational_lm(g, o.rep_m), mth, o.lgame_out, o.rep_out);
  if (mth == "vii") {
    if (o.algebra.empty()) throw InputError("--algebra is required for vii");
    return write_representation(represent_general(g, parse_algebra(o.algebra), rational_list(o.anchors),
                                                  rational_list(o.b_anchors)),
                                mth, o.lgame_out, o.rep_out);
  }
  return write_representation(represent_constant(g), mth, o.lgame_out, o.rep_out);
}

int cmd_verify(const Opts& o) {
  StrategicGame g = load_game(o.game);
  LogicalGame lg = load_lgame(o.lgame);
  auto rep = representation_from_json(g, lg, parse_json(read_file(o.rep)));
  auto report = verify_representation(rep);
  std::cout << (report.pass ? "PASS" : "FAIL") << (report.affine ? " affine" : "") << "\n";
  if (!report.pass) std::cout << report.message << "\n";
  return report.pass ? kOk : kFalse;
}

void print_profiles(const std::vector<Profile>& ps) {
  for (const auto& p : ps) std::cout << profile_str(p) << "\n";
}

int cmd_pure_ne(const Opts& o) {
  LogicalGame lg = load_lgame(o.lgame);
  auto d = decide_pure_ne(lg, o.weak);
  if (!o.emit_formula.empty()) write_file(o.emit_formula, print(d.existence) + "\n");
  std::cout << (d.sat ? "SAT" : "UNSAT") << "\n";
  print_profiles(d.profiles);
  return d.sat ? kOk : kFalse;
}

int cmd_mixed_check(const Opts& o) {
  LogicalGame lg = load_lgame(o.lgame);
  if (!o.lift.empty()) lg = lift(lg, parse_algebra(o.lift));
  auto mp = mixed_profile_from_json(parse_json(read_file(o.profile)), lg.strategy_counts());
  auto enc = build_mixed_encoding(lg);
  if (!o.emit_formula.empty()) write_file(o.emit_formula, print(enc.full) + "\n");
  auto r = check_mixed_ne(lg, mp, enc);
  if (o.trace) {
    for (const auto& [id, v] : r.trace) std::cout << id << " " << v.str() << "\n";
  }
  std::cout << (r.holds ? "true" : "false") << " " << r.value.str() << "\n";
  return r.holds ? kOk : kFalse;
}

int cmd_classify(const Opts& o) {
  LogicalGame lg = load_lgame(o.lgame);
  auto c = lg.classify();
  std::cout << "algebra " << lg.algebra().name() << "\n"
            << "basic " << (c.basic ? "yes" : "no") << "\n"
            << "finite " << (c.finite ? "yes" : "no") << "\n"
            << "full " << tri_str(c.full) << "\n"
            << "expressible " << (c.expressible ? "yes" : "no") << "\n"
            << "weakly_expressible " << (c.weakly_expressible ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_oracle(const std::string& verb, const Opts& o) {
  StrategicGame g = load_game(o.game);
  if (verb == "pure") {
    auto ps = pure_ne_scan(g);
    print_profiles(ps);
    return ps.empty() ? kFalse : kOk;
  }
  if (verb == "mixed-verify") {
    auto mp = mixed_profile_from_json(parse_json(read_file(o.profile)), g.strategy_counts());
    bool ok = verify_mixed(g, mp);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kOk : kFalse;
  }
  if (g.players() != 2) throw SemanticError("mixed-find needs a two-player game");
  auto eqs = find_mixed_2p(g);
  for (const auto& e : eqs) {
    std::cout << mixed_str(e.profile);
    for (const auto& x : e.expected) std::cout << " " << x.str();
    if (e.degenerate) std::cout << " DEGENERATE";
    std::cout << "\n";
  }
  return eqs.empty() ? kFalse : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lgames: logical games and their equilibria"};
  app.require_subcommand(1);
  Opts o;

  auto* eval = app.add_subcommand("eval", "evaluate a formula");
  eval->add_option("--algebra", o.algebra)->required();
  auto* fopt = eval->add_option("--formula", o.formula);
  eval->add_option("--formula-file", o.formula_file)->excludes(fopt);
  eval->add_option("--assign", o.assign, "name=value,...");

  auto* corpus = app.add_subcommand("corpus", "generate a corpus game");
  corpus->require_subcommand(1);
  std::string corpus_name;
  for (const char* name : {"new_technology", "matching_pennies", "love_and_hate", "vickrey"}) {
    auto* sub = corpus->add_subcommand(name);
    sub->add_option("--out", o.out);
    sub->add_option("--lgame-out", o.lgame_out);
    sub->add_option("--rep-out", o.rep_out);
    sub->callback([&corpus_name, name] { corpus_name = name; });
    std::string nm = name;
    if (nm == "new_technology") sub->add_option("--c", o.c);
    if (nm == "love_and_hate") {
      sub->add_option("--n", o.n);
      sub->add_option("--m", o.m);
    }
    if (nm == "vickrey") {
      sub->add_option("--p", o.p, "comma-separated private values")->required();
      sub->add_option("--t", o.t);
      sub->add_option("--grid", o.grid);
      sub->add_option("--steps", o.steps);
    }
  }

  auto* represent = app.add_subcommand("represent", "build a logical representation");
  represent->add_option("--game", o.game)->required();
  represent->add_option("--method", o.method)
      ->required()
      ->check(CLI::IsMember({"ab_i", "ab_ii", "ab_iii", "vi", "vi_gmc", "vi_lm", "vii", "constant"}));
  represent->add_option("--m", o.rep_m);
  represent->add_option("--algebra", o.algebra);
  represent->add_option("--anchors", o.anchors);
  represent->add_option("--b-anchors", o.b_anchors);
  represent->add_option("--lgame-out", o.lgame_out);
  represent->add_option("--rep-out", o.rep_out);

  auto* verify = app.add_subcommand("verify-representation", "check f_i = g(phi_i(c(s)))");
  verify->add_option("--game", o.game)->required();
  verify->add_option("--lgame", o.lgame)->required();
  verify->add_option("--rep", o.rep)->required();

  auto* pure = app.add_subcommand("pure-ne", "decide pure equilibria through the encoding");
  pure->add_option("--lgame", o.lgame)->required();
  pure->add_option("--emit-formula", o.emit_formula);
  pure->add_flag("--weak", o.weak);

  auto* mixed = app.add_subcommand("mixed-check", "evaluate the mixed equilibrium formula");
  mixed->add_option("--lgame", o.lgame)->required();
  mixed->add_option("--profile", o.profile)->required();
  mixed->add_option("--lift", o.lift, "algebra to lift into first");
  mixed->add_option("--emit-formula", o.emit_formula);
  mixed->add_flag("--trace", o.trace);

  auto* classify = app.add_subcommand("classify", "classify a logical game");
  classify->add_option("--lgame", o.lgame)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  std::string oracle_verb;
  for (const char* verb : {"pure", "mixed-verify", "mixed-find"}) {
    auto* sub = oracle->add_subcommand(verb);
    sub->add_option("--game", o.game)->required();
    if (std::string(verb) == "mixed-verify") sub->add_option("--profile", o.profile)->required();
    sub->callback([&oracle_verb, verb] { oracle_verb = verb; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*corpus) return cmd_corpus(corpus_name, o);
    if (*represent) return cmd_represent(o);
    if (*verify) return cmd_verify(o);
    if (*pure) return cmd_pure_ne(o);
    if (*mixed) return cmd_mixed_check(o);
    if (*classify) return cmd_classify(o);
    return cmd_oracle(oracle_verb, o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
}
