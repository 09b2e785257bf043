#include "cli.hpp"

#include "hermex/solvers.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace hermex::cli {

using io::json;

namespace {

// exact / float view of an instance after applying --backend and --tol
struct Resolved {
  io::LoadedInstance in;
  bool exact = true;
  TolerancePolicy pol;
};

Resolved resolve(const io::LoadedInstance& loaded, const Options& o) {
  Resolved r{loaded, true, {}};
  if (!o.backend.empty() && o.backend != "exact" && o.backend != "float") {
    throw InputError("backend must be exact or float");
  }
  if (o.backend == "exact" && !r.in.exact) {
    throw InputError("instance holds float scalars; the exact backend needs string rationals");
  }
  r.exact = o.backend.empty() ? r.in.exact : o.backend == "exact";
  if (!r.exact && r.in.exact) {
    r.in.fl = to_float(r.in.ex);
    r.in.exact = false;
  }
  if (o.tol) {
    if (r.exact) throw InputError("--tol applies to the float backend only");
    if (!(*o.tol > 0)) throw InputError("--tol must be positive");
    r.pol.rank_tol = r.pol.inertia_tol = *o.tol;
  }
  return r;
}

json header(const std::string& command, const Resolved& r) {
  json j = json::object();
  j["command"] = command;
  j["kind"] = to_string(r.in.kind());
  j["backend"] = r.exact ? "exact" : "float";
  return j;
}

json conditions_json(const std::vector<Condition>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(io::to_json(c));
  return a;
}

template <class T>
void fill(io::Report& rep, const Instance<T>& in, const TolerancePolicy& pol) {
  KindAnalysis a = hermex::analyze(in, pol);
  for (std::size_t k = 0; k < a.objectives.size(); ++k)
    rep.objectives.push_back({a.objectives[k], a.summaries[k], a.decisions[k].items});
  rep.premises = a.premises;
}

template <class T>
SolveResult<T> solution_set(const Instance<T>& in, const TolerancePolicy& pol) {
  switch (in.kind) {
    case Kind::free: {
      // no constraint on X: every Hermitian matrix
      const std::size_t n = in.at("B").cols();
      return linear_hermitian_solve(Matrix<T>(1, n), Matrix<T>(1, n), pol);
    }
    case Kind::pair:
      return pair_congruence_common(in.at("B2"), Hermitian<T>(in.at("A2")), in.at("B3"), Hermitian<T>(in.at("A3")),
                                    pol);
    case Kind::linear: return linear_hermitian_solve(in.at("B4"), in.at("A4"), pol);
    case Kind::linear_psd: return linear_psd_solve(in.at("B4"), in.at("A4"), pol);
    case Kind::partitioned:
      return linear_hermitian_solve(hcat(in.at("A1"), in.at("A2")), hcat(in.at("B1"), in.at("B2")), pol);
  }
  throw InputError("unknown kind");
}

template <class T>
int solve_with(const Instance<T>& in, const TolerancePolicy& pol, std::uint64_t seed, json& j) {
  SolveResult<T> s;
  try {
    s = solution_set(in, pol);
  } catch (const PremiseViolated& e) {
    j["status"] = "unsolvable";
    j["message"] = e.what();
    return unsolvable;
  }
  j["conditions"] = conditions_json(s.conditions);
  if (!s.solvable) {
    j["status"] = "unsolvable";
    j["message"] = s.reason();
    return unsolvable;
  }
  const AffineSolutionSet<T>& set = *s.set;
  json terms = json::array();
  for (const auto& t : set.terms)
    terms.push_back(json{{"kind", to_string(t.kind)},
                         {"parameter_rows", t.param_rows()},
                         {"parameter_cols", t.param_cols()},
                         {"left", io::to_json(t.left)},
                         {"right", io::to_json(t.right)}});
  Rng rng(seed);
  const Matrix<T> x = set.sample(rng);
  j["status"] = "ok";
  j["solution"] = json{{"hermitian", set.hermitian}, {"psd", set.psd}, {"x0", io::to_json(set.x0)}, {"terms", terms}};
  j["sample"] = json{{"seed", seed}, {"x", io::to_json(x)}, {"residual", set.residual(x)}, {"satisfies", set.satisfies(x)}};
  return ok;
}

template <class T>
int triple_with(const Instance<T>& in, const TolerancePolicy& pol, json& j) {
  const PairInstance<T> p = in.as_pair();
  TripleDecision<T> t;
  DecisionReport lsq;
  try {
    t = triple_common_solvable(p, pol);
    lsq = lsq_common_condition(p, pol);
  } catch (const PremiseViolated& e) {
    j["status"] = "premise_violated";
    j["message"] = e.what();
    return unsolvable;
  }
  json common = io::to_json(t.report.items.at(0));
  common["witness"] = t.witness ? io::to_json(*t.witness) : json(nullptr);
  json ls = json::array();
  for (const auto& d : lsq.items) ls.push_back(io::to_json(d));
  const bool yes = t.report.items.at(0).verdict;
  j["status"] = yes ? "ok" : "unsolvable";
  j["common_solution"] = std::move(common);
  j["least_squares"] = std::move(ls);
  return yes ? ok : unsolvable;
}

}  // namespace

Output analyze(const io::LoadedInstance& in, const Options& o) {
  const Resolved r = resolve(in, o);
  io::Report rep;
  rep.kind = to_string(r.in.kind());
  rep.backend = r.exact ? "exact" : "float";
  rep.rank_tol = r.pol.rank_tol;
  rep.inertia_tol = r.pol.inertia_tol;
  Output out;
  try {
    if (r.exact) {
      fill(rep, r.in.ex, r.pol);
    } else {
      fill(rep, r.in.fl, r.pol);
    }
    rep.status = "ok";
  } catch (const PremiseViolated& e) {
    rep.objectives.clear();
    rep.premises.clear();
    rep.status = "premise_violated";
    rep.message = e.what();
    out.code = unsolvable;
  }
  out.doc = io::to_json(rep);
  return out;
}

Output solve(const io::LoadedInstance& in, const Options& o, std::uint64_t seed) {
  const Resolved r = resolve(in, o);
  Output out;
  out.doc = header("solve", r);
  out.code = r.exact ? solve_with(r.in.ex, r.pol, seed, out.doc) : solve_with(r.in.fl, r.pol, seed, out.doc);
  return out;
}

Output check_triple(const io::LoadedInstance& in, const Options& o) {
  const Resolved r = resolve(in, o);
  if (r.in.kind() != Kind::pair) throw InputError("check-triple needs a pair instance");
  Output out;
  out.doc = header("check-triple", r);
  out.code = r.exact ? triple_with(r.in.ex, r.pol, out.doc) : triple_with(r.in.fl, r.pol, out.doc);
  return out;
}

Output verify(const io::LoadedInstance& in, const Options& o, const VerifyOptions& v) {
  if (o.backend == "float") throw InputError("verify runs on the exact backend only");
  if (v.grid < 0) throw InputError("--grid must be non-negative");
  const Resolved r = resolve(in, o);
  if (!r.exact) throw InputError("verify needs an exact instance (string rationals)");
  Output out;
  json& j = out.doc;
  j = header("verify", r);
  std::optional<std::vector<ExtremalSummary>> predicted;
  if (v.report) {
    if (v.report->kind != to_string(r.in.kind())) throw InputError("report is for kind " + v.report->kind);
    if (v.report->status != "ok") throw InputError("report has status " + v.report->status);
    predicted.emplace();
    for (const auto& ob : v.report->objectives) predicted->push_back(ob.summary);
  }
  const SearchBudget b{v.trials, v.grid, v.seed, SearchBudget{}.max_grid_dims};
  j["budget"] = json{{"trials", b.random_trials}, {"grid", b.grid_radius}, {"seed", b.seed}};
  j["predicted_from"] = v.report ? "report" : "engine";
  VerificationReport rep;
  try {
    rep = verify_instance(r.in.ex, b, predicted);
  } catch (const PremiseViolated& e) {
    j["status"] = "premise_violated";
    j["message"] = e.what();
    out.code = unsolvable;
    return out;
  }
  json outs = json::array();
  for (const auto& ob : rep.outcomes) {
    json fields = json::array();
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& f = ob.fields[k];
      json fj{{"field", ExtremalSummary::field_names[k]},
              {"status", to_string(f.status)},
              {"predicted", f.predicted},
              {"observed", f.observed}};
      if (f.witness) fj["witness"] = io::to_json(*f.witness);
      fields.push_back(std::move(fj));
    }
    outs.push_back(json{{"objective", ob.objective},
                        {"predicted", io::to_json(ob.predicted)},
                        {"observed", io::to_json(ob.observed)},
                        {"random_probes", ob.random_probes},
                        {"grid_probes", ob.grid_probes},
                        {"grid_used", ob.grid_used},
                        {"fields", std::move(fields)}});
  }
  j["status"] = rep.ok() ? "ok" : "violated";
  j["outcomes"] = std::move(outs);
  out.code = rep.ok() ? ok : violated;
  return out;
}

GeneratedInstance generate(const std::string& kind, const std::string& triple, std::size_t n, std::uint64_t seed) {
  if (kind.empty() == triple.empty()) throw InputError("gen needs exactly one of --kind or --triple");
  if (triple.empty()) return gen_instance(parse_kind(kind), n, seed);
  if (triple != "consistent" && triple != "infeasible") throw InputError("--triple must be consistent or infeasible");
  // A1 doubles as the third right-hand side
  const TripleCase t = gen_triple(n, seed, triple == "infeasible");
  GeneratedInstance gi;
  gi.instance.kind = Kind::pair;
  auto& m = gi.instance.mats;
  m["A1"] = t.inst.a1.matrix();
  m["B1"] = t.inst.b1;
  m["A2"] = t.inst.a2.matrix();
  m["B2"] = t.inst.b2;
  m["A3"] = t.inst.a3.matrix();
  m["B3"] = t.inst.b3;
  gi.planted = t.planted ? *t.planted : ExactMatrix(0, 0);
  return gi;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank and inertia extremes of Hermitian matrix expressions", "hermex"};
  app.require_subcommand(1);
  Options opt;
  bool text = false, json_flag = false;
  app.add_option("--backend", opt.backend, "exact or float (default: what the file holds)")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", opt.tol, "rank / inertia tolerance (float backend only)");
  auto* fj = app.add_flag("--json", json_flag, "JSON report (default)");
  auto* ft = app.add_flag("--text", text, "plain-text report");
  fj->excludes(ft);

  std::string file, report_path;
  std::uint64_t solve_seed = 1;
  VerifyOptions vo;
  std::string gen_kind, gen_triple, gen_out;
  std::size_t gen_n = 2;
  std::uint64_t gen_seed = 1;

  auto* c_analyze = app.add_subcommand("analyze", "rank / inertia extremes and decisions for an instance");
  c_analyze->add_option("file", file, "instance file")->required();
  auto* c_solve = app.add_subcommand("solve", "parametrized solution set and one sample");
  c_solve->add_option("file", file, "instance file")->required();
  c_solve->add_option("--seed", solve_seed, "sample seed");
  auto* c_triple = app.add_subcommand("check-triple", "common and least-squares solvability of three equations");
  c_triple->add_option("file", file, "pair instance file")->required();
  auto* c_verify = app.add_subcommand("verify", "brute-force check of the predicted extremes");
  c_verify->add_option("file", file, "instance file")->required();
  c_verify->add_option("--trials", vo.trials, "random probes per objective");
  c_verify->add_option("--grid", vo.grid, "lattice radius");
  c_verify->add_option("--seed", vo.seed, "probe seed");
  c_verify->add_option("--report", report_path, "check this report's summaries instead of recomputing");
  auto* c_gen = app.add_subcommand("gen", "random consistent instance with a planted solution");
  c_gen->add_option("--kind", gen_kind, "pair, linear, linear_psd, partitioned or free");
  c_gen->add_option("--triple", gen_triple, "consistent or infeasible: three-equation pair instance for check-triple");
  c_gen->add_option("--n", gen_n, "size of X");
  c_gen->add_option("--seed", gen_seed, "generator seed");
  c_gen->add_option("--out", gen_out, "write the instance here (default: standard output)");
  for (auto* s : {c_analyze, c_solve, c_triple, c_verify, c_gen}) s->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "hermex: " << e.what() << "\n";
    return input_error;
  }

  auto emit = [&](const json& j) {
    if (text) {
      out << io::render_text(j);
    } else {
      out << j.dump(2) << "\n";
    }
  };

  try {
    Output res;
    if (c_gen->parsed()) {
      if (opt.backend == "float") throw InputError("gen writes exact instances; drop --backend float");
      if (opt.tol) throw InputError("--tol applies to the float backend only");
      const GeneratedInstance gi = generate(gen_kind, gen_triple, gen_n, gen_seed);
      const json inst = io::to_json(gi.instance);
      if (gen_out.empty()) {
        emit(inst);
        return ok;
      }
      std::ofstream f(gen_out);
      f << inst.dump(2) << "\n";
      if (!f) throw InputError("cannot write '" + gen_out + "'");
      emit(json{{"command", "gen"}, {"kind", to_string(gi.instance.kind)}, {"n", gen_n}, {"seed", gen_seed},
                {"out", gen_out}, {"planted", io::to_json(gi.planted)}});
      return ok;
    }
    const io::LoadedInstance in = io::read_instance_file(file);
    auto with_path = [&](auto&& f) {
      try {
        return f();
      } catch (const InputError& e) {
        throw InputError(file + ": " + e.what());
      }
    };
    if (c_analyze->parsed()) {
      res = with_path([&] { return analyze(in, opt); });
    } else if (c_solve->parsed()) {
      res = with_path([&] { return solve(in, opt, solve_seed); });
    } else if (c_triple->parsed()) {
      res = with_path([&] { return check_triple(in, opt); });
    } else {
      if (!report_path.empty()) vo.report = io::read_report_file(report_path);
      res = with_path([&] { return verify(in, opt, vo); });
      if (vo.report) res.doc["report"] = report_path;
    }
    emit(res.doc);
    return res.code;
  } catch (const InternalInconsistency& e) {
    err << "hermex: internal inconsistency: " << e.what() << "\n";
    return violated;
  } catch (const PremiseViolated& e) {
    err << "hermex: " << e.what() << "\n";
    return unsolvable;
  } catch (const Error& e) {
    err << "hermex: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace hermex::cli
