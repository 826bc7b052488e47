#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylkit/suites.hpp"
#include "weylkit/weyl.hpp"

using namespace weylkit;
using Json = nlohmann::ordered_json;

namespace {

int cmd_suite(const std::string& name, const std::string& ring, int trials, std::uint64_t seed,
              const std::string& realization, const std::string& json_path, bool parallel,
              const std::string& mutation) {
  SuiteConfig cfg;
  cfg.suite = name;
  cfg.ring_spec = ring;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.realization = realization;
  cfg.parallel = parallel;
  cfg.mutation = mutation;
  SuiteReport rep = run_suite(cfg);
  std::string out = rep.to_json();
  if (json_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(json_path);
    if (!f) throw UsageError("cannot write " + json_path);
    f << out;
    std::cout << "suite " << rep.config.suite << ": " << rep.passed() << " passed, "
              << rep.failed() << " failed -> " << json_path << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_weyl(const std::string& selector, const std::string& ring_spec, const std::string& x_lit,
             std::uint64_t seed) {
  Ring R = Ring::parse(ring_spec);
  Realization real = Realization::parse(selector, R);
  Param x = real.parse_param(x_lit);
  Json j;
  j["realization"] = real.name();
  j["ring"] = ring_spec;
  j["x"] = real.param_str(x);
  Rng rng(seed);

  if (real.kind() == RealKind::SL3BC1) {
    const Triple& t = std::get<Triple>(x);
    auto res = bc1_counterexample(R, t.x, t.y, t.z, 16, seed);
    j["constructible"] = res.constructible;
    if (res.constructible) {
      j["w"] = res.w_str;
      j["w_squared"] = res.w_sq_str;
      j["weyl_extensional"] = res.weyl_extensional;
      j["matches_displayed_w"] = res.displayed_w;
      j["matches_displayed_w_squared"] = res.displayed_w_square;
      j["square_central"] = res.square_central;
    }
    std::cout << j.dump(2) << "\n";
    return res.constructible ? 0 : 1;
  }

  bool ok = real.constructible(x);
  j["constructible"] = ok;
  if (ok) {
    auto w = build_weyl(real, x);
    j["w"] = w->str();
    auto sq = weyl_square(real, x, 16, rng);
    j["w_squared"] = sq.square.str();
    j["square_equals_coroot_minus_one"] = sq.canonical;
    j["square_central_on_samples"] = sq.central;
    auto ids = weyl_identities_check(real, x, 8, rng);
    j["identities_pass"] = ids.pass();
  }
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_e7(const std::string& ring_spec, const std::string& action,
           const std::string& vector_csv) {
  Ring R = Ring::parse(ring_spec);
  auto parse_csv = [&](const std::string& text) {
    std::vector<Elem> out;
    std::string cur;
    for (char ch : text + ",") {
      if (ch == ',') {
        if (!cur.empty()) out.push_back(R.parse_scalar(cur));
        cur.clear();
      } else if (!isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    return out;
  };

  FAutomorphism f = FAutomorphism::identity(R);
  std::string step;
  std::vector<std::string> steps;
  for (char ch : action + ";") {
    if (ch == ';') {
      if (!step.empty()) steps.push_back(step);
      step.clear();
    } else {
      step += ch;
    }
  }
  for (const std::string& st : steps) {
    auto colon = st.find(':');
    if (colon == std::string::npos) throw UsageError("bad action step '" + st + "'");
    std::string op = st.substr(0, colon), arg = st.substr(colon + 1);
    if (op == "t+" || op == "t-") {
      auto coords = parse_csv(arg);
      if (coords.size() != 27)
        throw UsageError("t+/t- needs 27 scalars, got " + std::to_string(coords.size()));
      Albert a = Albert::from_coords(R, coords);
      f = f.compose(op == "t+" ? FAutomorphism::root_plus(a) : FAutomorphism::root_minus(a));
    } else if (op == "d") {
      f = f.compose(FAutomorphism::dilation(R.parse_scalar(arg)));
    } else {
      throw UsageError("unknown action op '" + op + "' (use t+, t-, d)");
    }
  }

  auto coords = parse_csv(vector_csv);
  if (coords.size() != 57) throw UsageError("the vector needs 57 scalars (r, b, s, c, t)");
  FVector v = FVector::from_coords(R, coords);
  FVector img = f.apply(v);
  Json j;
  j["ring"] = ring_spec;
  j["action"] = action;
  j["input"] = v.str();
  j["theta_input"] = f_theta(v).str();
  j["image"] = img.str();
  j["theta_image"] = f_theta(img).str();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_validate_e6(const std::string& path, const std::string& ring_spec) {
  Ring R = Ring::parse(ring_spec);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::vector<Elem> entries;
  std::string tok;
  while (f >> tok) entries.push_back(R.parse_scalar(tok));
  if (entries.size() != 27 * 27)
    throw UsageError("expected 729 entries (27x27 row-major), got " +
                     std::to_string(entries.size()));
  Matrix m(R, 27, 27);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) m.at(i, j) = entries[static_cast<size_t>(i) * 27 + j];
  std::string witness;
  auto validated = NormPreservingMap::validate(m, &witness);
  Json j;
  j["ring"] = ring_spec;
  j["matrix"] = path;
  j["norm_preserving"] = validated.has_value();
  if (!validated) j["witness"] = witness;
  std::cout << j.dump(2) << "\n";
  return validated ? 0 : 1;
}

int cmd_grading(const std::string& family, int d, int n) {
  TitsIndexId id = TitsIndexId::parse(family, d, n);
  GradedIndex gi = build_graded_index(id);
  auto layers = grading_layers(gi);
  Json j;
  j["index"] = id.str();
  j["params"] = Json{{"d", d}, {"n", n}};
  j["table"] = gi.table;
  Json jl;
  for (const auto& [grade, roots] : layers) jl[std::to_string(grade)] = roots.size();
  j["layers"] = jl;

  auto render = [](const LemmaReport& rep) {
    Json r;
    if (!rep.applicable) {
      r["status"] = "not-applicable";
      r["reason"] = rep.reason;
      return r;
    }
    r["status"] = rep.pass ? "pass" : "fail";
    r["witnesses"] = rep.witnesses.size();
    if (!rep.gaps.empty()) {
      Json gaps = Json::array();
      for (const auto& gap : rep.gaps) gaps.push_back(root_str(gap));
      r["witness_gaps"] = gaps;
    }
    return r;
  };
  j["lemma3"] = render(check_lemma_nondeg3(id));
  j["lemma5"] = render(check_lemma_nondeg5(id));
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylkit: exact Weyl-element computations in rank-1 isotropic groups"};
  app.require_subcommand(1);

  std::string ring = "zmod:97";
  std::uint64_t seed = 0;
  int trials = 200;

  auto* s = app.add_subcommand("suite", "run a named property suite");
  std::string suite_name, realization, json_path, mutation;
  bool parallel = false;
  s->add_option("--name", suite_name, "suite name")->required();
  s->add_option("--ring", ring, "ring spec: int | rat | zmod:<n> | poly:<base>:<k>");
  s->add_option("--trials", trials, "samples per check");
  s->add_option("--seed", seed, "rng seed");
  s->add_option("--realization", realization, "realization for the weyl suite");
  s->add_option("--json", json_path, "write the report to this path");
  s->add_flag("--parallel", parallel, "shard checks across threads (derived per-check seeds)");
  s->add_option("--mutate", mutation, "test hook: corrupt one operation")->group("");

  auto* w = app.add_subcommand("weyl", "build a Weyl element and print verdicts");
  std::string w_real, w_x;
  w->add_option("--realization", w_real,
                "sl:d | sp:d | spinb:n | spind1:3 | spindd:4 | e7 | so3adj | sl3bc1")
      ->required();
  w->add_option("--ring", ring, "ring spec");
  w->add_option("--x", w_x, "root parameter literal")->required();
  w->add_option("--seed", seed, "rng seed");

  auto* e = app.add_subcommand("e7", "apply a generator word to a 57-coordinate vector");
  std::string e_action, e_vector;
  e->add_option("--ring", ring, "ring spec");
  e->add_option("--action", e_action, "word like 't+:<27 csv>;d:<unit>;t-:<27 csv>'")->required();
  e->add_option("--vector", e_vector, "57 comma-separated scalars (r, b, s, c, t)")->required();

  auto* v = app.add_subcommand("validate-e6",
                               "check that a 27x27 matrix preserves the cubic norm");
  std::string matrix_path;
  v->add_option("--matrix", matrix_path, "row-major text file with 729 entries")->required();
  v->add_option("--ring", ring, "ring spec");

  auto* g = app.add_subcommand("grading", "layer sizes and lemma reports for a Tits index");
  std::string family;
  int d = 0, n = 0;
  g->add_option("--index", family, "1A | 2A | B | C | 1D | 2D | E7")->required();
  g->add_option("--d", d, "index parameter d");
  g->add_option("--n", n, "index parameter n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s->parsed())
      return cmd_suite(suite_name, ring, trials, seed, realization, json_path, parallel,
                       mutation);
    if (w->parsed()) return cmd_weyl(w_real, ring, w_x, seed);
    if (e->parsed()) return cmd_e7(ring, e_action, e_vector);
    if (v->parsed()) return cmd_validate_e6(matrix_path, ring);
    if (g->parsed()) return cmd_grading(family, d, n);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const ConfigError& err) {
    std::cerr << "configuration error: " << err.what() << "\n";
    return 2;
  } catch (const InternalError& err) {
    std::cerr << "internal consistency error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
