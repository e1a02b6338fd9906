// udrig: command-line front end. Exit codes: 0 proven/valid/success,
// 1 refuted/invalid, 2 undecided/failure, 3 usage or input error.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "udrig/combinator.hpp"
#include "udrig/config_io.hpp"
#include "udrig/congruence.hpp"
#include "udrig/enumerator.hpp"
#include "udrig/gadgets.hpp"
#include "udrig/refuter.hpp"
#include "udrig/report.hpp"

using namespace udrig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInput = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

std::pair<std::string, std::string> split_pair(const std::string& s, const char* what) {
  auto comma = s.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == s.size() || s.find(',', comma + 1) != std::string::npos) {
    throw InputError(std::string(what) + ": expected two labels 'X,Y'");
  }
  return {s.substr(0, comma), s.substr(comma + 1)};
}

int default_precision() {
  if (const char* env = std::getenv("UDRIG_PRECISION")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring UDRIG_PRECISION='" << env << "'\n";
  }
  return kDefaultPrecision;
}

struct Options {
  std::string input;
  int precision = kDefaultPrecision;
  std::uint64_t seed = 0;
  int restarts = 64;
  int budget = 200;
  int N = 10;
  long denominator_bound = 64;
  std::string out;
  std::string claim;
  std::string pair;
  std::string recipe;
  std::string config_out;
  std::string base;
  std::string labels;
  int depth = 1;
  int added = 2;
  bool weak = false;
  bool timing = false;
};

class Run {
 public:
  Run(std::string command, const Options& o) : command_(std::move(command)), o_(o) {
    start_ = std::chrono::steady_clock::now();
    manifest_.command = command_;
    manifest_.parameters["precision"] = o.precision;
  }

  Configuration load(const std::string& path) {
    std::string bytes = read_file(path);
    manifest_.inputs.emplace_back(path, sha256_hex(bytes));
    try {
      return parse_configuration(bytes, o_.precision);
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  Json load_json(const std::string& path) {
    std::string bytes = read_file(path);
    manifest_.inputs.emplace_back(path, sha256_hex(bytes));
    try {
      return Json::parse(bytes);
    } catch (const Json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  Json& params() { return manifest_.parameters; }

  int finish(const Json& result, const std::string& summary, int code) {
    if (o_.timing) {
      manifest_.wall_clock_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    Json report;
    report["manifest"] = manifest_to_json(manifest_);
    report["result"] = result;
    report["exit_code"] = code;
    std::string text = report.dump(2) + "\n";
    if (o_.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o_.out, std::ios::binary);
      if (!f) throw InputError("cannot write '" + o_.out + "'");
      f << text;
      std::cout << summary;
    }
    return code;
  }

  void write_config(const Configuration& c) {
    if (o_.config_out.empty()) return;
    save_configuration(c, o_.config_out);
  }

 private:
  std::string command_;
  const Options& o_;
  RunManifest manifest_;
  std::chrono::steady_clock::time_point start_;
};

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Proven:
      return kExitOk;
    case Outcome::Refuted:
      return kExitRefuted;
    default:
      return kExitUndecided;
  }
}

RefuterParams refuter_params(const Options& o, Run& run) {
  RefuterParams p;
  p.seed = o.seed;
  p.restarts = o.restarts;
  run.params()["seed"] = o.seed;
  run.params()["restarts"] = o.restarts;
  return p;
}

int cmd_validate(const Options& o) {
  Run run("validate", o);
  Configuration c = run.load(o.input);
  ValidationReport r = validate(c, o.precision);
  std::string summary = std::string(r.valid() ? "valid" : "invalid") + "\n";
  return run.finish(validation_to_json(r), summary, r.valid() ? kExitOk : kExitRefuted);
}

int cmd_enumerate(const Options& o) {
  Run run("enumerate", o);
  Configuration c = run.load(o.input);
  require_valid(c, o.precision);
  Json result;
  try {
    Enumeration e;
    if (o.base.empty()) {
      e = enumerate(c, o.precision);
    } else {
      auto [a, b] = split_pair(o.base, "--base");
      run.params()["base"] = o.base;
      e = enumerate(c, find_order(c, a, b), o.precision);
    }
    result = enumeration_to_json(e, 30);
    return run.finish(result, std::to_string(e.solutions.size()) + " solutions\n", kExitOk);
  } catch (const EnumerationError& err) {
    result = Json{{"error", to_string(err.kind())}, {"message", err.what()}};
    return run.finish(result, std::string("enumeration incomplete: ") + err.what() + "\n", kExitUndecided);
  }
}

int cmd_spectrum(const Options& o) {
  Run run("spectrum", o);
  Configuration c = run.load(o.input);
  auto [x, y] = split_pair(o.pair, "--pair");
  run.params()["pair"] = o.pair;
  run.params()["mode"] = o.weak ? "weak" : "strong";
  Spectrum s = spectrum(c, x, y, o.weak ? Mode::Weak : Mode::Strong, o.precision);
  std::string summary = "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) summary += (i ? ", " : "") + s.values[i].to_string();
  summary += s.complete ? "} complete\n" : "} incomplete\n";
  return run.finish(spectrum_to_json(s), summary, s.complete ? kExitOk : kExitUndecided);
}

int cmd_verify(const Options& o, bool refute_only) {
  Run run(refute_only ? "refute" : "verify", o);
  Configuration c = run.load(o.input);
  Claim claim = parse_claim(o.claim);
  run.params()["claim"] = o.claim;
  RefuterParams p = refuter_params(o, run);
  Verdict v = refute_only ? refute(c, claim, p, o.precision) : verify_or_refute(c, claim, p, o.precision);
  Json result{{"claim", to_string(claim)}, {"verdict", verdict_to_json(v)}};
  if (!refute_only) {
    auto [x, y] = std::pair{claim_labels(claim)[0], claim_labels(claim)[1]};
    Spectrum s = spectrum(c, x, y, claim_mode(claim), o.precision);
    result["spectrum"] = spectrum_to_json(s);
  }
  std::string summary = to_string(v.outcome) + (v.reason.empty() ? "" : ": " + v.reason) + "\n";
  return run.finish(result, summary, exit_for(v.outcome));
}

int cmd_build(const Options& o) {
  Run run("build", o);
  Configuration c = run.load(o.input);
  if (o.recipe.empty()) throw InputError("--recipe is required");
  Json rj = run.load_json(o.recipe);
  GadgetRecipe r;
  try {
    r = recipe_from_json(rj);
  } catch (const InputError& e) {
    throw InputError(o.recipe + ": " + e.what());
  }
  Configuration out = apply_recipe(c, r, o.precision);
  run.write_config(out);
  Json result{{"recipe", to_string(r.kind)},
              {"points_added", out.size() - c.size()},
              {"validation", validation_to_json(validate(out, o.precision))},
              {"configuration", configuration_to_json(out)}};
  return run.finish(result, std::to_string(out.size()) + " points\n", kExitOk);
}

int cmd_strengthen(const Options& o) {
  Run run("strengthen", o);
  Configuration c = run.load(o.input);
  Claim claim = parse_claim(o.claim);
  run.params()["claim"] = o.claim;
  run.params()["budget"] = o.budget;
  run.params()["added"] = o.added;
  SearchBudget sb;
  sb.max_states = o.budget;
  sb.max_added = o.added;
  TBuilder t = default_tbuilder(sb, o.precision);
  Strengthened s;
  try {
    if (const auto* d = std::get_if<DistanceClaim>(&claim)) {
      s = strengthen_star(c, d->x, d->y, t, o.precision);
    } else if (const auto* k = std::get_if<CongruenceClaim>(&claim)) {
      s = strengthen_diamond(c, k->k, k->l, k->m, k->n, t, o.precision);
    } else {
      throw InputError("strengthen: expects a star/wstar or diamond/wdiamond claim");
    }
  } catch (const KitFailure& e) {
    return run.finish(Json{{"error", "kit-failure"}, {"message", e.what()}},
                      std::string("failed: ") + e.what() + "\n", kExitUndecided);
  }
  run.write_config(s.config);
  Json result{{"kits", kits_to_json(s.kits)},
              {"kit_count", s.kits.size()},
              {"points", s.config.size()},
              {"configuration", configuration_to_json(s.config)}};
  return run.finish(result, std::to_string(s.kits.size()) + " kits, " + std::to_string(s.config.size()) + " points\n",
                    kExitOk);
}

int cmd_closure(const Options& o) {
  Run run("closure", o);
  Configuration c = run.load(o.input);
  run.params()["depth"] = o.depth;
  run.params()["budget"] = o.budget;
  try {
    auto pts = constructible_closure(c, o.depth, static_cast<std::size_t>(o.budget), o.precision);
    return run.finish(Json{{"candidates", closure_to_json(pts)}, {"count", pts.size()}},
                      std::to_string(pts.size()) + " candidates\n", kExitOk);
  } catch (const ClosureBudgetExceeded& e) {
    return run.finish(Json{{"error", "budget-exceeded"}, {"message", e.what()}}, std::string(e.what()) + "\n",
                      kExitUndecided);
  }
}

int cmd_search(const Options& o) {
  Run run("search", o);
  Configuration c = run.load(o.input);
  Claim claim;
  if (!o.claim.empty()) {
    claim = parse_claim(o.claim);
    run.params()["claim"] = o.claim;
  } else {
    auto [x, y] = split_pair(o.pair, "--pair");
    claim = DistanceClaim{x, y, Mode::Strong};
    run.params()["pair"] = o.pair;
  }
  run.params()["budget"] = o.budget;
  run.params()["added"] = o.added;
  SearchBudget sb;
  sb.max_states = o.budget;
  sb.max_added = o.added;
  SearchResult r = search_witness(c, claim, sb, o.precision);
  if (r.witness) run.write_config(*r.witness);
  return run.finish(search_to_json(r), r.success ? "found\n" : "not found: " + r.note + "\n",
                    r.success ? kExitOk : kExitUndecided);
}

int cmd_congruence(const Options& o) {
  Run run("congruence", o);
  Configuration c = run.load(o.input);
  run.params()["N"] = o.N;
  run.params()["denominator_bound"] = o.denominator_bound;
  std::vector<std::string> labels;
  if (!o.labels.empty()) {
    std::stringstream ss(o.labels);
    for (std::string item; std::getline(ss, item, ',');) labels.push_back(item);
    run.params()["labels"] = o.labels;
  } else {
    for (std::size_t i = 0; i < c.size() && i < 4; ++i) labels.push_back(c.points()[i].label);
  }
  if (labels.size() != 4) throw InputError("congruence: need four points a,b,c,d");
  TruncationQuery q{c.point(labels[0]), c.point(labels[1]), c.point(labels[2]), c.point(labels[3]), o.N,
                    o.denominator_bound};
  TruncationResult r = truncated_equiv(q);
  Json result = truncation_to_json(r);
  result["table"] = truncation_table(r);
  return run.finish(result, truncation_table(r), r.closed_form ? kExitOk : kExitRefuted);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"udrig: unit-distance rigidity workbench"};
  app.require_subcommand(1);
  Options o;
  o.precision = default_precision();

  auto common = [&](CLI::App* sub) {
    sub->add_option("config", o.input, "Configuration JSON")->required();
    sub->add_option("--precision", o.precision, "Precision budget in bits")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Write the JSON report here (summary goes to stdout)");
    sub->add_flag("--timing", o.timing, "Record wall-clock time in the manifest");
  };
  auto refuter = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Refuter seed");
    sub->add_option("--restarts", o.restarts, "Refuter restarts")->check(CLI::PositiveNumber);
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Search states to evaluate")->check(CLI::NonNegativeNumber);
    sub->add_option("--added", o.added, "Points added along a search branch")->check(CLI::NonNegativeNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check pair classification against declared edges");
  common(validate_cmd);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate placements modulo isometry");
  common(enumerate_cmd);
  enumerate_cmd->add_option("--base", o.base, "Base edge 'A,B'");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Achievable image distances of a pair");
  common(spectrum_cmd);
  spectrum_cmd->add_option("--pair", o.pair, "Pair 'X,Y'")->required();
  spectrum_cmd->add_flag("--weak", o.weak, "Injective, non-unit-preserving maps only");
  auto* verify_cmd = app.add_subcommand("verify", "Verify a claim (refuter fallback)");
  common(verify_cmd);
  refuter(verify_cmd);
  verify_cmd->add_option("--claim", o.claim, "star:X,Y | wstar:X,Y | diamond:K,L,M,N | wdiamond:... | eps:X,Y,e")
      ->required();
  auto* refute_cmd = app.add_subcommand("refute", "Numeric counterexample search");
  common(refute_cmd);
  refuter(refute_cmd);
  refute_cmd->add_option("--claim", o.claim, "Claim")->required();
  auto* build_cmd = app.add_subcommand("build", "Apply a gadget recipe");
  common(build_cmd);
  build_cmd->add_option("--recipe", o.recipe, "Recipe JSON")->required();
  build_cmd->add_option("--config-out", o.config_out, "Write the built configuration here");
  auto* strengthen_cmd = app.add_subcommand("strengthen", "Adjoin epsilon kits for every pair");
  common(strengthen_cmd);
  search(strengthen_cmd);
  strengthen_cmd->add_option("--claim", o.claim, "star:X,Y or diamond:K,L,M,N")->required();
  strengthen_cmd->add_option("--config-out", o.config_out, "Write the strengthened configuration here");
  auto* closure_cmd = app.add_subcommand("closure", "Constructible unit-circle intersections");
  common(closure_cmd);
  closure_cmd->add_option("--depth", o.depth, "Iterations")->check(CLI::NonNegativeNumber);
  closure_cmd->add_option("--budget", o.budget, "Candidate cap")->check(CLI::PositiveNumber);
  auto* search_cmd = app.add_subcommand("search", "Search for a witness augmentation");
  common(search_cmd);
  search(search_cmd);
  search_cmd->add_option("--pair", o.pair, "Pair 'X,Y' (strong distance claim)");
  search_cmd->add_option("--claim", o.claim, "Any claim");
  search_cmd->add_option("--config-out", o.config_out, "Write the witness configuration here");
  auto* congruence_cmd = app.add_subcommand("congruence", "Finite truncations of the congruence definition");
  common(congruence_cmd);
  congruence_cmd->add_option("--N", o.N, "Truncation depth")->check(CLI::PositiveNumber);
  congruence_cmd->add_option("--denominator-bound", o.denominator_bound, "Search denominator bound")
      ->check(CLI::PositiveNumber);
  congruence_cmd->add_option("--labels", o.labels, "Points 'a,b,c,d' (default: first four)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*spectrum_cmd) return cmd_spectrum(o);
    if (*verify_cmd) return cmd_verify(o, false);
    if (*refute_cmd) return cmd_verify(o, true);
    if (*build_cmd) return cmd_build(o);
    if (*strengthen_cmd) return cmd_strengthen(o);
    if (*closure_cmd) return cmd_closure(o);
    if (*search_cmd) {
      if (o.pair.empty() && o.claim.empty()) throw InputError("search: --pair or --claim is required");
      return cmd_search(o);
    }
    if (*congruence_cmd) return cmd_congruence(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitInput;
  } catch (const EnumerationError& e) {
    std::cerr << "enumeration: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitInput;
}
