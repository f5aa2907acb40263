#include "abelian_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "abelian/codes.hpp"
#include "abelian/errors.hpp"
#include "abelian/oracle.hpp"
#include "abelian/serialize.hpp"

namespace abelian::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  bool trace = false;
  bool extended = false;
  std::uint64_t budget = 0;
  std::string root_class;
  std::uint32_t n = 0;
  std::uint64_t target = 0;
};

Json read_input(const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    text = arg;
  } else if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

Json root_classes_json(const std::vector<RootClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(root_class_to_json(c));
  return out;
}

// Grid of orbit representatives for two variables, a plain list otherwise.
std::string orbit_table(const OrbitPartition& partition) {
  const auto& shape = partition.shape();
  std::ostringstream t;
  if (shape.dims() == 2) {
    for (std::uint32_t i = 0; i < shape.length(0); ++i) {
      for (std::uint32_t j = 0; j < shape.length(1); ++j) {
        t << (j ? " " : "") << std::setw(8) << to_string(partition.orbit_containing({i, j}).rep_index());
      }
      t << '\n';
    }
    return t.str();
  }
  for (const auto& orbit : partition.orbits()) {
    t << std::setw(16) << to_string(orbit.rep_index()) << "  size " << orbit.size() << '\n';
  }
  return t.str();
}

Json cmd_orbits(const Json& in, std::string& err) {
  const auto shape = shape_from_json(in);
  const std::uint64_t t = in.value("t", std::uint64_t{1});
  if (t == 0) throw ValidationError("t must be positive");
  const OrbitPartition partition(shape, t);
  Json out;
  out["q"] = shape.q();
  out["r"] = shape.lengths();
  out["t"] = t;
  out["orbit_count"] = partition.size();
  out["orbits"] = Json::array();
  for (const auto& orbit : partition.orbits()) {
    Json o;
    o["rep"] = index_to_json(orbit.rep_index());
    o["size"] = orbit.size();
    o["members"] = index_list_to_json(orbit.member_indices());
    out["orbits"].push_back(std::move(o));
  }
  err += orbit_table(partition);
  return out;
}

Json cmd_apdist_hypermatrix(const Json& in, const Options& opt) {
  const auto m = hypermatrix_from_json(in);
  if (m.is_zero()) throw ValidationError("the zero hypermatrix has no minimum apparent distance");
  const auto ap = apparent_distance(m);
  MadEngine engine;
  const auto result = engine.mad(m);
  Json out;
  out["hypermatrix"] = hypermatrix_to_json(m);
  out["d_star"] = ap.value;
  out["per_direction"] = ap.per_direction;
  out["involved_pairs"] = involved_pairs_to_json(ap.involved_pairs);
  out["mad"] = result.value;
  if (opt.trace) out["trace"] = mad_trace_to_json(result.trace);
  return out;
}

Json cmd_apdist(const Json& in, const Options& opt) {
  if (in.is_object() && in.contains("defining_set_orbit_reps")) return cmd_apdist_hypermatrix(in, opt);
  const auto code = code_from_json(in);
  if (code.is_zero()) throw ValidationError("the zero code has no apparent distance");
  MadEngine engine;
  const auto ap = apparent_distance_code(code, engine);
  Json out;
  out["code"] = code_to_json(code);
  out["length"] = code.length();
  out["dimension"] = code.dimension();
  out["d_star_alpha"] = ap.per_class.front().value;
  out["d_star_code"] = ap.value;
  out["bch_bound"] = bch_bound(code);
  out["optimized_root_classes"] = root_classes_json(ap.optimized_roots);
  out["per_class"] = Json::array();
  for (const auto& entry : ap.per_class) {
    out["per_class"].push_back({{"root_class", root_class_to_json(entry.root_class)}, {"d_star", entry.value}});
  }
  auto traced = code;
  if (!opt.root_class.empty()) {
    const auto rc = root_class_from_string(opt.root_class, code.shape());
    traced = code.remapped(rc);
    out["root_class"] = root_class_to_json(rc);
    out["d_star_root_class"] = engine.mad(traced.hypermatrix()).value;
  }
  if (opt.trace) out["trace"] = mad_trace_to_json(engine.mad(traced.hypermatrix()).trace);
  return out;
}

std::uint64_t designed_product(const BchSpec& spec) {
  std::uint64_t d = 1;
  for (const auto& dir : spec.directions) d *= dir.designed;
  return d;
}

Json dimension_bound_json(const DimensionBound& b) { return {{"value", b.value}, {"vacuous", b.vacuous}}; }

Json cmd_bch_build(const Json& in) {
  const auto shape = shape_from_json(in);
  const auto spec = bch_spec_from_json(in);
  const auto code = bch_code(shape, spec);
  Json out;
  out["spec"] = bch_spec_to_json(spec);
  out["code"] = code_to_json(code);
  out["dimension"] = code.dimension();
  out["dimension_bound"] = dimension_bound_json(bch_dimension_bound(shape, spec));
  out["designed_distance"] = designed_product(spec);
  out["zero_code"] = code.is_zero();
  if (!code.is_zero()) {
    out["bch_bound"] = bch_bound(code);
    out["d_star_alpha"] = apparent_distance_alpha(code);
  }
  return out;
}

Json cmd_bch_bound(const Json& in) {
  Json out;
  if (in.is_object() && in.contains("gamma")) {
    const auto shape = shape_from_json(in);
    const auto spec = bch_spec_from_json(in);
    out["spec"] = bch_spec_to_json(spec);
    out["dimension_bound"] = dimension_bound_json(bch_dimension_bound(shape, spec));
    out["designed_distance"] = designed_product(spec);
    return out;
  }
  const auto code = code_from_json(in);
  out["code"] = code_to_json(code);
  out["bch_bound"] = bch_bound(code);
  out["zero_hypercolumn_runs"] = zero_hypercolumn_runs(code.hypermatrix());
  return out;
}

Json cmd_multiply(const Json& in, const Options& opt) {
  const auto code = code_from_json(in);
  const auto product = multiply_dimension(code, opt.n);
  const auto ap_in = apparent_distance_code(code);
  Json out;
  out["input"] = code_to_json(code);
  out["input_dimension"] = code.dimension();
  out["input_d_star_code"] = ap_in.value;
  out["n"] = opt.n;
  out["code"] = code_to_json(product);
  out["length"] = product.length();
  out["dimension"] = product.dimension();
  out["d_star_code"] = apparent_distance_code(product).value;
  out["remapped"] = ap_in.per_class.front().value != ap_in.value;
  return out;
}

Json check(const std::string& name, std::uint64_t engine, std::uint64_t oracle, const std::string& relation) {
  const bool ok = relation == "==" ? engine == oracle : engine <= oracle;
  return {{"name", name}, {"engine", engine}, {"oracle", oracle}, {"relation", relation}, {"ok", ok}};
}

Json cmd_verify(const Json& in, const Options& opt, std::string& err) {
  const auto code = code_from_json(in);
  if (code.is_zero()) throw ValidationError("the zero code cannot be verified");
  if (!is_prime(code.shape().q())) throw ValidationError("verification oracles need a prime q");
  std::uint64_t budget = opt.extended ? kExtendedSpanBudget : kDefaultSpanBudget;
  if (opt.budget != 0) budget = opt.budget;

  const auto ap = apparent_distance_code(code);
  const auto g = generator_matrix(code);
  Json checks = Json::array();
  checks.push_back(check("dimension", code.dimension(), g.k(), "=="));
  for (const auto& entry : ap.per_class) {
    const auto m = code.remapped(entry.root_class).hypermatrix();
    checks.push_back(check("mad " + to_string(entry.root_class.multiplier), entry.value, mad_bruteforce(m), "=="));
  }
  const auto d = min_distance_bruteforce(g, budget);
  checks.push_back(check("d_star_code <= min_distance", ap.value, d, "<="));

  bool ok = true;
  for (const auto& c : checks) ok = ok && c["ok"].get<bool>();
  Json out;
  out["code"] = code_to_json(code);
  out["dimension"] = code.dimension();
  out["d_star_code"] = ap.value;
  out["min_distance"] = d;
  out["checks"] = std::move(checks);
  out["ok"] = ok;
  for (const auto& c : out["checks"]) {
    err += (c["ok"].get<bool>() ? "ok    " : "FAIL  ") + c["name"].get<std::string>() + ": engine " +
           std::to_string(c["engine"].get<std::uint64_t>()) + " " + c["relation"].get<std::string>() + " oracle " +
           std::to_string(c["oracle"].get<std::uint64_t>()) + '\n';
  }
  return out;
}

Json cmd_search_hd(const Json& in, const Options& opt) {
  const auto shape = shape_from_json(in);
  const std::uint64_t budget = opt.budget != 0 ? opt.budget : 100000;
  const auto result = hd_search(shape, opt.target, budget);
  Json out;
  out["q"] = shape.q();
  out["r"] = shape.lengths();
  out["target"] = opt.target;
  out["budget"] = budget;
  out["evaluated"] = result.evaluated;
  out["found"] = !result.codes.empty();
  out["dimension"] = result.dimension;
  out["codes"] = Json::array();
  for (const auto& c : result.codes) {
    out["codes"].push_back({{"orbit_reps", index_list_to_json(c.code.orbit_representatives())},
                            {"dimension", c.code.dimension()},
                            {"d_star_code", c.apparent_distance}});
  }
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  Options opt;
  CLI::App app{"Apparent distance, mad and BCH tools for abelian codes", "abelian"};
  app.set_version_flag("--version", std::string(ABELIAN_VERSION));
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("-i,--input", opt.input, "Input JSON: a file path, '-' for stdin, or an inline object")->required();
  app.add_option("-o,--output", opt.output, "Write the JSON result to this file instead of stdout");

  auto* orbits = app.add_subcommand("orbits", "q^t-orbit partition of a shape {\"q\",\"r\"[,\"t\"]}");
  auto* apdist = app.add_subcommand("apdist", "Apparent distances of a code or hypermatrix");
  apdist->add_flag("--trace", opt.trace, "Include the mad trace");
  apdist->add_option("--root-class", opt.root_class, "Evaluate the root class a1,...,as as well");
  auto* bch = app.add_subcommand("bch", "Multivariate BCH codes and bounds");
  bch->require_subcommand(1, 1);
  auto* bch_build = bch->add_subcommand("build", "Build the code of a BCH spec");
  auto* bch_bound_cmd = bch->add_subcommand("bound", "BCH bound of a code, or dimension bound of a spec");
  auto* multiply = app.add_subcommand("multiply", "Dimension multiplication of a cyclic code");
  multiply->add_option("--n", opt.n, "Multiplier n (gcd(q, n r) = 1)")->required()->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "Compare engine results with brute-force oracles");
  verify->add_option("--budget", opt.budget, "Maximum number of codewords to enumerate");
  verify->add_flag("--extended", opt.extended, "Raise the codeword budget to 2^28");
  auto* search = app.add_subcommand("search-hd", "Maximum-dimension codes reaching a target apparent distance");
  search->add_option("--target", opt.target, "Target apparent distance (>= 2)")->required();
  search->add_option("--budget", opt.budget, "Maximum number of candidate evaluations");

  std::vector<std::string> argv_storage{"abelian"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }

  try {
    const auto in = read_input(opt.input);
    Json out;
    if (orbits->parsed()) {
      out = cmd_orbits(in, result.err);
    } else if (apdist->parsed()) {
      out = cmd_apdist(in, opt);
    } else if (bch_build->parsed()) {
      out = cmd_bch_build(in);
    } else if (bch_bound_cmd->parsed()) {
      out = cmd_bch_bound(in);
    } else if (multiply->parsed()) {
      out = cmd_multiply(in, opt);
    } else if (verify->parsed()) {
      out = cmd_verify(in, opt, result.err);
      if (!out["ok"].get<bool>()) result.exit_code = kMismatch;
    } else if (search->parsed()) {
      out = cmd_search_hd(in, opt);
    }
    out["version"] = ABELIAN_VERSION;
    const auto text = out.dump(2) + "\n";
    if (opt.output.empty()) {
      result.out = text;
    } else {
      std::ofstream file(opt.output);
      if (!file || !(file << text)) throw UsageError("cannot write output file '" + opt.output + "'");
    }
  } catch (const UsageError& e) {
    result = {kUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    result = {kValidation, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const BudgetExceeded& e) {
    result = {kBudget, "", std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const Json::exception& e) {
    result = {kValidation, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    result = {kInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace abelian::cli
