#include "cideal/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <map>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cideal/closures.hpp"
#include "cideal/coeff.hpp"
#include "cideal/errors.hpp"
#include "cideal/hilbert.hpp"
#include "cideal/report_json.hpp"
#include "cideal/suite.hpp"
#include "cideal/verify.hpp"

namespace cideal::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Flags {
  std::string input;
  std::optional<int> nmax;
  int validate = 3;
  int stable_steps = 2;
  std::string method = "atoms";
  std::optional<int> r;
  int t = 2;
  std::optional<int> i;
  std::uint64_t seed = 1;
  int count = 20;
  int d = 2;
  int max_exp = 5;
  std::string dir;
  std::string out_dir;
  bool update = false;
  bool pretty = false;
};

// Golden-file commands, in the order `corpus run --dir` checks them.
const std::vector<std::string> kGoldenCommands = {"hilbert", "rr", "icl", "chain", "defects"};

Limits limits_from(const Flags& f) {
  Limits limits;
  limits.validate_extra = f.validate;
  limits.rr_stable_steps = f.stable_steps;
  return limits;
}

ChainMethod method_from(const Flags& f) {
  if (f.method == "exhaustive") return ChainMethod::exhaustive;
  if (f.method == "atoms") return ChainMethod::atoms;
  throw ValidationError("--method must be exhaustive or atoms");
}

VerifyOptions verify_options(const Flags& f) {
  VerifyOptions opts;
  opts.limits = limits_from(f);
  opts.method = method_from(f);
  return opts;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

MonomialIdeal read_ideal(const Flags& f, std::istream& in) {
  std::string text;
  if (f.input.empty() || f.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(f.input);
    if (!file) throw ValidationError("cannot read " + f.input);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_ideal_document(doc);
}

json hilbert_command(const MonomialIdeal& I, const Flags& f) {
  const Limits limits = limits_from(f);
  const HilbertFit fit = e_coefficients(I, limits);
  const int last = f.nmax.value_or(fit.validated_through);
  if (last > limits.max_hilbert_n)
    throw CapExceeded("--nmax " + std::to_string(last) + " exceeds the cap of " + std::to_string(limits.max_hilbert_n));
  json table = json::array();
  PowerLadder powers(I);
  std::int64_t previous = 0;
  for (int n = 0; n <= last; ++n) {
    const std::int64_t hs = colength(powers.get(n + 1), ColengthMethod::box_enumeration, limits);
    table.push_back(json{{"n", n}, {"hilbert_samuel", hs}, {"assoc_graded", hs - previous}});
    previous = hs;
  }
  json out = to_json(fit);
  out["ideal"] = ideal_to_json(I);
  out["table"] = table;
  return out;
}

json rr_command(const MonomialIdeal& I, const Flags& f) {
  Limits limits = limits_from(f);
  if (f.nmax) limits.rr_n_cap = *f.nmax;
  json out = to_json(ratliff_rush(I, limits));
  out["ideal"] = ideal_to_json(I);
  return out;
}

json icl_command(const MonomialIdeal& I, const Flags& f) {
  json out = to_json(integral_closure(I, limits_from(f)));
  out["ideal"] = ideal_to_json(I);
  return out;
}

json chain_command(const MonomialIdeal& I, const Flags& f) {
  json out = to_json(coefficient_chain(I, method_from(f), limits_from(f)));
  out["ideal"] = ideal_to_json(I);
  return out;
}

json defects_command(const MonomialIdeal& I, const Flags& f) {
  json out = to_json(defect_series(I, f.nmax.value_or(3), limits_from(f)));
  out["ideal"] = ideal_to_json(I);
  return out;
}

json ideal_command(const std::string& name, const MonomialIdeal& I, const Flags& f) {
  if (name == "hilbert") return hilbert_command(I, f);
  if (name == "rr") return rr_command(I, f);
  if (name == "icl") return icl_command(I, f);
  if (name == "chain") return chain_command(I, f);
  return defects_command(I, f);
}

CheckReport verify_command(const std::string& kind, const MonomialIdeal& I, const Flags& f) {
  const VerifyOptions opts = verify_options(f);
  const int d = static_cast<int>(I.dim());
  if (kind == "shah") return check_shah(I, f.nmax.value_or(2), opts);
  if (kind == "main") return check_main_theorem(I, f.r.value_or(d - 1), f.nmax.value_or(3), opts);
  if (kind == "veronese") return check_veronese(I, f.t, f.nmax.value_or(2), opts);
  if (kind == "prop52") return f.i ? check_prop52(I, *f.i, opts) : check_prop52_all(I, opts);
  throw ValidationError("unknown check '" + kind + "'");
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw ValidationError("cannot write " + tmp.string());
    file << content;
  }
  fs::rename(tmp, path);
}

int corpus_gen(const Flags& f, std::ostream& out) {
  const auto corpus = random_corpus(f.seed, f.count, f.d, f.max_exp);
  if (f.out_dir.empty()) {
    json docs = json::array();
    for (const auto& I : corpus) docs.push_back(ideal_document(I));
    out << dump(docs, f.pretty) << '\n';
    return kOk;
  }
  fs::create_directories(f.out_dir);
  json written = json::array();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    char name[64];
    std::snprintf(name, sizeof name, "seed%llu_d%d_%03zu.json", static_cast<unsigned long long>(f.seed), f.d, k);
    write_atomically(fs::path(f.out_dir) / name, ideal_document(corpus[k]).dump(2) + "\n");
    written.push_back(name);
  }
  out << dump(json{{"written", written}}, f.pretty) << '\n';
  return kOk;
}

int corpus_suite(const Flags& f, std::ostream& out) {
  const VerifyOptions opts = verify_options(f);
  json ideals = json::array();
  int violations = 0;
  int inconclusive = 0;
  for (const auto& I : random_corpus(f.seed, f.count, f.d, f.max_exp)) {
    json checks = json::array();
    for (const auto& o : run_property_suite(I, opts)) {
      violations += o.verdict == Verdict::fails;
      inconclusive += o.verdict == Verdict::inconclusive;
      checks.push_back(json{{"name", o.name}, {"verdict", to_string(o.verdict)}});
    }
    ideals.push_back(json{{"ideal", ideal_to_json(I)}, {"checks", checks}});
  }
  out << dump(json{{"seed", f.seed},
                   {"count", f.count},
                   {"d", f.d},
                   {"max_exp", f.max_exp},
                   {"method", f.method},
                   {"ideals", ideals},
                   {"violations", violations},
                   {"inconclusive", inconclusive}},
              f.pretty)
      << '\n';
  return kOk;
}

// Inputs are <dir>/ideals/*.json; goldens are <dir>/expected/<stem>.<command>.json.
int corpus_goldens(const Flags& f, std::ostream& out) {
  const fs::path root(f.dir);
  const fs::path ideals_dir = root / "ideals";
  const fs::path expected_dir = root / "expected";
  if (!fs::is_directory(ideals_dir)) throw ValidationError("no ideals/ directory under " + f.dir);
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(ideals_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") inputs.push_back(entry.path());
  std::sort(inputs.begin(), inputs.end());
  if (f.update) fs::create_directories(expected_dir);

  json rows = json::array();
  int problems = 0;
  for (const auto& path : inputs) {
    Flags local = f;
    local.input = path.string();
    std::istringstream none;
    const MonomialIdeal I = read_ideal(local, none);
    for (const auto& command : kGoldenCommands) {
      const fs::path golden = expected_dir / (path.stem().string() + "." + command + ".json");
      std::string status;
      try {
        const std::string live = ideal_command(command, I, local).dump(2) + "\n";
        if (f.update) {
          write_atomically(golden, live);
          status = "updated";
        } else if (!fs::exists(golden)) {
          status = "missing";
        } else {
          std::ifstream file(golden, std::ios::binary);
          std::ostringstream ss;
          ss << file.rdbuf();
          status = ss.str() == live ? "match" : "mismatch";
        }
      } catch (const Error& e) {
        status = std::string("error: ") + e.what();
      }
      if (status != "match" && status != "updated") ++problems;
      rows.push_back(json{{"file", path.filename().string()}, {"command", command}, {"status", status}});
    }
  }
  out << dump(json{{"results", rows}, {"problems", problems}}, f.pretty) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert coefficients, closures and coefficient ideals of monomial ideals", "cideal"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", f.input, "ideal document (JSON); standard input when omitted");
    sub->add_option("--nmax", f.nmax, "table length, colon cap, or power bound, depending on the command");
    sub->add_option("--validate", f.validate, "extra points a fitted window must reproduce")->check(CLI::NonNegativeNumber);
    sub->add_option("--stable-steps", f.stable_steps, "equal colon steps that stop the Ratliff-Rush chain")
        ->check(CLI::PositiveNumber);
    sub->add_option("--method", f.method, "coefficient ideal search: exhaustive or atoms")
        ->check(CLI::IsMember({"exhaustive", "atoms"}));
    sub->add_flag("--pretty", f.pretty, "indent the JSON output");
  };

  std::map<std::string, CLI::App*> ideal_cmds;
  ideal_cmds["hilbert"] = app.add_subcommand("hilbert", "Hilbert coefficients and Hilbert-Samuel values");
  ideal_cmds["rr"] = app.add_subcommand("rr", "Ratliff-Rush closure with its colon certificate");
  ideal_cmds["icl"] = app.add_subcommand("icl", "integral closure with Newton witnesses");
  ideal_cmds["chain"] = app.add_subcommand("chain", "coefficient ideals I_0..I_d");
  ideal_cmds["defects"] = app.add_subcommand("defects", "Ratliff-Rush defect lengths of I^{n+1}");
  for (auto& [name, sub] : ideal_cmds) add_common(sub);

  std::string check_kind;
  CLI::App* verify = app.add_subcommand("verify", "run a check and print its report");
  verify->add_option("check", check_kind, "shah | main | veronese | prop52")
      ->required()
      ->check(CLI::IsMember({"shah", "main", "veronese", "prop52"}));
  add_common(verify);
  verify->add_option("--r", f.r, "r for the main check (default d-1)");
  verify->add_option("--t", f.t, "Veronese degree")->check(CLI::PositiveNumber);
  verify->add_option("--i", f.i, "single level i (default: every level)");

  std::string action;
  CLI::App* corpus = app.add_subcommand("corpus", "generate a seeded corpus or run the property suite");
  corpus->add_option("action", action, "gen | run")->required()->check(CLI::IsMember({"gen", "run"}));
  corpus->add_option("--seed", f.seed, "corpus seed");
  corpus->add_option("--count", f.count, "number of ideals")->check(CLI::NonNegativeNumber);
  corpus->add_option("--d", f.d, "number of variables (2 or 3)");
  corpus->add_option("--max-exp", f.max_exp, "largest pure-power exponent (2..6)");
  corpus->add_option("--dir", f.dir, "fixture directory: compare live output with golden files");
  corpus->add_option("--out", f.out_dir, "write generated documents here, one per file");
  corpus->add_flag("--update", f.update, "rewrite golden files instead of comparing");
  corpus->add_option("--validate", f.validate, "extra points a fitted window must reproduce")
      ->check(CLI::NonNegativeNumber);
  corpus->add_option("--stable-steps", f.stable_steps, "equal colon steps that stop the Ratliff-Rush chain")
      ->check(CLI::PositiveNumber);
  corpus->add_option("--method", f.method, "coefficient ideal search")->check(CLI::IsMember({"exhaustive", "atoms"}));
  corpus->add_flag("--pretty", f.pretty, "indent the JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cideal: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    for (auto& [name, sub] : ideal_cmds) {
      if (sub->parsed()) {
        out << dump(ideal_command(name, read_ideal(f, in), f), f.pretty) << '\n';
        return kOk;
      }
    }
    if (verify->parsed()) {
      const CheckReport report = verify_command(check_kind, read_ideal(f, in), f);
      out << dump(to_json(report), f.pretty) << '\n';
      return report.verdict == Verdict::fails ? kCheckFailed : kOk;
    }
    if (action == "gen") return corpus_gen(f, out);
    return f.dir.empty() ? corpus_suite(f, out) : corpus_goldens(f, out);
  } catch (const CapExceeded& e) {
    err << "cideal: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ValidationError& e) {
    err << "cideal: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    err << "cideal: internal inconsistency: " << e.what() << '\n';
    return kInternal;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "cideal: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace cideal::cli
