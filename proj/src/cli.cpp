#include "cantor/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "cantor/certificate.hpp"
#include "cantor/error.hpp"
#include "cantor/random.hpp"
#include "cantor/records.hpp"

namespace cantor {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string cert;
  std::string epsilon;
  std::string delta;
  std::string target = "1/2^1";
  std::string bits;
  std::string functional;
  std::string functionalFile;
  std::string string;
  std::string coloring;
  int depth = -1;
  int entries = -1;
  int lmax = 4;
  int k = 2;
  std::uint64_t seed = 0;
  bool json = false;
};

Json readJsonFile(const std::string& path) { return parseJson(readFile(path)); }

Json readTreeFile(const std::string& path) { return treeToJson(parseTree(readFile(path))); }

int requireDepth(const Options& o) {
  if (o.depth < 0) throw Error(ErrorCode::InvalidArgument, "--depth is required");
  return o.depth;
}

/// "constant:C", "length-mod:A" or "random:A:SEED" over 2^{<=depth}.
Coloring generatedColoring(const std::string& spec, int depth) {
  const auto parts = [&] {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t colon; (colon = spec.find(':', start)) != std::string::npos; start = colon + 1) {
      out.push_back(spec.substr(start, colon - start));
    }
    out.push_back(spec.substr(start));
    return out;
  }();
  const auto number = [&](const std::string& text) -> std::uint64_t {
    if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) || text.size() > 18) {
      throw Error(ErrorCode::MalformedInput, "bad number '" + text + "' in coloring '" + spec + "'");
    }
    return std::stoull(text);
  };
  if (parts.size() == 2 && parts[0] == "constant") {
    const int c = static_cast<int>(number(parts[1]));
    return Coloring::fromFunction(depth, c + 1, [c](const BitString&) { return c; });
  }
  if (parts.size() == 2 && parts[0] == "length-mod") {
    const int a = static_cast<int>(number(parts[1]));
    if (a < 1) throw Error(ErrorCode::MalformedInput, "length-mod needs a positive modulus");
    return Coloring::fromFunction(depth, a, [a](const BitString& s) { return s.length() % a; });
  }
  if (parts.size() == 3 && parts[0] == "random") {
    const auto a = number(parts[1]);
    if (a < 1) throw Error(ErrorCode::MalformedInput, "random coloring needs a positive color count");
    Rng rng(number(parts[2]));
    return Coloring::fromFunction(depth, static_cast<int>(a),
                                  [&](const BitString&) { return static_cast<int>(rng.below(a)); });
  }
  throw Error(ErrorCode::MalformedInput, "unknown coloring '" + spec + "'");
}

void printScalar(std::ostream& out, const std::string& name, const Json& value) {
  out << name << ": ";
  if (value.is_string()) {
    out << value.get<std::string>();
  } else if (value.is_array()) {
    const bool flat = value.size() <= 12 && std::all_of(value.begin(), value.end(), [](const Json& v) {
                        return v.is_primitive();
                      });
    if (flat) {
      out << value.dump();
    } else {
      out << value.size() << " entries";
    }
  } else {
    out << value.dump();
  }
  out << "\n";
}

void printSummary(std::ostream& out, const Json& cert) {
  out << "command: " << cert["command"].get<std::string>() << "\n";
  for (const auto& [name, value] : cert["result"].items()) {
    if (value.is_object() && value.contains("format")) {
      out << name << ": " << value["format"].get<std::string>() << " record\n";
    } else if (value.is_object()) {
      for (const auto& [inner, v] : value.items()) printScalar(out, name + "." + inner, v);
    } else {
      printScalar(out, name, value);
    }
  }
  std::size_t passed = 0;
  std::vector<std::string> failed;
  for (const auto& [name, value] : cert["checks"].items()) {
    if (value.get<bool>()) {
      ++passed;
    } else {
      failed.push_back(name);
    }
  }
  out << "checks: " << passed << "/" << cert["checks"].size() << " passed\n";
  for (const auto& name : failed) out << "failed check: " << name << "\n";
}

bool allChecksPass(const Json& cert) {
  const Json& checks = cert["checks"];
  return std::all_of(checks.begin(), checks.end(), [](const Json& v) { return v.get<bool>(); });
}

/// The file --out receives for each command, if any.
std::optional<std::string> artifact(const std::string& command, const Json& result) {
  if (command == "gen" || command == "adversary-encode" ||
      (command == "prune" && !result["empty"].get<bool>())) {
    return result["tree"].dump() + "\n";
  }
  if (command == "extract") return result["tree"].dump() + "\n";
  if (command == "force-extend") return result["condition"].dump(2) + "\n";
  if (command == "force-step" && result.contains("extension")) {
    return result["extension"].dump() + "\n";
  }
  return std::nullopt;
}

int emit(const Options& o, const Json& cert, std::ostream& out) {
  if (!o.cert.empty()) writeFile(o.cert, serializeCertificate(cert));
  const std::string command = cert["command"].get<std::string>();
  if (!o.out.empty()) {
    if (auto text = artifact(command, cert["result"])) writeFile(o.out, *text);
  }
  if (o.json) {
    out << serializeCertificate(cert);
  } else {
    printSummary(out, cert);
  }
  const bool emptied = command == "prune" && cert["result"]["empty"].get<bool>();
  return allChecksPass(cert) && !emptied ? kExitOk : kExitFailure;
}

int runVerify(const Options& o, std::ostream& out) {
  const Verification v = verifyCertificate(readJsonFile(o.in));
  if (o.json) {
    Json report;
    report["ok"] = v.ok;
    report["problems"] = v.problems;
    out << report.dump(2) << "\n";
  } else {
    out << (v.ok ? "certificate verified" : "certificate rejected") << "\n";
    for (const auto& p : v.problems) out << "problem: " << p << "\n";
  }
  return v.ok ? kExitOk : kExitFailure;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computation on positive-measure trees in Cantor space", "cantor"};
  app.require_subcommand(1);

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the command's main artifact here");
    sub->add_option("--cert", o.cert, "Write the certificate here");
    sub->add_flag("--json", o.json, "Print the certificate as JSON");
  };

  auto* gen = app.add_subcommand("gen", "Generate a seeded random tree with measure >= target");
  gen->add_option("--depth", o.depth, "Tree depth")->required();
  gen->add_option("--target", o.target, "Lower bound on the measure (p/2^q)");
  gen->add_option("--seed", o.seed, "64-bit seed");
  common(gen);

  auto* prune = app.add_subcommand("prune", "Prune a tree to its rho_eps-threshold core");
  prune->add_option("--in", o.in, "Tree file")->required();
  prune->add_option("--epsilon", o.epsilon, "Mass budget (p/2^q)")->required();
  common(prune);

  auto* extract = app.add_subcommand("extract", "Extract a splitting finite tree with measure guarantee");
  extract->add_option("--in", o.in, "Tree file")->required();
  extract->add_option("--epsilon", o.epsilon, "Allowed measure loss (p/2^q)")->required();
  common(extract);

  auto* density = app.add_subcommand("density", "Find density witnesses");
  density->add_option("--in", o.in, "Tree file")->required();
  density->add_option("--epsilon", o.epsilon, "Density slack (p/2^q)")->required();
  density->add_option("--delta", o.delta, "Measure lower bound for the k-maximization (default mu/2)");
  common(density);

  auto* adversary = app.add_subcommand("adversary", "Halting-table coding");
  adversary->require_subcommand(1);
  auto* encode = adversary->add_subcommand("encode", "Build the adversarial tree of a table");
  encode->add_option("--in", o.in, "Halting table file")->required();
  encode->add_option("--depth", o.depth, "Tree depth")->required();
  common(encode);
  auto* decode = adversary->add_subcommand("decode", "Recover a table prefix from a string in C");
  decode->add_option("--in", o.in, "Halting table file")->required();
  decode->add_option("--string", o.string, "Bit string")->required();
  decode->add_option("--entries", o.entries, "Number of entries to recover")->required();
  common(decode);

  auto* force = app.add_subcommand("force", "Forcing-condition steps");
  force->require_subcommand(1);
  auto* step = force->add_subcommand("step", "Split or certify a condition against a functional");
  step->add_option("--in", o.in, "Condition file")->required();
  auto* byId = step->add_option("--functional", o.functional, "Built-in functional id");
  auto* byFile = step->add_option("--functional-file", o.functionalFile, "Decision-table file");
  byId->excludes(byFile);
  step->add_option("--target", o.bits, "Target bits X(0..L-1)")->required();
  step->add_option("--lmax", o.lmax, "Norm bound of the searches");
  common(step);
  auto* extend = force->add_subcommand("extend", "Splitting extension of a condition");
  extend->add_option("--in", o.in, "Condition file")->required();
  common(extend);

  auto* tt1 = app.add_subcommand("tt1", "Find a monochromatic perfect embedding");
  auto* coloringFile = tt1->add_option("--in", o.in, "Coloring file");
  auto* coloringSpec = tt1->add_option(
      "--coloring", o.coloring, "Generated coloring: constant:C, length-mod:A or random:A:SEED");
  coloringFile->excludes(coloringSpec);
  tt1->add_option("--depth", o.depth, "Depth for a generated coloring");
  tt1->add_option("--k", o.k, "Height of the embedded 2^{<k}");
  common(tt1);

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("--in", o.in, "Certificate file")->required();
  verify->add_flag("--json", o.json, "Print the verdict as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  try {
    if (verify->parsed()) return runVerify(o, out);

    std::string command;
    Json inputs = Json::object();
    Json params = Json::object();
    if (gen->parsed()) {
      command = "gen";
      params["depth"] = o.depth;
      params["target"] = Dyadic::parse(o.target).str();
      params["seed"] = o.seed;
    } else if (prune->parsed() || extract->parsed()) {
      command = prune->parsed() ? "prune" : "extract";
      inputs["tree"] = readTreeFile(o.in);
      params["epsilon"] = Dyadic::parse(o.epsilon).str();
    } else if (density->parsed()) {
      command = "density";
      inputs["tree"] = readTreeFile(o.in);
      params["epsilon"] = Dyadic::parse(o.epsilon).str();
      params["delta"] = o.delta.empty() ? treeFromJson(inputs["tree"]).measure().scaled(-1).str()
                                        : Dyadic::parse(o.delta).str();
    } else if (encode->parsed()) {
      command = "adversary-encode";
      inputs["table"] = tableToJson(tableFromJson(readJsonFile(o.in)));
      params["depth"] = o.depth;
    } else if (decode->parsed()) {
      command = "adversary-decode";
      inputs["table"] = tableToJson(tableFromJson(readJsonFile(o.in)));
      params["string"] = BitString::parse(o.string).str();
      params["entries"] = o.entries;
    } else if (step->parsed()) {
      command = "force-step";
      inputs["condition"] = conditionToJson(conditionFromJson(readJsonFile(o.in)));
      if (!o.functionalFile.empty()) {
        inputs["functional"] = functionalFromJson(readJsonFile(o.functionalFile))->toJson();
      } else if (!o.functional.empty()) {
        inputs["functional"] = builtinFunctional(o.functional)->toJson();
      } else {
        throw Error(ErrorCode::InvalidArgument, "give --functional or --functional-file");
      }
      params["target"] = TargetSequence::parse(o.bits).str();
      params["lmax"] = o.lmax;
    } else if (extend->parsed()) {
      command = "force-extend";
      inputs["condition"] = conditionToJson(conditionFromJson(readJsonFile(o.in)));
    } else if (tt1->parsed()) {
      command = "tt1";
      if (!o.in.empty()) {
        inputs["coloring"] = coloringToJson(coloringFromJson(readJsonFile(o.in)));
      } else if (!o.coloring.empty()) {
        inputs["coloring"] = coloringToJson(generatedColoring(o.coloring, requireDepth(o)));
      } else {
        throw Error(ErrorCode::InvalidArgument, "give --in or --coloring");
      }
      params["k"] = o.k;
    }
    return emit(o, certify(command, inputs, params), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return isMalformed(e.code()) ? kExitMalformed : kExitFailure;
  }
}

}  // namespace cantor
