#include "cantor/certificate.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cantor/density.hpp"
#include "cantor/digest.hpp"
#include "cantor/error.hpp"
#include "cantor/extract.hpp"
#include "cantor/kucera.hpp"
#include "cantor/random.hpp"
#include "cantor/records.hpp"

namespace cantor {

namespace {

using Runner = std::function<Json(const Json& inputs, const Json& params)>;
using Checker = std::function<Json(const Json& inputs, const Json& params, const Json& result)>;

struct Command {
  Runner run;
  Checker check;
  std::vector<std::string> inputs;
  std::vector<std::string> parameters;
};

std::uint64_t unsignedField(const Json& object, std::string_view key) {
  const Json& value = field(object, key);
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::MalformedInput, "field '" + std::string(key) + "' is not a natural number");
  }
  return value.get<std::uint64_t>();
}

int smallField(const Json& object, std::string_view key) {
  const std::int64_t v = intField(object, key);
  if (v < -1'000'000 || v > 1'000'000) {
    throw Error(ErrorCode::MalformedInput, "field '" + std::string(key) + "' out of range");
  }
  return static_cast<int>(v);
}

Dyadic::Integer integerField(const Json& object, std::string_view key) {
  const std::string text = stringField(object, key);
  const bool digits = !text.empty() && std::all_of(text.begin() + (text[0] == '-' ? 1 : 0),
                                                   text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits || text == "-") {
    throw Error(ErrorCode::MalformedInput, "field '" + std::string(key) + "' is not an integer");
  }
  return Dyadic::Integer(text);
}

BitString stringValue(const Json& object, std::string_view key) {
  return BitString::parse(stringField(object, key));
}

/// True iff no string length-lex below `s` is dense enough.
bool leastDense(const ClopenTree& tree, const BitString& s, const Dyadic& bound) {
  for (std::uint64_t i = 0; i < heapIndex(s); ++i) {
    if (tree.denserThan(fromHeapIndex(i), bound)) return false;
  }
  return tree.denserThan(s, bound);
}

bool pairwiseIncomparable(const std::vector<BitString>& strings) {
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (strings[i].comparableWith(strings[j])) return false;
    }
  }
  return true;
}

// gen -----------------------------------------------------------------------

Json runGen(const Json&, const Json& params) {
  GenSpec spec;
  spec.depth = smallField(params, "depth");
  spec.target = dyadicField(params, "target");
  spec.seed = unsignedField(params, "seed");
  const ClopenTree tree = genRandomPositiveTree(spec);
  Json out;
  out["tree"] = treeToJson(tree);
  out["measure"] = tree.measure().str();
  return out;
}

Json checkGen(const Json&, const Json& params, const Json& result) {
  const ClopenTree tree = treeFromJson(field(result, "tree"));
  Json checks;
  checks["depth"] = tree.depth() == smallField(params, "depth");
  checks["measure"] = stringField(result, "measure") == tree.measure().str();
  checks["atLeastTarget"] = tree.measure() >= dyadicField(params, "target");
  return checks;
}

// prune ---------------------------------------------------------------------

Json reportToJson(const PruneReport& report) {
  Json out;
  out["epsilon"] = report.epsilon.str();
  out["inputMeasure"] = report.inputMeasure.str();
  out["outputMeasure"] = report.outputMeasure.str();
  out["pruned"] = stringsToJson(report.pruned);
  Json events = Json::array();
  for (const auto& event : report.events) events.push_back({event.node.str(), event.removed.str()});
  out["events"] = std::move(events);
  return out;
}

Json runPrune(const Json& inputs, const Json& params) {
  const ClopenTree tree = treeFromJson(field(inputs, "tree"));
  const Dyadic eps = dyadicField(params, "epsilon");
  Json out;
  try {
    const PruneResult result = prune(tree, eps);
    out["empty"] = false;
    out["tree"] = treeToJson(result.tree);
    out["report"] = reportToJson(result.report);
  } catch (const EmptyAfterPruning& e) {
    out["empty"] = true;
    out["report"] = reportToJson(e.report());
  }
  return out;
}

Json checkPrune(const Json& inputs, const Json& params, const Json& result) {
  const ClopenTree tree = treeFromJson(field(inputs, "tree"));
  const Dyadic eps = dyadicField(params, "epsilon");
  const Json& report = field(result, "report");
  const auto pruned = stringsFromJson(field(report, "pruned"));
  const Json& empty = field(result, "empty");
  if (!empty.is_boolean()) throw Error(ErrorCode::MalformedInput, "'empty' is not a boolean");

  Json checks;
  checks["inputMeasure"] = dyadicField(report, "inputMeasure") == tree.measure();
  checks["prunedIncomparable"] = pairwiseIncomparable(pruned);
  if (empty.get<bool>()) {
    checks["flaggedEmpty"] = dyadicField(report, "outputMeasure").isZero();
    return checks;
  }
  const ClopenTree out = treeFromJson(field(result, "tree"));
  checks["outputMeasure"] = dyadicField(report, "outputMeasure") == out.measure();
  checks["subset"] = out.isSubsetOf(tree);
  checks["massBound"] = out.measure() > tree.measure() - eps;
  checks["threshold"] = satisfiesThreshold(out, eps);
  checks["prunedRemoved"] = std::all_of(pruned.begin(), pruned.end(), [&](const BitString& s) {
    return tree.contains(s) && !out.contains(s);
  });
  return checks;
}

// extract -------------------------------------------------------------------

GrowthSchedule scheduleFromJson(const Json& result) {
  GrowthSchedule schedule;
  const Json& values = field(result, "schedule");
  if (!values.is_array()) throw Error(ErrorCode::MalformedInput, "schedule is not an array");
  for (const auto& v : values) {
    if (!v.is_number_integer()) throw Error(ErrorCode::MalformedInput, "schedule values are integers");
    schedule.values.push_back(v.get<int>());
  }
  const Json& truncated = field(result, "truncated");
  if (!truncated.is_boolean()) throw Error(ErrorCode::MalformedInput, "'truncated' is not a boolean");
  schedule.truncated = truncated.get<bool>();
  return schedule;
}

Json runExtract(const Json& inputs, const Json& params) {
  const ClopenTree tree = treeFromJson(field(inputs, "tree"));
  const Extraction x = extractPerfect(tree, dyadicField(params, "epsilon"));
  const ExtractionCertificate& c = x.certificate;
  Json out;
  out["inputMeasure"] = c.inputMeasure.str();
  out["pruned"] = treeToJson(x.pruned);
  out["prunedMeasure"] = c.prunedMeasure.str();
  out["delta"] = c.params.delta.str();
  out["schedule"] = c.params.schedule.values;
  out["truncated"] = c.params.schedule.truncated;
  out["index"] = c.index;
  out["selectionRule"] = c.selectionRule;
  out["tree"] = finiteTreeToJson(c.tree);
  out["levelCounts"] = c.levelCounts;
  out["finalLevelMeasure"] = finalLevelTree(c.tree).measure().str();
  return out;
}

Json checkExtract(const Json& inputs, const Json& params, const Json& result) {
  const ClopenTree tree = treeFromJson(field(inputs, "tree"));
  const Dyadic eps = dyadicField(params, "epsilon");
  const ClopenTree pruned = treeFromJson(field(result, "pruned"));
  const Dyadic delta = dyadicField(result, "delta");
  const GrowthSchedule schedule = scheduleFromJson(result);
  const FiniteTree u = finiteTreeFromJson(field(result, "tree"));
  const Dyadic finalMass = finalLevelTree(u).measure();

  Json counts = Json::array();
  for (int n = 0; n < u.norm(); ++n) counts.push_back(u.levelCount(n));

  const FamilyCheck family = checkFamily(u, pruned, delta, schedule);
  Json checks;
  checks["prunedSubset"] = pruned.isSubsetOf(tree);
  checks["prunedThreshold"] = satisfiesThreshold(pruned, eps.scaled(-1));
  checks["deltaRange"] = pruned.measure() - eps.scaled(-1) < delta && delta < pruned.measure();
  checks["subset"] = family.subset;
  checks["density"] = family.density;
  checks["splitting"] = family.splitting;
  checks["levelCounts"] = counts == field(result, "levelCounts");
  checks["finalLevelMass"] = !u.empty() && finalMass >= delta &&
                             dyadicField(result, "finalLevelMeasure") == finalMass;
  checks["measureGuarantee"] = finalMass > tree.measure() - eps;
  return checks;
}

// density -------------------------------------------------------------------

Json runDensity(const Json& inputs, const Json& params) {
  const ClopenTree tree = treeFromJson(field(inputs, "tree"));
  const Dyadic eps = dyadicField(params, "epsilon");
  const Dyadic delta = dyadicField(params, "delta");
  const BitString greedy = densityWitnessGreedy(tree, eps);
  const MaximizationTrace trace = densityWitnessMaximizationTrace(tree, eps, delta);
  Json out;
  out["greedy"] = greedy.str();
  Json m;
  m["n"] = trace.n;
  m["k"] = trace.k.str();
  m["level"] = trace.level;
  m["levelsScanned"] = trace.levelsScanned;
  m["witness"] = trace.witness.str();
  out["maximization"] = std::move(m);
  return out;
}

Json checkDensity(const Json& inputs, const Json& params, const Json& result) {
  const ClopenTree tree = treeFromJson(field(inputs, "tree"));
  const Dyadic eps = dyadicField(params, "epsilon");
  const Dyadic delta = dyadicField(params, "delta");
  const Dyadic bound = Dyadic(1) - eps;
  const BitString greedy = stringValue(result, "greedy");
  const Json& m = field(result, "maximization");
  const BitString witness = stringValue(m, "witness");
  const int n = smallField(m, "n");
  const int level = smallField(m, "level");

  bool kMaximal = n >= 0 && level >= 0 && level <= tree.depth();
  if (kMaximal) {
    const Dyadic::Integer k = integerField(m, "k");
    kMaximal = complementMultiple(tree, level, n) == k;
    for (int l = 0; l <= tree.depth() && kMaximal; ++l) {
      kMaximal = complementMultiple(tree, l, n) <= k;
    }
  }
  Json checks;
  checks["greedyValid"] = tree.denserThan(greedy, bound);
  checks["greedyMinimal"] = leastDense(tree, greedy, bound);
  checks["nLeast"] = n >= 0 && Dyadic::pow2(-n) < eps * delta &&
                     (n == 0 || !(Dyadic::pow2(1 - n) < eps * delta));
  checks["kMaximal"] = kMaximal;
  checks["witnessAtLevel"] = witness.length() == level;
  checks["maximizationValid"] = tree.denserThan(witness, bound);
  return checks;
}

// adversary -----------------------------------------------------------------

Json runAdversaryEncode(const Json& inputs, const Json& params) {
  const HaltingTable table = tableFromJson(field(inputs, "table"));
  const ClopenTree tree = adversarialTree(table, smallField(params, "depth"));
  Json out;
  out["tree"] = treeToJson(tree);
  out["leafCount"] = tree.leafCount();
  out["measure"] = tree.measure().str();
  return out;
}

Json checkAdversaryEncode(const Json& inputs, const Json& params, const Json& result) {
  const HaltingTable table = tableFromJson(field(inputs, "table"));
  const ClopenTree tree = treeFromJson(field(result, "tree"));
  const int depth = smallField(params, "depth");
  bool exact = tree.depth() == depth;
  for (std::uint64_t i = 0; exact && i < (std::uint64_t{1} << depth); ++i) {
    exact = tree.hasLeaf(i) == inC(table, BitString(i, depth));
  }
  Json checks;
  checks["leavesAreC"] = exact;
  checks["leafCount"] = unsignedField(result, "leafCount") == tree.leafCount();
  checks["measure"] = stringField(result, "measure") == tree.measure().str();
  return checks;
}

Json runAdversaryDecode(const Json& inputs, const Json& params) {
  const HaltingTable table = tableFromJson(field(inputs, "table"));
  const HaltingTable decoded =
      decodeHalting(stringValue(params, "string"), smallField(params, "entries"), table);
  Json out;
  out["decoded"] = tableToJson(decoded);
  return out;
}

Json checkAdversaryDecode(const Json& inputs, const Json& params, const Json& result) {
  const HaltingTable table = tableFromJson(field(inputs, "table"));
  const BitString s = stringValue(params, "string");
  const int entries = smallField(params, "entries");
  const HaltingTable decoded = tableFromJson(field(result, "decoded"));
  Json checks;
  checks["inC"] = inC(table, s);
  checks["enoughOnes"] = s.ones() > entries;
  checks["matchesTable"] =
      entries >= 0 && entries <= table.size() && decoded == table.restricted(entries);
  return checks;
}

// forcing -------------------------------------------------------------------

Json runForceStep(const Json& inputs, const Json& params) {
  const Condition c = conditionFromJson(field(inputs, "condition"));
  const FunctionalPtr phi = functionalFromJson(field(inputs, "functional"));
  const TargetSequence target = TargetSequence::parse(stringField(params, "target"));
  const StepResult step = forcingStep(c, *phi, target, smallField(params, "lmax"));
  Json out;
  if (const auto* split = std::get_if<SplitStep>(&step)) {
    out["branch"] = "split";
    out["extension"] = finiteTreeToJson(split->extension);
    out["input"] = split->input;
  } else if (const auto* constant = std::get_if<ConstantStep>(&step)) {
    out["branch"] = "constant";
    out["reservoir"] = treeToJson(constant->reservoir);
    out["proofDepth"] = constant->proofDepth;
    out["extension"] = finiteTreeToJson(constant->extension);
  } else {
    const auto& witness = std::get<UndecidedStep>(step).witness;
    out["branch"] = "undecided";
    out["first"] = finiteTreeToJson(witness.first);
    out["second"] = finiteTreeToJson(witness.second);
    out["input"] = witness.input;
  }
  return out;
}

Json checkForceStep(const Json& inputs, const Json& params, const Json& result) {
  const Condition c = conditionFromJson(field(inputs, "condition"));
  const FunctionalPtr phi = functionalFromJson(field(inputs, "functional"));
  const TargetSequence target = TargetSequence::parse(stringField(params, "target"));
  const int lmax = smallField(params, "lmax");
  const std::string branch = stringField(result, "branch");
  const ClopenTree s = c.reservoir.intersect(c.ambient);

  Json checks;
  checks["condition"] = isCondition(c);
  if (branch == "split") {
    const FiniteTree e = finiteTreeFromJson(field(result, "extension"));
    const auto n = unsignedField(result, "input");
    const auto value = n < target.size() ? phi->evaluate(e, static_cast<std::uint32_t>(n))
                                         : std::optional<bool>();
    checks["extensionIsCondition"] = isCondition(e, c.reservoir, c.ambient);
    checks["endExtends"] = isEndExtension(e, c.stem);
    checks["diverges"] = value.has_value() && *value != target[n];
  } else if (branch == "constant") {
    const ClopenTree reservoir = treeFromJson(field(result, "reservoir"));
    const FiniteTree e = finiteTreeFromJson(field(result, "extension"));
    checks["noSplit"] = !eSplitSearch(c, *phi, target, lmax).has_value();
    checks["reservoir"] = reservoir == s;
    checks["proofDepth"] = smallField(result, "proofDepth") == lmax;
    checks["uClass"] = uClassCheck(reservoir, c.stem, *phi, lmax);
    checks["extensionIsCondition"] =
        isCondition(e, reservoir, c.ambient) && isEndExtension(e, c.stem);
  } else if (branch == "undecided") {
    const FiniteTree first = finiteTreeFromJson(field(result, "first"));
    const FiniteTree second = finiteTreeFromJson(field(result, "second"));
    const auto x = static_cast<std::uint32_t>(unsignedField(result, "input"));
    const auto inside = [&](const FiniteTree& e) {
      return isEndExtension(e, c.stem) && e.norm() <= lmax &&
             std::all_of(e.nodes().begin(), e.nodes().end(),
                         [&](const BitString& node) { return s.contains(node); });
    };
    checks["noSplit"] = !eSplitSearch(c, *phi, target, lmax).has_value();
    checks["disagree"] = inside(first) && inside(second) &&
                         phi->evaluate(first, x) == std::optional<bool>(false) &&
                         phi->evaluate(second, x) == std::optional<bool>(true);
  } else {
    throw Error(ErrorCode::MalformedInput, "unknown branch '" + branch + "'");
  }
  return checks;
}

Json runForceExtend(const Json& inputs, const Json&) {
  const Condition c = conditionFromJson(field(inputs, "condition"));
  Json out;
  out["condition"] = conditionToJson(splittingExtend(c));
  return out;
}

Json checkForceExtend(const Json& inputs, const Json&, const Json& result) {
  const Condition c = conditionFromJson(field(inputs, "condition"));
  const Condition next = conditionFromJson(field(result, "condition"));
  const auto before = c.stem.fullBinaryHeight();
  const auto after = next.stem.fullBinaryHeight();
  Json checks;
  checks["condition"] = isCondition(c);
  checks["extensionIsCondition"] = isCondition(next);
  checks["shape"] = before && after && *after == *before + 1;
  checks["endExtends"] = isEndExtension(next.stem, c.stem);
  checks["reservoirUnchanged"] = next.reservoir == c.reservoir && next.ambient == c.ambient;
  return checks;
}

// tt1 -----------------------------------------------------------------------

Json runTt1(const Json& inputs, const Json& params) {
  const Coloring coloring = coloringFromJson(field(inputs, "coloring"));
  const HomogeneousTree h = tt1Homog(coloring, smallField(params, "k"));
  Json out;
  out["color"] = h.color;
  out["strategy"] = h.strategy == SearchStrategy::Greedy ? "greedy" : "exhaustive";
  out["embedding"] = embeddingToJson(h.embedding);
  return out;
}

Json checkTt1(const Json& inputs, const Json& params, const Json& result) {
  const Coloring coloring = coloringFromJson(field(inputs, "coloring"));
  const PerfectEmbedding e = embeddingFromJson(field(result, "embedding"));
  const int color = smallField(result, "color");
  const bool fits = std::all_of(e.images().begin(), e.images().end(), [&](const BitString& s) {
    return s.length() <= coloring.depth();
  });
  Json checks;
  checks["height"] = e.height() == smallField(params, "k");
  checks["perfect"] = isPerfectEmbedding(e);
  checks["monochromatic"] =
      fits && std::all_of(e.images().begin(), e.images().end(),
                          [&](const BitString& s) { return coloring(s) == color; });
  return checks;
}

const std::map<std::string, Command, std::less<>>& registry() {
  static const std::map<std::string, Command, std::less<>> commands{
      {"gen", {runGen, checkGen, {}, {"depth", "target", "seed"}}},
      {"prune", {runPrune, checkPrune, {"tree"}, {"epsilon"}}},
      {"extract", {runExtract, checkExtract, {"tree"}, {"epsilon"}}},
      {"density", {runDensity, checkDensity, {"tree"}, {"epsilon", "delta"}}},
      {"adversary-encode", {runAdversaryEncode, checkAdversaryEncode, {"table"}, {"depth"}}},
      {"adversary-decode",
       {runAdversaryDecode, checkAdversaryDecode, {"table"}, {"string", "entries"}}},
      {"force-step", {runForceStep, checkForceStep, {"condition", "functional"}, {"target", "lmax"}}},
      {"force-extend", {runForceExtend, checkForceExtend, {"condition"}, {}}},
      {"tt1", {runTt1, checkTt1, {"coloring"}, {"k"}}},
  };
  return commands;
}

const Command& lookup(std::string_view name, ErrorCode code) {
  const auto& commands = registry();
  const auto it = commands.find(name);
  if (it == commands.end()) throw Error(code, "unknown command '" + std::string(name) + "'");
  return it->second;
}

/// Empty when the object's keys are exactly `expected`, else a description.
std::string keyMismatch(const Json& object, const std::vector<std::string>& expected,
                        std::string_view what) {
  for (const auto& key : expected) {
    if (!object.contains(key)) return std::string(what) + " lack '" + key + "'";
  }
  for (const auto& [key, value] : object.items()) {
    if (std::find(expected.begin(), expected.end(), key) == expected.end()) {
      return std::string("unexpected ") + std::string(what) + " entry '" + key + "'";
    }
  }
  return {};
}

Json digestsOf(const Json& inputs) {
  Json out = Json::object();
  for (const auto& [name, value] : inputs.items()) out[name] = sha256Hex(value.dump());
  return out;
}

}  // namespace

std::vector<std::string> certificateCommands() {
  std::vector<std::string> out;
  for (const auto& entry : registry()) out.push_back(entry.first);
  return out;
}

Json certify(std::string_view command, const Json& inputs, const Json& parameters) {
  const Command& cmd = lookup(command, ErrorCode::InvalidArgument);
  if (!inputs.is_object() || !parameters.is_object()) {
    throw Error(ErrorCode::MalformedInput, "inputs and parameters must be objects");
  }
  for (const auto& problem : {keyMismatch(inputs, cmd.inputs, "inputs"),
                              keyMismatch(parameters, cmd.parameters, "parameters")}) {
    if (!problem.empty()) throw Error(ErrorCode::MalformedInput, problem);
  }
  Json result = cmd.run(inputs, parameters);
  Json checks = cmd.check(inputs, parameters, result);
  Json out;
  out["version"] = kCertificateVersion;
  out["command"] = command;
  out["inputs"] = inputs;
  out["inputDigests"] = digestsOf(inputs);
  out["parameters"] = parameters;
  out["result"] = std::move(result);
  out["checks"] = std::move(checks);
  return out;
}

Verification verifyCertificate(const Json& certificate) {
  if (!certificate.is_object() || !certificate.contains("version") ||
      !certificate["version"].is_string()) {
    throw Error(ErrorCode::MalformedCertificate, "certificate has no version tag");
  }
  const std::string version = certificate["version"].get<std::string>();
  if (version != kCertificateVersion) {
    throw Error(ErrorCode::UnknownVersion, "unsupported certificate version '" + version + "'");
  }
  for (const char* key : {"command", "inputs", "inputDigests", "parameters", "result", "checks"}) {
    if (!certificate.contains(key)) {
      throw Error(ErrorCode::MalformedCertificate, std::string("certificate lacks '") + key + "'");
    }
  }
  const Json& command = certificate["command"];
  const Json& inputs = certificate["inputs"];
  const Json& parameters = certificate["parameters"];
  const Json& result = certificate["result"];
  const Json& checks = certificate["checks"];
  if (!command.is_string() || !inputs.is_object() || !parameters.is_object() ||
      !checks.is_object()) {
    throw Error(ErrorCode::MalformedCertificate, "certificate fields have the wrong types");
  }
  const Command& cmd = lookup(command.get<std::string>(), ErrorCode::MalformedCertificate);

  Verification out;
  for (auto problem : {keyMismatch(inputs, cmd.inputs, "inputs"),
                       keyMismatch(parameters, cmd.parameters, "parameters")}) {
    if (!problem.empty()) out.problems.push_back(std::move(problem));
  }
  if (digestsOf(inputs) != certificate["inputDigests"]) {
    out.problems.push_back("input digests do not match the embedded inputs");
  }

  try {
    const Json recomputed = cmd.check(inputs, parameters, result);
    for (const auto& [name, value] : recomputed.items()) {
      if (!checks.contains(name) || checks[name] != value) {
        out.problems.push_back("check '" + name + "' recomputes to " + value.dump());
      } else if (!value.get<bool>()) {
        out.problems.push_back("check '" + name + "' fails");
      }
    }
    for (const auto& [name, value] : checks.items()) {
      if (!recomputed.contains(name)) out.problems.push_back("unexpected check '" + name + "'");
    }
  } catch (const Error& e) {
    out.problems.push_back(std::string("payload does not re-check: ") + e.what());
  }

  try {
    if (cmd.run(inputs, parameters) != result) {
      out.problems.push_back("result differs from a fresh run");
    }
  } catch (const Error& e) {
    out.problems.push_back(std::string("fresh run fails: ") + e.what());
  }

  out.ok = out.problems.empty();
  return out;
}

std::string serializeCertificate(const Json& certificate) { return certificate.dump(2) + "\n"; }

}  // namespace cantor
