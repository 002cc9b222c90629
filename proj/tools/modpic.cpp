// modpic: relative Picard groups of curves with modulus, classes of
// 0-cycles, the comparison map to the reduced modulus, and seeded
// verification suites. See README.md for the pair file format.

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "modpic/cache.hpp"
#include "modpic/errors.hpp"
#include "modpic/report.hpp"
#include "modpic/verify.hpp"
#include "modpic/version.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitBounds = 3;
constexpr int kExitSupport = 4;

int run_group(const std::string& input, bool json_out, bool no_cache) {
  modpic::PairDescription pair = modpic::parse_pair_file(input);
  modpic::Cache cache(modpic::Cache::default_dir());
  std::string key = std::string("group|") + modpic::kVersion + "|" + pair.canonical_json();
  if (!no_cache) {
    if (auto hit = cache.get(key)) {
      nlohmann::json j = nlohmann::json::parse(*hit);
      std::cout << (json_out ? j["json"].get<std::string>() : j["text"].get<std::string>());
      return 0;
    }
  }
  modpic::StructureReport rep = modpic::StructureReport::compute(pair);
  std::string as_json = rep.to_json();
  std::string as_text = rep.to_text();
  if (!no_cache) {
    nlohmann::ordered_json value;
    value["json"] = as_json;
    value["text"] = as_text;
    cache.put(key, value.dump());
  }
  std::cout << (json_out ? as_json : as_text);
  return 0;
}

int run_class(const std::string& input, const std::string& cycle, bool json_out) {
  modpic::PairDescription pair = modpic::parse_pair_file(input);
  modpic::ZeroCycle z = modpic::parse_cycle_expression(cycle, pair.curve);
  modpic::ClassReport rep = modpic::ClassReport::compute(pair, z);
  std::cout << (json_out ? rep.to_json() : rep.to_text());
  return 0;
}

int run_pi(const std::string& input, bool json_out) {
  modpic::PairDescription pair = modpic::parse_pair_file(input);
  modpic::StructureReport rep = modpic::StructureReport::compute(pair);
  if (json_out) {
    std::cout << rep.to_json();
    return 0;
  }
  std::cout << rep.to_text();
  if (rep.structure->char_p()) {
    modpic::Int kernel = rep.structure->pic0_order() / rep.reduced->pic0_order();
    std::cout << "pi: Pic(C,D) -> Pic(C,D_red), kernel order " << kernel
              << (kernel == rep.unipotent.order ? " = |U|" : " (MISMATCH with |U|)") << "\n";
  } else {
    std::cout << "pi kills the unipotent coordinates (dimension "
              << rep.structure->unipotent_dimension() << ")\n";
  }
  return 0;
}

int run_places(const std::string& input, unsigned max_degree, bool json_out) {
  modpic::PairDescription pair = modpic::parse_pair_file(input);
  std::vector<modpic::Place> places;
  bool lazy = false;
  if (pair.curve.kind() == modpic::CurveKind::P1) {
    modpic::PlaceEnumeration e = modpic::places_of_p1(pair.curve, max_degree);
    places = e.places;
    lazy = e.lazy_rational_family;
  } else {
    places = modpic::elliptic_places(pair.curve);
  }
  if (json_out) {
    nlohmann::ordered_json j;
    j["version"] = modpic::kVersion;
    j["curve"] = pair.curve.str();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : places)
      arr.push_back({{"place", p.str()}, {"degree", p.degree()}});
    j["places"] = arr;
    if (lazy) j["rational_family"] = "t - a for every a in Q";
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& p : places)
    std::cout << p.str() << "  (degree " << p.degree() << ")\n";
  if (lazy) std::cout << "t - a  (degree 1, for every a in Q)\n";
  return 0;
}

int run_verify(const std::string& suite, unsigned trials, std::uint64_t seed, bool json_out,
               const std::string& replay) {
  modpic::VerifyReport rep;
  if (!replay.empty()) {
    std::ifstream in(replay);
    if (!in) throw modpic::ParseError("cannot open replay payload: " + replay);
    std::stringstream ss;
    ss << in.rdbuf();
    rep = modpic::replay_payload(ss.str());
  } else {
    auto s = modpic::suite_from_name(suite);
    if (!s) throw modpic::ParseError("unknown suite: " + suite);
    rep = modpic::run_suite(*s, trials, seed);
  }
  std::cout << (json_out ? rep.to_json() : rep.to_text());
  std::cerr << "duration: " << rep.duration_ms << " ms\n";
  return rep.all_pass ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative Picard groups of curves with modulus"};
  app.set_version_flag("--version", modpic::kVersion);
  app.require_subcommand(1);

  std::string input, cycle, suite, replay;
  bool json_out = false, no_cache = false;
  unsigned trials = 100, max_degree = 2;
  std::uint64_t seed = 1;

  CLI::App* group = app.add_subcommand("group", "structure of Pic(C,D)");
  group->add_option("--input", input, "pair description file")->required();
  group->add_flag("--json", json_out, "machine-readable output");
  group->add_flag("--no-cache", no_cache, "bypass the result cache");

  CLI::App* cls = app.add_subcommand("class", "class of a 0-cycle");
  cls->add_option("--input", input)->required();
  cls->add_option("--cycle", cycle, "cycle expression, e.g. \"[t-1] - [t-2]\"")->required();
  cls->add_flag("--json", json_out);

  CLI::App* pi = app.add_subcommand("pi", "comparison with the reduced modulus");
  pi->add_option("--input", input)->required();
  pi->add_flag("--json", json_out);

  CLI::App* places = app.add_subcommand("places", "list places of the curve");
  places->add_option("--input", input)->required();
  places->add_option("--max-degree", max_degree, "P1: largest place degree");
  places->add_flag("--json", json_out);

  CLI::App* verify = app.add_subcommand("verify", "seeded randomized theorem suites");
  verify->add_option("--suite", suite, "one of: p-primary char0-divisible key-lem key-lem-p "
                                       "norm-compat torsion-iso lang-orders");
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--replay", replay, "failure payload file to re-run");
  verify->add_flag("--json", json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (group->parsed()) return run_group(input, json_out, no_cache);
    if (cls->parsed()) return run_class(input, cycle, json_out);
    if (pi->parsed()) return run_pi(input, json_out);
    if (places->parsed()) return run_places(input, max_degree, json_out);
    if (verify->parsed()) {
      if (replay.empty() && suite.empty())
        throw modpic::ParseError("verify wants --suite or --replay");
      return run_verify(suite, trials, seed, json_out, replay);
    }
  } catch (const modpic::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const modpic::BoundsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBounds;
  } catch (const modpic::SupportError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSupport;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
