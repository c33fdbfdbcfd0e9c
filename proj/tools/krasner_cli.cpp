#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "krasner/constructions.hpp"
#include "krasner/ideals.hpp"
#include "krasner/io.hpp"
#include "krasner/search.hpp"
#include "krasner/structure.hpp"

namespace {

using krasner::Carrier;
using krasner::ElemSet;
using krasner::EqMode;
using krasner::Grade;
using krasner::KrasnerStructure;
using OrderedJson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw krasner::UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw krasner::UsageError("cannot write '" + path + "'");
  out << text;
}

KrasnerStructure load_structure(const std::string& path) {
  return krasner::parse_structure(read_file(path));
}

ElemSet parse_element_set(const KrasnerStructure& R, const std::string& csv) {
  ElemSet out;
  std::stringstream stream(csv);
  std::string label;
  while (std::getline(stream, label, ',')) {
    const auto idx = R.carrier->index_of(label);
    if (!idx) throw krasner::UsageError("unknown carrier label '" + label + "'");
    out.add(*idx);
  }
  if (out.empty()) throw krasner::UsageError("element set must name at least one label");
  return out;
}

OrderedJson set_json(const Carrier& carrier, const ElemSet& s) {
  OrderedJson out = OrderedJson::array();
  s.for_each([&](krasner::Elem a) { out.push_back(carrier.label(a)); });
  return out;
}

OrderedJson fuzzy_json(const Carrier& carrier, const krasner::FuzzySubset& mu) {
  OrderedJson out = OrderedJson::array();
  for (krasner::Elem a = 0; a < carrier.size(); ++a) {
    if (!mu.grade(a).is_zero()) {
      out.push_back(OrderedJson::array({carrier.label(a), mu.grade(a).str()}));
    }
  }
  return out;
}

OrderedJson witness_json(const KrasnerStructure& R, const krasner::AxiomWitness& w) {
  OrderedJson out;
  OrderedJson tuple = OrderedJson::array();
  for (const krasner::Elem a : w.tuple) tuple.push_back(R.carrier->label(a));
  out["tuple"] = std::move(tuple);
  if (w.position >= 0) out["position"] = w.position;
  if (w.position2 >= 0) out["compared_position"] = w.position2;
  if (w.lhs) out["lhs"] = fuzzy_json(*R.carrier, *w.lhs);
  if (w.rhs) out["rhs"] = fuzzy_json(*R.carrier, *w.rhs);
  out["note"] = w.note;
  return out;
}

OrderedJson report_json(const KrasnerStructure& R, const krasner::AxiomReport& report) {
  OrderedJson out;
  out["mode"] = std::string(to_string(report.mode));
  OrderedJson axioms;
  for (int i = 0; i < krasner::kAxiomCount; ++i) {
    const auto axiom = static_cast<krasner::Axiom>(i);
    const auto& verdict = report[axiom];
    OrderedJson v;
    if (!verdict.applicable) {
      v["verdict"] = "not-applicable";
    } else {
      v["verdict"] = verdict.pass ? "pass" : "fail";
      if (verdict.witness) v["witness"] = witness_json(R, *verdict.witness);
    }
    axioms[std::string(to_string(axiom))] = std::move(v);
  }
  out["axioms"] = std::move(axioms);
  out["all_pass"] = report.all_pass();
  return out;
}

struct Outcome {
  OrderedJson report;
  bool ok = true;
};

// Renders the canonical report for humans; verdicts are byte-for-byte the
// same JSON the --json path writes.
void emit(const Outcome& outcome, const std::string& json_path, double elapsed_ms) {
  const std::string text = outcome.report.dump(2) + "\n";
  if (json_path == "-") {
    std::cout << text;
  } else {
    if (!json_path.empty()) write_file(json_path, text);
    std::cout << text;
    std::cout << "# elapsed_ms " << elapsed_ms << "\n";
  }
}

krasner::IdealLattice classified_lattice(const KrasnerStructure& R, int max_carrier,
                                         bool require_proper) {
  krasner::IdealEnumOptions options;
  options.max_carrier = max_carrier;
  krasner::IdealLattice lattice = krasner::enumerate_ideals(R, options);
  krasner::classify_lattice(lattice, require_proper);
  return lattice;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification and exploration kernel for finite Krasner F^(m,n)-hyperrings"};
  app.require_subcommand(1);

  std::string json_path;
  app.add_option("--json", json_path, "write the machine-readable report to a file ('-' = stdout)");

  std::string file, file2, out_path, ideal_csv, map_spec, mode_name, method = "both";
  std::string predicate, grades_csv = "1", policy_name = "singleton-only";
  std::vector<std::string> witness_files;
  std::uint64_t tuple_budget = krasner::kDefaultTupleBudget;
  std::uint64_t search_limit = 1'000'000;
  int max_carrier = 16;
  int zmod = 0, arity_m = 2, arity_n = 2, carrier_size = 0;
  std::string t1 = "1", t2 = "1";
  bool literal_definitions = false;

  auto* validate = app.add_subcommand("validate", "check every axiom of a structure document");
  validate->add_option("file", file)->required();
  validate->add_option("--mode", mode_name, "override the document's equality mode");
  validate->add_option("--budget", tuple_budget, "tuple-evaluation budget");

  auto* ideals = app.add_subcommand("ideals", "enumerate all F-hyperideals");
  ideals->add_option("file", file)->required();
  ideals->add_option("--budget", tuple_budget);
  ideals->add_option("--max-carrier", max_carrier, "ideal-enumeration carrier budget");

  auto* classify = app.add_subcommand("classify", "per-ideal prime/maximal/primary/radical table");
  classify->add_option("file", file)->required();
  classify->add_option("--budget", tuple_budget);
  classify->add_option("--max-carrier", max_carrier);
  classify->add_flag("--literal-definitions", literal_definitions,
                     "use the unrestricted reading (the whole carrier may be prime/primary)");

  auto* radical = app.add_subcommand("radical", "F-radical of an ideal");
  radical->add_option("file", file)->required();
  radical->add_option("--ideal", ideal_csv, "comma-separated member labels")->required();
  radical->add_option("--method", method, "powers|primes|both");
  radical->add_option("--max-carrier", max_carrier);

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient structure by an ideal");
  quotient_cmd->add_option("file", file)->required();
  quotient_cmd->add_option("--ideal", ideal_csv)->required();
  quotient_cmd->add_option("-o,--output", out_path, "write the quotient structure document");

  auto* product_cmd = app.add_subcommand("product", "product of two structures");
  product_cmd->add_option("file", file)->required();
  product_cmd->add_option("file2", file2)->required();
  product_cmd->add_option("-o,--output", out_path);

  auto* hom = app.add_subcommand("hom-check", "check a map for the homomorphism conditions");
  hom->add_option("file", file, "source structure")->required();
  hom->add_option("file2", file2, "target structure")->required();
  hom->add_option("--map", map_spec, "comma-separated src=dst label pairs")->required();

  auto* lift = app.add_subcommand("lift", "ring lift of Z_k as a structure document");
  lift->add_option("--zmod", zmod, "modulus k")->required();
  lift->add_option("--m", arity_m);
  lift->add_option("--n", arity_n);
  lift->add_option("--t1", t1, "f threshold as p/q");
  lift->add_option("--t2", t2, "g threshold as p/q");
  lift->add_option("-o,--output", out_path, "write the document here instead of stdout");

  auto* search = app.add_subcommand("search", "exhaustively enumerate a structure space");
  search->add_option("--carrier-size", carrier_size)->required();
  search->add_option("--m", arity_m);
  search->add_option("--n", arity_n);
  search->add_option("--grades", grades_csv, "comma-separated grade grid");
  search->add_option("--support-policy", policy_name, "singleton-only|any-nonempty");
  search->add_option("--limit", search_limit, "candidate budget");

  auto* witness = app.add_subcommand("witness", "hunt for a structure/ideal pair with a property");
  witness->add_option("--predicate", predicate)->required();
  witness->add_option("files", witness_files, "structure documents to search in order");
  witness->add_option("--carrier-size", carrier_size, "enumerate a space instead of files");
  witness->add_option("--m", arity_m);
  witness->add_option("--n", arity_n);
  witness->add_option("--grades", grades_csv);
  witness->add_option("--support-policy", policy_name);
  witness->add_option("--limit", search_limit);

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (validate->parsed()) {
      const KrasnerStructure R = load_structure(file);
      std::optional<EqMode> mode;
      if (!mode_name.empty()) mode = krasner::eq_mode_from_string(mode_name);
      const auto report = krasner::validate_structure(R, mode, tuple_budget);
      outcome.report["command"] = "validate";
      outcome.report["digest"] = krasner::structure_digest(R);
      outcome.report["report"] = report_json(R, report);
      outcome.ok = report.all_pass();
    } else if (ideals->parsed()) {
      const KrasnerStructure R = load_structure(file);
      const auto axioms = krasner::validate_structure(R, std::nullopt, tuple_budget);
      outcome.report["command"] = "ideals";
      outcome.report["digest"] = krasner::structure_digest(R);
      if (!axioms.all_pass()) {
        outcome.report["error"] = "structure fails validation; ideal enumeration skipped";
        outcome.report["report"] = report_json(R, axioms);
        outcome.ok = false;
      } else {
        krasner::IdealEnumOptions options;
        options.max_carrier = max_carrier;
        const auto lattice = krasner::enumerate_ideals(R, options);
        OrderedJson list = OrderedJson::array();
        for (const auto& ideal : lattice.ideals) list.push_back(set_json(*R.carrier, ideal));
        outcome.report["count"] = lattice.ideals.size();
        outcome.report["sweep_certified"] = lattice.sweep_certified;
        outcome.report["ideals"] = std::move(list);
      }
    } else if (classify->parsed()) {
      const KrasnerStructure R = load_structure(file);
      const auto axioms = krasner::validate_structure(R, std::nullopt, tuple_budget);
      outcome.report["command"] = "classify";
      outcome.report["digest"] = krasner::structure_digest(R);
      outcome.report["require_proper"] = !literal_definitions;
      if (!axioms.all_pass()) {
        outcome.report["error"] = "structure fails validation; classification skipped";
        outcome.report["report"] = report_json(R, axioms);
        outcome.ok = false;
      } else {
        auto lattice = classified_lattice(R, max_carrier, !literal_definitions);
        OrderedJson rows = OrderedJson::array();
        bool assertions_ok = true;
        for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
          const auto& ideal = lattice.ideals[i];
          const auto& flags = lattice.flags[i];
          OrderedJson row;
          row["ideal"] = set_json(*R.carrier, ideal);
          row["prime"] = *flags.prime;
          row["maximal"] = *flags.maximal;
          if (flags.primary) row["primary"] = *flags.primary;
          row["radical"] = set_json(*R.carrier, *flags.radical);
          if (R.scalar_identity) {
            const auto powers = krasner::f_radical_powers(R, ideal);
            row["radical_methods_agree"] = powers == *flags.radical;
            if (!(powers == *flags.radical)) assertions_ok = false;
            if (flags.primary && *flags.prime && !*flags.primary) assertions_ok = false;
          }
          rows.push_back(std::move(row));
        }
        outcome.report["ideals"] = std::move(rows);
        outcome.report["assertions_hold"] = assertions_ok;
        outcome.ok = assertions_ok;
      }
    } else if (radical->parsed()) {
      const KrasnerStructure R = load_structure(file);
      const ElemSet ideal = parse_element_set(R, ideal_csv);
      outcome.report["command"] = "radical";
      outcome.report["digest"] = krasner::structure_digest(R);
      outcome.report["ideal"] = set_json(*R.carrier, ideal);
      if (method == "powers" || method == "both") {
        outcome.report["powers"] = set_json(*R.carrier, krasner::f_radical_powers(R, ideal));
      }
      if (method == "primes" || method == "both") {
        krasner::IdealEnumOptions options;
        options.max_carrier = max_carrier;
        const auto lattice = krasner::enumerate_ideals(R, options);
        outcome.report["primes"] = set_json(*R.carrier, krasner::f_radical_primes(lattice, ideal));
      }
      if (method == "both") {
        const bool agree = outcome.report["powers"] == outcome.report["primes"];
        outcome.report["agreement"] = agree;
        outcome.ok = agree;
      } else if (method != "powers" && method != "primes") {
        throw krasner::UsageError("unknown radical method '" + method + "'");
      }
    } else if (quotient_cmd->parsed()) {
      const KrasnerStructure R = load_structure(file);
      const ElemSet ideal = parse_element_set(R, ideal_csv);
      const auto q = krasner::quotient(R, ideal);
      outcome.report["command"] = "quotient";
      outcome.report["digest"] = krasner::structure_digest(R);
      outcome.report["ideal"] = set_json(*R.carrier, ideal);
      OrderedJson cosets = OrderedJson::array();
      for (const auto& coset : q.cosets) cosets.push_back(set_json(*R.carrier, coset));
      outcome.report["cosets"] = std::move(cosets);
      outcome.report["quotient_digest"] = krasner::structure_digest(q.structure);
      if (!out_path.empty()) write_file(out_path, krasner::serialize_structure(q.structure));
    } else if (product_cmd->parsed()) {
      const KrasnerStructure R1 = load_structure(file);
      const KrasnerStructure R2 = load_structure(file2);
      const KrasnerStructure P = krasner::product(R1, R2);
      outcome.report["command"] = "product";
      outcome.report["digests"] =
          OrderedJson::array({krasner::structure_digest(R1), krasner::structure_digest(R2)});
      outcome.report["carrier_size"] = P.size();
      outcome.report["product_digest"] = krasner::structure_digest(P);
      if (!out_path.empty()) write_file(out_path, krasner::serialize_structure(P));
    } else if (hom->parsed()) {
      const KrasnerStructure src = load_structure(file);
      const KrasnerStructure dst = load_structure(file2);
      std::vector<krasner::Elem> map(static_cast<std::size_t>(src.size()), -1);
      std::stringstream stream(map_spec);
      std::string pair;
      while (std::getline(stream, pair, ',')) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos) {
          throw krasner::UsageError("map entries must be src=dst, got '" + pair + "'");
        }
        const auto a = src.carrier->index_of(pair.substr(0, eq));
        const auto b = dst.carrier->index_of(pair.substr(eq + 1));
        if (!a || !b) throw krasner::UsageError("unknown label in map entry '" + pair + "'");
        map[static_cast<std::size_t>(*a)] = *b;
      }
      for (krasner::Elem a = 0; a < src.size(); ++a) {
        if (map[static_cast<std::size_t>(a)] < 0) {
          throw krasner::UsageError("map is missing an entry for '" + src.carrier->label(a) + "'");
        }
      }
      const krasner::Homomorphism h{&src, &dst, std::move(map)};
      const auto check = krasner::check_homomorphism(h);
      outcome.report["command"] = "hom-check";
      outcome.report["digests"] =
          OrderedJson::array({krasner::structure_digest(src), krasner::structure_digest(dst)});
      outcome.report["homomorphism"] = check.ok;
      if (!check.ok) {
        outcome.report["failed_condition"] = check.condition;
        OrderedJson tuple = OrderedJson::array();
        for (const krasner::Elem a : check.tuple) tuple.push_back(src.carrier->label(a));
        outcome.report["witness"] = std::move(tuple);
      }
      outcome.ok = check.ok;
    } else if (lift->parsed()) {
      const KrasnerStructure R = krasner::ring_lift(krasner::cyclic_ring(zmod), arity_m, arity_n,
                                                    Grade::parse(t1), Grade::parse(t2));
      const std::string text = krasner::serialize_structure(R);
      outcome.report["command"] = "lift";
      outcome.report["digest"] = krasner::structure_digest(R);
      outcome.report["carrier_size"] = R.size();
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
    } else if (search->parsed()) {
      krasner::SearchSpace space;
      space.carrier_size = carrier_size;
      space.m = arity_m;
      space.n = arity_n;
      space.budget = search_limit;
      space.support_policy = krasner::support_policy_from_string(policy_name);
      space.grade_grid.clear();
      std::stringstream stream(grades_csv);
      std::string grade;
      while (std::getline(stream, grade, ',')) space.grade_grid.push_back(Grade::parse(grade));
      const auto result = krasner::enumerate_structures(space);
      outcome.report["command"] = "search";
      outcome.report["candidates"] = result.candidates;
      outcome.report["count"] = result.structures.size();
      outcome.report["truncated"] = result.truncated;
      OrderedJson digests = OrderedJson::array();
      for (const auto& R : result.structures) digests.push_back(krasner::structure_digest(R));
      outcome.report["digests"] = std::move(digests);
    } else if (witness->parsed()) {
      krasner::WitnessResult result;
      if (!witness_files.empty()) {
        std::vector<KrasnerStructure> corpus;
        corpus.reserve(witness_files.size());
        for (const auto& path : witness_files) corpus.push_back(load_structure(path));
        result = krasner::find_witness_in(corpus, predicate);
      } else if (carrier_size > 0) {
        krasner::SearchSpace space;
        space.carrier_size = carrier_size;
        space.m = arity_m;
        space.n = arity_n;
        space.budget = search_limit;
        space.support_policy = krasner::support_policy_from_string(policy_name);
        space.grade_grid.clear();
        std::stringstream stream(grades_csv);
        std::string grade;
        while (std::getline(stream, grade, ',')) space.grade_grid.push_back(Grade::parse(grade));
        result = krasner::find_witness(space, predicate);
      } else {
        throw krasner::UsageError("witness needs structure files or --carrier-size");
      }
      outcome.report["command"] = "witness";
      outcome.report["predicate"] = predicate;
      outcome.report["found"] = result.witness.has_value();
      outcome.report["truncated"] = result.truncated;
      if (result.witness) {
        outcome.report["digest"] = krasner::structure_digest(result.witness->structure);
        outcome.report["ideal"] =
            set_json(*result.witness->structure.carrier, result.witness->ideal);
      }
    }
  } catch (const krasner::InternalError& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return 1;
  } catch (const krasner::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const krasner::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  emit(outcome, json_path, elapsed_ms);
  return outcome.ok ? 0 : 1;
}
