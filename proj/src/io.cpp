#include "krasner/io.hpp"

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace krasner {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson value_json(const Carrier& carrier, const FuzzySubset& mu) {
  OrderedJson out = OrderedJson::array();
  for (Elem a = 0; a < carrier.size(); ++a) {
    if (!mu.grade(a).is_zero()) {
      out.push_back(OrderedJson::array({carrier.label(a), mu.grade(a).str()}));
    }
  }
  return out;
}

OrderedJson table_json(const KrasnerStructure& R, const HyperOperationTable& table) {
  OrderedJson out = OrderedJson::array();
  std::vector<Elem> tuple(static_cast<std::size_t>(table.arity()), 0);
  do {
    OrderedJson args = OrderedJson::array();
    for (const Elem a : tuple) args.push_back(R.carrier->label(a));
    out.push_back(OrderedJson{{"args", std::move(args)},
                              {"value", value_json(*R.carrier, table.at(tuple))}});
  } while (next_tuple(tuple, R.size()));
  return out;
}

// Maps a nlohmann byte offset to 1-based line/column.
std::pair<int, int> position_of(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Elem resolve(const Carrier& carrier, const OrderedJson& label, const char* where) {
  if (!label.is_string()) {
    throw ParseError(std::string(where) + ": expected a carrier label string");
  }
  const auto idx = carrier.index_of(label.get<std::string>());
  if (!idx) {
    throw ParseError(std::string(where) + ": unknown carrier label '" +
                     label.get<std::string>() + "'");
  }
  return *idx;
}

HyperOperationTable parse_table(const Carrier::Ptr& carrier, int arity, const OrderedJson& doc,
                                const char* name) {
  if (!doc.is_array()) throw ParseError(std::string(name) + "-table must be an array of entries");
  const int size = carrier->size();
  std::size_t expected = 1;
  for (int i = 0; i < arity; ++i) expected *= static_cast<std::size_t>(size);

  std::vector<FuzzySubset> entries(expected, FuzzySubset::zero(carrier));
  std::vector<bool> seen(expected, false);

  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("args") || !item.contains("value")) {
      throw ParseError(std::string(name) + "-table entry must have 'args' and 'value'");
    }
    const auto& args = item["args"];
    if (!args.is_array() || static_cast<int>(args.size()) != arity) {
      throw ParseError(std::string(name) + "-table entry args must list exactly " +
                       std::to_string(arity) + " labels");
    }
    std::vector<Elem> tuple;
    std::string key = "(";
    for (const auto& label : args) {
      tuple.push_back(resolve(*carrier, label, name));
      if (key.size() > 1) key += ",";
      key += label.get<std::string>();
    }
    key += ")";
    std::size_t index = 0;
    for (const Elem a : tuple) index = index * static_cast<std::size_t>(size) + static_cast<std::size_t>(a);
    if (seen[index]) {
      throw ParseError("duplicate " + std::string(name) + "-table entry for tuple " + key);
    }
    seen[index] = true;

    std::vector<Grade> grades(static_cast<std::size_t>(size));
    std::vector<bool> graded(static_cast<std::size_t>(size), false);
    for (const auto& pair : item["value"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError(std::string(name) + "-table value for " + key +
                         " must be [label, \"p/q\"] pairs");
      }
      const Elem a = resolve(*carrier, pair[0], name);
      if (graded[static_cast<std::size_t>(a)]) {
        throw ParseError("duplicate grade for label '" + pair[0].get<std::string>() + "' in " +
                         std::string(name) + "-table value for " + key);
      }
      graded[static_cast<std::size_t>(a)] = true;
      if (!pair[1].is_string()) {
        throw ParseError("grade in " + std::string(name) + "-table value for " + key +
                         " must be a \"p/q\" string");
      }
      try {
        grades[static_cast<std::size_t>(a)] = Grade::parse(pair[1].get<std::string>());
      } catch (const UsageError& e) {
        throw ParseError(std::string(name) + "-table value for " + key + ": " + e.what());
      }
    }
    entries[index] = FuzzySubset(carrier, std::move(grades));
  }

  for (std::size_t i = 0; i < expected; ++i) {
    if (!seen[i]) {
      // Reconstruct the missing tuple for the diagnostic.
      std::vector<Elem> tuple(static_cast<std::size_t>(arity), 0);
      std::size_t rem = i;
      for (int p = arity - 1; p >= 0; --p) {
        tuple[static_cast<std::size_t>(p)] = static_cast<Elem>(rem % static_cast<std::size_t>(size));
        rem /= static_cast<std::size_t>(size);
      }
      std::string key = "(";
      for (std::size_t p = 0; p < tuple.size(); ++p) {
        if (p > 0) key += ",";
        key += carrier->label(tuple[p]);
      }
      key += ")";
      throw ParseError(std::string(name) + "-table is missing the entry for tuple " + key);
    }
  }
  try {
    return HyperOperationTable(carrier, arity, std::move(entries));
  } catch (const UsageError& e) {
    throw ParseError(std::string(name) + "-table: " + e.what());
  }
}

}  // namespace

std::string serialize_structure(const KrasnerStructure& R) {
  OrderedJson doc;
  doc["format"] = std::string(kStructureFormat);
  doc["carrier"] = R.carrier->labels();
  doc["m"] = R.m();
  doc["n"] = R.n();
  doc["identity"] = R.carrier->label(R.identity);
  if (R.scalar_identity) doc["scalar_identity"] = R.carrier->label(*R.scalar_identity);
  OrderedJson negation = OrderedJson::array();
  for (Elem a = 0; a < R.size(); ++a) {
    negation.push_back(OrderedJson::array({R.carrier->label(a), R.carrier->label(R.negate(a))}));
  }
  doc["negation"] = std::move(negation);
  doc["equality_mode"] = std::string(to_string(R.equality_mode));
  doc["f"] = table_json(R, R.f);
  doc["g"] = table_json(R, R.g);
  return doc.dump(2) + "\n";
}

KrasnerStructure parse_structure(std::string_view text) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, column);
  }
  if (!doc.is_object()) throw ParseError("structure document must be a JSON object");
  for (const char* key : {"format", "carrier", "m", "n", "identity", "negation",
                          "equality_mode", "f", "g"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing required key '") + key + "'");
  }
  if (doc["format"] != std::string(kStructureFormat)) {
    throw ParseError("unsupported format '" + doc["format"].dump() + "', expected \"" +
                     std::string(kStructureFormat) + "\"");
  }
  if (!doc["carrier"].is_array() || doc["carrier"].empty()) {
    throw ParseError("carrier must be a non-empty array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& l : doc["carrier"]) {
    if (!l.is_string()) throw ParseError("carrier labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  Carrier::Ptr carrier;
  try {
    carrier = Carrier::make(std::move(labels));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }

  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer()) {
    throw ParseError("arities m and n must be integers");
  }
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  if (m < 2 || n < 2) throw ParseError("arities m and n must be at least 2");

  const Elem identity = resolve(*carrier, doc["identity"], "identity");
  std::optional<Elem> scalar;
  if (doc.contains("scalar_identity")) {
    scalar = resolve(*carrier, doc["scalar_identity"], "scalar_identity");
  }

  if (!doc["negation"].is_array()) throw ParseError("negation must be an array of label pairs");
  std::vector<Elem> negation(static_cast<std::size_t>(carrier->size()), -1);
  for (const auto& pair : doc["negation"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("negation entries must be [label, label] pairs");
    }
    const Elem a = resolve(*carrier, pair[0], "negation");
    if (negation[static_cast<std::size_t>(a)] >= 0) {
      throw ParseError("duplicate negation entry for label '" + pair[0].get<std::string>() + "'");
    }
    negation[static_cast<std::size_t>(a)] = resolve(*carrier, pair[1], "negation");
  }
  for (Elem a = 0; a < carrier->size(); ++a) {
    if (negation[static_cast<std::size_t>(a)] < 0) {
      throw ParseError("negation is missing an entry for label '" + carrier->label(a) + "'");
    }
  }

  if (!doc["equality_mode"].is_string()) throw ParseError("equality_mode must be a string");
  EqMode mode;
  try {
    mode = eq_mode_from_string(doc["equality_mode"].get<std::string>());
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }

  HyperOperationTable f = parse_table(carrier, m, doc["f"], "f");
  HyperOperationTable g = parse_table(carrier, n, doc["g"], "g");
  try {
    return KrasnerStructure(carrier, std::move(f), std::move(g), identity, std::move(negation),
                            scalar, mode);
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string structure_digest(const KrasnerStructure& R) {
  const std::string text = serialize_structure(R);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace krasner
