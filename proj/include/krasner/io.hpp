#ifndef KRASNER_IO_HPP
#define KRASNER_IO_HPP

#include <string>
#include <string_view>

#include "krasner/structure.hpp"

namespace krasner {

inline constexpr std::string_view kStructureFormat = "krasner-structure/v1";

// Canonical textual form: fixed key order, entries in lexicographic tuple
// order, fuzzy values as [label, "p/q"] pairs for the support only. The
// serialization of a parsed document reproduces it byte for byte.
std::string serialize_structure(const KrasnerStructure& R);

// Parses and validates a structure document. Throws ParseError with a
// position on syntax errors and with the offending tuple or label on
// semantic ones (totality violations, bad grades, duplicate labels).
KrasnerStructure parse_structure(std::string_view text);

// Stable content hash (FNV-1a 64 of the canonical serialization), hex-encoded.
std::string structure_digest(const KrasnerStructure& R);

}  // namespace krasner

#endif  // KRASNER_IO_HPP
