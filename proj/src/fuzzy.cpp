#include "krasner/fuzzy.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

namespace krasner {

std::string_view to_string(EqMode mode) {
  return mode == EqMode::Strict ? "strict" : "support";
}

EqMode eq_mode_from_string(std::string_view s) {
  if (s == "strict") return EqMode::Strict;
  if (s == "support") return EqMode::Support;
  throw UsageError("unknown equality mode '" + std::string(s) + "' (expected strict|support)");
}

Grade Grade::ratio(std::int64_t p, std::int64_t q) {
  if (q == 0) throw UsageError("grade denominator must be non-zero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (p < 0 || p > q) {
    throw UsageError("grade " + std::to_string(p) + "/" + std::to_string(q) +
                     " outside [0,1]");
  }
  const std::int64_t g = std::gcd(p, q);
  Grade r;
  r.num_ = p / g;
  r.den_ = q / g;
  return r;
}

Grade Grade::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> std::int64_t {
    std::int64_t value = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw UsageError("malformed grade '" + std::string(text) + "' (expected \"p/q\")");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ratio(parse_int(text), 1);
  return ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Grade::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
  // Cross-multiply in 128 bits; canonical denominators are positive.
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Grade max(const Grade& a, const Grade& b) { return a < b ? b : a; }
Grade min(const Grade& a, const Grade& b) { return b < a ? b : a; }

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](Elem a) { out.push_back(a); });
  return out;
}

std::uint64_t ElemSet::word(int i) const {
  std::uint64_t w = 0;
  for (int b = 0; b < 64; ++b) {
    const std::size_t bit = static_cast<std::size_t>(i) * 64 + static_cast<std::size_t>(b);
    if (bit < kMaxCarrier && bits_.test(bit)) w |= (std::uint64_t{1} << b);
  }
  return w;
}

bool lex_less(const ElemSet& a, const ElemSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool ElemSetKeyLess::operator()(const ElemSet& a, const ElemSet& b) const {
  if (a.count() != b.count()) return a.count() < b.count();
  if (a == b) return false;
  return lex_less(a, b);
}

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw UsageError("carrier must have at least one element");
  if (labels_.size() > kMaxCarrier) {
    throw UsageError("carrier size " + std::to_string(labels_.size()) +
                     " exceeds the supported maximum " + std::to_string(kMaxCarrier));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw UsageError("duplicate carrier label '" + l + "'");
  }
}

Carrier::Ptr Carrier::make(std::vector<std::string> labels) {
  return Ptr(new Carrier(std::move(labels)));
}

std::optional<Elem> Carrier::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

std::string Carrier::set_label(const ElemSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem a) {
    if (!first) out += ",";
    first = false;
    out += label(a);
  });
  out += "}";
  return out;
}

bool same_carrier(const Carrier::Ptr& a, const Carrier::Ptr& b) {
  return a == b || (a && b && *a == *b);
}

FuzzySubset::FuzzySubset(Carrier::Ptr carrier, std::vector<Grade> grades)
    : carrier_(std::move(carrier)), grades_(std::move(grades)) {
  if (!carrier_) throw UsageError("fuzzy subset requires a carrier");
  if (grades_.size() != static_cast<std::size_t>(carrier_->size())) {
    throw UsageError("fuzzy subset must grade every carrier element (got " +
                     std::to_string(grades_.size()) + " grades for carrier of size " +
                     std::to_string(carrier_->size()) + ")");
  }
}

FuzzySubset FuzzySubset::zero(Carrier::Ptr carrier) {
  const auto size = static_cast<std::size_t>(carrier->size());
  return FuzzySubset(std::move(carrier), std::vector<Grade>(size));
}

FuzzySubset FuzzySubset::threshold_set(Carrier::Ptr carrier, const ElemSet& H, const Grade& t) {
  if (t.is_zero() && !H.empty()) {
    throw UsageError("threshold set over a non-empty set requires a positive grade");
  }
  std::vector<Grade> grades(static_cast<std::size_t>(carrier->size()));
  H.for_each([&](Elem a) { grades[static_cast<std::size_t>(a)] = t; });
  return FuzzySubset(std::move(carrier), std::move(grades));
}

ElemSet FuzzySubset::support() const {
  ElemSet s;
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (!grades_[i].is_zero()) s.add(static_cast<Elem>(i));
  }
  return s;
}

bool FuzzySubset::is_non_zero() const {
  return std::any_of(grades_.begin(), grades_.end(),
                     [](const Grade& g) { return !g.is_zero(); });
}

ElemSet support(const FuzzySubset& mu) { return mu.support(); }

FuzzySubset join(std::span<const FuzzySubset> mus) {
  if (mus.empty()) throw UsageError("join requires at least one fuzzy subset");
  for (const auto& mu : mus) {
    if (!same_carrier(mu.carrier(), mus.front().carrier())) {
      throw UsageError("join requires all fuzzy subsets to share one carrier");
    }
  }
  std::vector<Grade> grades = mus.front().grades();
  for (std::size_t k = 1; k < mus.size(); ++k) {
    const auto& g = mus[k].grades();
    for (std::size_t i = 0; i < grades.size(); ++i) grades[i] = max(grades[i], g[i]);
  }
  return FuzzySubset(mus.front().carrier(), std::move(grades));
}

FuzzySubset join(const FuzzySubset& a, const FuzzySubset& b) {
  const FuzzySubset args[] = {a, b};
  return join(std::span<const FuzzySubset>(args));
}

bool equal(const FuzzySubset& mu, const FuzzySubset& nu, EqMode mode) {
  if (!same_carrier(mu.carrier(), nu.carrier())) {
    throw UsageError("fuzzy subset comparison requires a shared carrier");
  }
  if (mode == EqMode::Strict) return mu.grades() == nu.grades();
  return mu.support() == nu.support();
}

}  // namespace krasner
