#ifndef KRASNER_FUZZY_HPP
#define KRASNER_FUZZY_HPP

#include <bitset>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "krasner/errors.hpp"

namespace krasner {

// Element of a carrier, by index.
using Elem = int;

// Largest carrier the kernel handles (products of corpus structures stay well below).
inline constexpr int kMaxCarrier = 128;

enum class EqMode { Strict, Support };

std::string_view to_string(EqMode mode);
EqMode eq_mode_from_string(std::string_view s);

/// Membership grade: an exact rational in [0,1], kept in lowest terms so that
/// equality is decidable. Grades are never approximated by floating point.
class Grade {
 public:
  Grade() : num_(0), den_(1) {}

  // Reduces p/q to canonical form; throws UsageError outside [0,1] or on q = 0.
  static Grade ratio(std::int64_t p, std::int64_t q);

  // Accepts "p/q" or a bare integer "p" (meaning p/1).
  static Grade parse(std::string_view text);

  static Grade zero() { return Grade(); }
  static Grade one() { return ratio(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  std::string str() const;  // canonical "p/q"

  friend bool operator==(const Grade& a, const Grade& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

Grade max(const Grade& a, const Grade& b);
Grade min(const Grade& a, const Grade& b);

/// Subset of a carrier as a fixed-width bitset. Bits at or above the carrier
/// size must stay clear; all operations preserve that.
class ElemSet {
 public:
  ElemSet() = default;

  static ElemSet single(Elem a) {
    ElemSet s;
    s.add(a);
    return s;
  }
  static ElemSet full(int size) {
    ElemSet s;
    for (Elem a = 0; a < size; ++a) s.add(a);
    return s;
  }

  void add(Elem a) { bits_.set(static_cast<std::size_t>(a)); }
  void remove(Elem a) { bits_.reset(static_cast<std::size_t>(a)); }
  bool contains(Elem a) const { return bits_.test(static_cast<std::size_t>(a)); }
  bool empty() const { return bits_.none(); }
  int count() const { return static_cast<int>(bits_.count()); }

  bool subset_of(const ElemSet& other) const { return (bits_ & ~other.bits_).none(); }
  bool intersects(const ElemSet& other) const { return (bits_ & other.bits_).any(); }

  ElemSet& operator|=(const ElemSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  friend bool operator==(const ElemSet& a, const ElemSet& b) = default;

  // Members in ascending order.
  std::vector<Elem> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = bits_._Find_first(); i < kMaxCarrier; i = bits_._Find_next(i)) {
      fn(static_cast<Elem>(i));
    }
  }

  // Stable key for ordered containers; not the set-lexicographic order.
  std::uint64_t word(int i) const;

 private:
  std::bitset<kMaxCarrier> bits_;
};

// Orders sets by their ascending member sequence ({0,2,4} precedes {0,3}).
bool lex_less(const ElemSet& a, const ElemSet& b);

// Total order usable as a container key: size, then member-lexicographic.
struct ElemSetKeyLess {
  bool operator()(const ElemSet& a, const ElemSet& b) const;
};

/// Finite ground set. Labels are opaque identifiers; the index order is used
/// only for canonical serialization and deterministic reports.
class Carrier {
 public:
  using Ptr = std::shared_ptr<const Carrier>;

  static Ptr make(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> index_of(std::string_view label) const;

  ElemSet all() const { return ElemSet::full(size()); }
  std::string set_label(const ElemSet& s) const;  // "{a,b,c}"

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.labels_ == b.labels_; }

 private:
  explicit Carrier(std::vector<std::string> labels);
  std::vector<std::string> labels_;
};

bool same_carrier(const Carrier::Ptr& a, const Carrier::Ptr& b);

/// Total assignment of a grade to every carrier element.
class FuzzySubset {
 public:
  FuzzySubset(Carrier::Ptr carrier, std::vector<Grade> grades);

  static FuzzySubset zero(Carrier::Ptr carrier);

  // Grade t on H, zero elsewhere. Requires t > 0 unless H is empty.
  static FuzzySubset threshold_set(Carrier::Ptr carrier, const ElemSet& H, const Grade& t);

  static FuzzySubset characteristic(Carrier::Ptr carrier, const ElemSet& H) {
    return threshold_set(std::move(carrier), H, Grade::one());
  }
  static FuzzySubset point(Carrier::Ptr carrier, Elem a, const Grade& t) {
    return threshold_set(std::move(carrier), ElemSet::single(a), t);
  }

  const Carrier::Ptr& carrier() const { return carrier_; }
  const Grade& grade(Elem a) const { return grades_[static_cast<std::size_t>(a)]; }
  const std::vector<Grade>& grades() const { return grades_; }

  ElemSet support() const;
  bool is_non_zero() const;

 private:
  Carrier::Ptr carrier_;
  std::vector<Grade> grades_;
};

// Elements with positive grade.
ElemSet support(const FuzzySubset& mu);

// Pointwise maximum. The list must be non-empty and share one carrier.
FuzzySubset join(std::span<const FuzzySubset> mus);
FuzzySubset join(const FuzzySubset& a, const FuzzySubset& b);

// Strict: identical grades everywhere. Support: identical supports.
bool equal(const FuzzySubset& mu, const FuzzySubset& nu, EqMode mode);

}  // namespace krasner

#endif  // KRASNER_FUZZY_HPP
