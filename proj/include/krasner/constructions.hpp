#ifndef KRASNER_CONSTRUCTIONS_HPP
#define KRASNER_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "krasner/ideals.hpp"
#include "krasner/structure.hpp"

namespace krasner {

/// Cayley tables of a finite commutative unital ring.
struct RingSpec {
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
  Elem zero = 0;
  Elem one = 0;
};

// Z_k with labels "0".."k-1".
RingSpec cyclic_ring(int k);

// Commutative unital ring axioms, exhaustively. Throws UsageError naming the
// first failing law.
void check_ring(const RingSpec& spec);

// f = fuzzy point of the m-fold sum at t1, g = fuzzy point of the n-fold
// product at t2. Validates the ring first and asserts the lifted structure
// passes validate_structure, so axiom failures always indicate lift logic.
// Equality mode is strict when t1 = t2, support otherwise.
KrasnerStructure ring_lift(const RingSpec& spec, int m, int n, const Grade& t1, const Grade& t2);

// Pairwise carrier with min-combined grades. Arities must match.
KrasnerStructure product(const KrasnerStructure& R1, const KrasnerStructure& R2);

/// Map between two structures of the same arities. Pointers are non-owning;
/// the caller keeps both structures alive.
struct Homomorphism {
  const KrasnerStructure* source = nullptr;
  const KrasnerStructure* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[static_cast<std::size_t>(a)]; }
};

struct HomCheck {
  bool ok = true;
  std::string condition;      // "identity", "f-compatibility", "g-compatibility"
  std::vector<Elem> tuple;    // first failing tuple
};

// Checks h(e) = e and support-level compatibility with f and g over all tuples.
HomCheck check_homomorphism(const Homomorphism& h);

// supp(g(a_1^n)) = {e} only when some factor is e.
bool is_hyperintegral_f_domain(const KrasnerStructure& R);

/// Quotient R/I: carrier = cosets supp(f(a, I, e^(m-2))), operations induced
/// by collapsing base supports to coset sets (characteristic grades).
struct CosetSpace {
  KrasnerStructure structure;   // the quotient
  std::vector<ElemSet> cosets;  // indexed by quotient element
  std::vector<Elem> coset_of;   // base element -> quotient element
};

// Representative independence of the induced tables and the coset partition
// are checked exhaustively; a violation raises InternalError (it cannot occur
// for a valid ideal of a validated structure). The quotient is asserted to
// pass validate_structure.
CosetSpace quotient(const KrasnerStructure& R, const ElemSet& ideal);

// a -> its coset; asserted to be a surjective homomorphism.
Homomorphism natural_projection(const KrasnerStructure& base, const CosetSpace& q);

// { a | h(a) in P }. When P is prime (improper reading), the preimage is
// asserted prime as well.
ElemSet preimage_ideal(const Homomorphism& h, const ElemSet& P);

}  // namespace krasner

#endif  // KRASNER_CONSTRUCTIONS_HPP
