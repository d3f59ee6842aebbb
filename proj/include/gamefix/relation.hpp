#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gamefix {

// A finite set with a fixed enumeration order; labels are presentation only.
struct IndexedSet {
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
  bool operator==(const IndexedSet&) const = default;
};

// Cartesian product, first factor most significant: (i, j) -> i*|b| + j.
IndexedSet product_set(const IndexedSet& a, const IndexedSet& b);

// The one-element set; used to view a plain relation A -> B as a process
// with trivial state.
IndexedSet unit_set();

// A relation between two indexed sets, stored densely. Composition and the
// fixed-point operators below only check set sizes, not labels.
class Relation {
 public:
  Relation() = default;  // the empty relation between empty sets
  Relation(IndexedSet source, IndexedSet target);

  static Relation identity(const IndexedSet& set);
  static Relation full(IndexedSet source, IndexedSet target);

  const IndexedSet& source() const { return source_; }
  const IndexedSet& target() const { return target_; }

  bool relates(std::size_t from, std::size_t to) const;
  void set(std::size_t from, std::size_t to, bool value = true);

  // Relational composition: this ; then. Requires |this.target| == |then.source|.
  Relation compose(const Relation& then) const;

  std::size_t pair_count() const;
  bool operator==(const Relation& other) const;

 private:
  void check_indices(std::size_t from, std::size_t to) const;

  IndexedSet source_;
  IndexedSet target_;
  std::vector<std::uint8_t> bits_;  // [to * |source| + from]
};

// Both operators take a relation r : (A x X) -> A with source index a*|X| + x
// and return a relation X -> A.
//
// Strong: x related to a iff (a, x) r a — the moves that reproduce themselves
// at state x.
Relation strong_fixpoint(const Relation& r, const IndexedSet& moves,
                         const IndexedSet& states);

// Weak: per state x, the limit of the decreasing chain S_1 = image of A,
// S_{n+1} = image of S_n under r(., x). Stabilizes after at most |A| steps.
Relation weak_fixpoint(const Relation& r, const IndexedSet& moves,
                       const IndexedSet& states);

// (A x B) -> A and (A x B) -> B.
Relation projection_first(const IndexedSet& a, const IndexedSet& b);
Relation projection_second(const IndexedSet& a, const IndexedSet& b);

// A stateful relational process: inputs A, outputs B, states X, with a
// transition relation (A x X) -> (B x X).
struct Process {
  IndexedSet inputs;
  IndexedSet outputs;
  IndexedSet states;
  Relation rel;

  Process(IndexedSet inputs, IndexedSet outputs, IndexedSet states, Relation rel);

  // Forget states / forget data.
  Relation data_part() const;   // (A x X) -> B
  Relation state_part() const;  // (A x X) -> X
};

// Pairs of (input, state) the process can hold fixed when the environment
// feeds outputs back to inputs through `feedback` : (B x X) -> A. Returned as
// a relation X -> A: the strong fixed point of rel ; feedback.
Relation extract_control(const Process& process, const Relation& feedback);

}
