#include "gamefix/relation.hpp"

#include <algorithm>

#include "gamefix/errors.hpp"

namespace gamefix {

IndexedSet product_set(const IndexedSet& a, const IndexedSet& b) {
  IndexedSet out;
  out.labels.reserve(a.size() * b.size());
  for (const auto& la : a.labels) {
    for (const auto& lb : b.labels) {
      out.labels.push_back(la + "|" + lb);
    }
  }
  return out;
}

IndexedSet unit_set() { return IndexedSet{{"*"}}; }

Relation::Relation(IndexedSet source, IndexedSet target)
    : source_(std::move(source)),
      target_(std::move(target)),
      bits_(source_.size() * target_.size(), 0) {}

Relation Relation::identity(const IndexedSet& set) {
  Relation r(set, set);
  for (std::size_t i = 0; i < set.size(); ++i) r.set(i, i);
  return r;
}

Relation Relation::full(IndexedSet source, IndexedSet target) {
  Relation r(std::move(source), std::move(target));
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

void Relation::check_indices(std::size_t from, std::size_t to) const {
  if (from >= source_.size() || to >= target_.size()) {
    throw DomainError("relation index out of range");
  }
}

bool Relation::relates(std::size_t from, std::size_t to) const {
  check_indices(from, to);
  return bits_[to * source_.size() + from] != 0;
}

void Relation::set(std::size_t from, std::size_t to, bool value) {
  check_indices(from, to);
  bits_[to * source_.size() + from] = value ? 1 : 0;
}

Relation Relation::compose(const Relation& then) const {
  if (target_.size() != then.source_.size()) {
    throw DomainError("relation composition dimension mismatch: " +
                      std::to_string(target_.size()) + " vs " +
                      std::to_string(then.source_.size()));
  }
  Relation out(source_, then.target_);
  for (std::size_t a = 0; a < source_.size(); ++a) {
    for (std::size_t b = 0; b < target_.size(); ++b) {
      if (!relates(a, b)) continue;
      for (std::size_t c = 0; c < then.target_.size(); ++c) {
        if (then.relates(b, c)) out.set(a, c);
      }
    }
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (auto b : bits_) n += b;
  return n;
}

bool Relation::operator==(const Relation& other) const {
  return source_.size() == other.source_.size() &&
         target_.size() == other.target_.size() && bits_ == other.bits_;
}

namespace {

void check_fixpoint_shape(const Relation& r, const IndexedSet& moves,
                          const IndexedSet& states) {
  if (r.source().size() != moves.size() * states.size() ||
      r.target().size() != moves.size()) {
    throw DomainError("fixed-point operand must be (moves x states) -> moves");
  }
}

}  // namespace

Relation strong_fixpoint(const Relation& r, const IndexedSet& moves,
                         const IndexedSet& states) {
  check_fixpoint_shape(r, moves, states);
  Relation out(states, moves);
  for (std::size_t x = 0; x < states.size(); ++x) {
    for (std::size_t a = 0; a < moves.size(); ++a) {
      if (r.relates(a * states.size() + x, a)) out.set(x, a);
    }
  }
  return out;
}

Relation weak_fixpoint(const Relation& r, const IndexedSet& moves,
                       const IndexedSet& states) {
  check_fixpoint_shape(r, moves, states);
  Relation out(states, moves);
  std::size_t n = moves.size();
  for (std::size_t x = 0; x < states.size(); ++x) {
    std::vector<std::uint8_t> current(n, 1);  // S_0 = all of A
    // The chain S_{k+1} = image of S_k is decreasing once k >= 1, so it
    // stabilizes after at most |A| refinements.
    for (std::size_t step = 0; step <= n; ++step) {
      std::vector<std::uint8_t> next(n, 0);
      for (std::size_t c = 0; c < n; ++c) {
        if (!current[c]) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (r.relates(c * states.size() + x, a)) next[a] = 1;
        }
      }
      if (next == current) break;
      current = std::move(next);
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (current[a]) out.set(x, a);
    }
  }
  return out;
}

Relation projection_first(const IndexedSet& a, const IndexedSet& b) {
  Relation r(product_set(a, b), a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r.set(i * b.size() + j, i);
    }
  }
  return r;
}

Relation projection_second(const IndexedSet& a, const IndexedSet& b) {
  Relation r(product_set(a, b), b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r.set(i * b.size() + j, j);
    }
  }
  return r;
}

Process::Process(IndexedSet inputs_, IndexedSet outputs_, IndexedSet states_,
                 Relation rel_)
    : inputs(std::move(inputs_)),
      outputs(std::move(outputs_)),
      states(std::move(states_)),
      rel(std::move(rel_)) {
  if (rel.source().size() != inputs.size() * states.size() ||
      rel.target().size() != outputs.size() * states.size()) {
    throw DomainError("process relation must be (inputs x states) -> (outputs x states)");
  }
}

Relation Process::data_part() const {
  return rel.compose(projection_first(outputs, states));
}

Relation Process::state_part() const {
  return rel.compose(projection_second(outputs, states));
}

Relation extract_control(const Process& process, const Relation& feedback) {
  if (feedback.source().size() !=
          process.outputs.size() * process.states.size() ||
      feedback.target().size() != process.inputs.size()) {
    throw DomainError("feedback must be (outputs x states) -> inputs");
  }
  Relation loop = process.rel.compose(feedback);  // (A x X) -> A
  return strong_fixpoint(loop, process.inputs, process.states);
}

}
