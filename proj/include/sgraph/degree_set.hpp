#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgraph {

// A set S of admissible vertex degrees. Immutable after construction and
// freely shareable across threads.
//
// DSL grammar accepted by parse():
//   even | odd | ge:<s> | set:<k1>,<k2>,... | pow2:<cutoff>
// with an optional "|cut:<K>" suffix imposing (or overriding) a cutoff.
// Explicit-list and pow2 sets are always finite; even/odd/ge are infinite
// unless a cutoff is given.
class DegreeSet {
 public:
  enum class Kind { Explicit, Even, Odd, Tail, Pow2 };

  // Throws std::invalid_argument on malformed specs, empty sets, or S={0}
  // unless allow_trivial is set.
  static DegreeSet parse(const std::string& spec, bool allow_trivial = false);

  Kind kind() const { return kind_; }
  bool contains(std::uint64_t k) const;
  std::uint64_t min_element() const { return min_element_; }
  // Largest member for finite sets; nullopt for uncut infinite kinds.
  std::optional<std::uint64_t> max_element() const;
  bool is_finite() const { return max_element().has_value(); }
  std::optional<std::uint64_t> cutoff() const { return cutoff_; }

  bool all_even() const;
  bool all_odd() const;
  // Exactly S = {0}: the graph of isolated vertices.
  bool is_trivial_zero() const;
  bool is_singleton() const;

  // Canonical text form; parse(label()) reproduces this set.
  const std::string& label() const { return label_; }

  // Calls fn(k) for each member k <= hi in increasing order.
  template <typename Fn>
  void for_each_upto(std::uint64_t hi, Fn&& fn) const {
    if (kind_ == Kind::Explicit || kind_ == Kind::Pow2) {
      for (std::uint64_t k : elements_) {
        if (k > hi) break;
        fn(k);
      }
      return;
    }
    std::uint64_t start = min_element_;
    std::uint64_t step = (kind_ == Kind::Tail) ? 1 : 2;
    std::uint64_t top = hi;
    if (cutoff_ && *cutoff_ < top) top = *cutoff_;
    for (std::uint64_t k = start; k <= top; k += step) fn(k);
  }

  // S "shifted down by one": { k >= 0 : k+1 in S }. Used for the size-biased
  // offspring law of the exploration process, since phi_{S-1} = phi_S'.
  // Throws if the result would be empty (S = {0}).
  DegreeSet shift_down() const;

  // Parity-level existence of an S-graph on n vertices: if S is all-odd,
  // n must be even; n = 0 is always admissible (empty graph).
  bool admissible_n(std::uint64_t n) const;

 private:
  DegreeSet() = default;
  void canonicalize_label();

  Kind kind_ = Kind::Explicit;
  std::vector<std::uint64_t> elements_;  // sorted, unique; Explicit/Pow2 only
  std::uint64_t min_element_ = 0;
  std::optional<std::uint64_t> cutoff_;
  std::string label_;
};

}  // namespace sgraph
