#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace atcalc {

/// Dense index into a TransitionSystem's state table.
struct StateId {
  std::uint32_t value = 0;

  friend auto operator<=>(StateId, StateId) = default;
};

/// A set of states of one transition system, stored as a bitset over the
/// system's id range (the "universe"). Properties and state sets coincide:
/// every atomic proposition is a StateSet.
///
/// Binary operations require both operands to share a universe and throw
/// std::invalid_argument otherwise.
class StateSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  StateSet() = default;
  explicit StateSet(std::size_t universe);

  static StateSet full(std::size_t universe);
  static StateSet of(std::size_t universe, std::initializer_list<std::uint32_t> ids);
  static StateSet of(std::size_t universe, std::span<const StateId> ids);
  static StateSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }

  bool contains(StateId s) const noexcept {
    return s.value < universe_ && ((words_[s.value / kWordBits] >> (s.value % kWordBits)) & 1U) != 0;
  }
  void insert(StateId s);
  void erase(StateId s);

  bool empty() const noexcept;
  std::size_t count() const noexcept;
  std::optional<StateId> first() const noexcept;

  bool is_subset_of(const StateSet& other) const;
  bool intersects(const StateSet& other) const;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  StateSet& operator-=(const StateSet& other);

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  /// Complement within the universe.
  StateSet complement() const;

  bool operator==(const StateSet& other) const = default;

  /// Members in ascending id order.
  std::vector<StateId> members() const;

  /// Low 64 ids as a bitmask; only meaningful for universes of at most 64 states.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(StateId{static_cast<std::uint32_t>(w * kWordBits + bit)});
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
  std::span<Word> words() noexcept { return {words_.data(), words_.size()}; }

 private:
  void require_same_universe(const StateSet& other) const;
  void trim() noexcept;

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

}  // namespace atcalc
