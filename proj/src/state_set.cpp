#include "atcalc/state_set.hpp"

#include <stdexcept>
#include <string>

namespace atcalc {

namespace {

std::size_t words_for(std::size_t universe) {
  return (universe + StateSet::kWordBits - 1) / StateSet::kWordBits;
}

}  // namespace

StateSet::StateSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  s.trim();
  return s;
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<std::uint32_t> ids) {
  StateSet s(universe);
  for (auto id : ids) s.insert(StateId{id});
  return s;
}

StateSet StateSet::of(std::size_t universe, std::span<const StateId> ids) {
  StateSet s(universe);
  for (auto id : ids) s.insert(id);
  return s;
}

StateSet StateSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw std::invalid_argument("from_mask: universe larger than one word");
  StateSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

void StateSet::insert(StateId s) {
  if (s.value >= universe_) {
    throw std::out_of_range("state " + std::to_string(s.value) + " outside universe of " +
                            std::to_string(universe_));
  }
  words_[s.value / kWordBits] |= Word{1} << (s.value % kWordBits);
}

void StateSet::erase(StateId s) {
  if (s.value >= universe_) return;
  words_[s.value / kWordBits] &= ~(Word{1} << (s.value % kWordBits));
}

bool StateSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t StateSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<StateId> StateSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return StateId{static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(words_[w]))};
    }
  }
  return std::nullopt;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool StateSet::intersects(const StateSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

StateSet StateSet::complement() const {
  StateSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  out.reserve(count());
  for_each([&](StateId s) { out.push_back(s); });
  return out;
}

void StateSet::require_same_universe(const StateSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("state sets over different universes (" + std::to_string(universe_) +
                                " vs " + std::to_string(other.universe_) + ")");
  }
}

void StateSet::trim() noexcept {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

}  // namespace atcalc
