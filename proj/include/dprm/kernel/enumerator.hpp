#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dprm/kernel/budget.hpp"

namespace dprm {

template <class T>
struct StepResult {
  std::optional<T> item;
  bool done = false;

  static StepResult emit(T value) { return StepResult{std::move(value), false}; }
  static StepResult idle() { return StepResult{std::nullopt, false}; }
  static StepResult finish() { return StepResult{std::nullopt, true}; }
};

// Single-consumer stream driven by a deterministic step function. Every call
// of the step function costs one unit of fuel; a step may emit at most one
// item. Because the step function is deterministic, the items produced under
// fuel f are a prefix of those produced under any larger fuel.
template <class T>
class Enumerator {
 public:
  using StepFn = std::function<StepResult<T>()>;

  Enumerator(StepFn step, std::uint64_t fuel) : step_(std::move(step)), fuel_(fuel) {}

  Enumerator(Enumerator&&) noexcept = default;
  Enumerator& operator=(Enumerator&&) noexcept = default;
  Enumerator(const Enumerator&) = delete;
  Enumerator& operator=(const Enumerator&) = delete;

  // Runs until an item appears, the stream ends, or fuel is gone.
  std::optional<T> next() {
    while (!done_) {
      auto r = step_once();
      if (r.item) return r.item;
      if (r.done || out_of_fuel()) break;
    }
    return std::nullopt;
  }

  // One fuel unit worth of work. Used by composite enumerators that
  // interleave children step by step.
  StepResult<T> step_once() {
    if (done_ || fuel_used_ >= fuel_) return StepResult<T>::idle();
    ++fuel_used_;
    StepResult<T> r = step_();
    if (r.done) done_ = true;
    if (r.item) ++emitted_;
    return r;
  }

  std::vector<T> take(std::size_t n) {
    std::vector<T> out;
    while (out.size() < n) {
      auto v = next();
      if (!v) break;
      out.push_back(std::move(*v));
    }
    return out;
  }

  std::vector<T> drain() {
    std::vector<T> out;
    while (auto v = next()) out.push_back(std::move(*v));
    return out;
  }

  bool finished() const { return done_; }
  bool out_of_fuel() const { return !done_ && fuel_used_ >= fuel_; }
  std::uint64_t fuel_used() const { return fuel_used_; }
  std::uint64_t fuel() const { return fuel_; }
  std::uint64_t emitted() const { return emitted_; }

 private:
  StepFn step_;
  std::uint64_t fuel_;
  std::uint64_t fuel_used_ = 0;
  std::uint64_t emitted_ = 0;
  bool done_ = false;
};

template <class T>
Enumerator<T> from_vector(std::vector<T> items, std::uint64_t fuel = kUnbounded) {
  auto data = std::make_shared<std::vector<T>>(std::move(items));
  auto pos = std::make_shared<std::size_t>(0);
  return Enumerator<T>(
      [data, pos]() {
        if (*pos >= data->size()) return StepResult<T>::finish();
        return StepResult<T>::emit((*data)[(*pos)++]);
      },
      fuel);
}

template <class T>
Enumerator<T> empty_enumerator(std::uint64_t fuel = kUnbounded) {
  return Enumerator<T>([]() { return StepResult<T>::finish(); }, fuel);
}

// Anti-diagonal dovetailing of a parametric search. Cell (i, s) is visited on
// diagonal d = i + s, smallest i first. search(i, s) returning a payload
// means "i succeeds at stage s"; each i is emitted at most once, at its first
// successful cell. Cells of already-emitted indices are skipped for free.
template <class P>
Enumerator<std::pair<std::uint64_t, P>> dovetail_emit(
    std::function<std::optional<P>(std::uint64_t, std::uint64_t)> search, std::uint64_t fuel) {
  struct State {
    std::uint64_t d = 0;
    std::uint64_t i = 0;
    std::set<std::uint64_t> emitted;
  };
  auto st = std::make_shared<State>();
  using Item = std::pair<std::uint64_t, P>;
  return Enumerator<Item>(
      [st, search = std::move(search)]() -> StepResult<Item> {
        for (;;) {
          if (st->i > st->d) {
            ++st->d;
            st->i = 0;
          }
          std::uint64_t i = st->i++;
          if (st->emitted.count(i)) continue;
          std::uint64_t s = st->d - i;
          auto found = search(i, s);
          if (found) {
            st->emitted.insert(i);
            return StepResult<Item>::emit(Item{i, std::move(*found)});
          }
          return StepResult<Item>::idle();
        }
      },
      fuel);
}

inline Enumerator<std::uint64_t> dovetail(std::function<bool(std::uint64_t, std::uint64_t)> search,
                                          std::uint64_t fuel) {
  auto inner = std::make_shared<Enumerator<std::pair<std::uint64_t, bool>>>(dovetail_emit<bool>(
      [search = std::move(search)](std::uint64_t i, std::uint64_t s) -> std::optional<bool> {
        if (search(i, s)) return true;
        return std::nullopt;
      },
      kUnbounded));
  return Enumerator<std::uint64_t>(
      [inner]() -> StepResult<std::uint64_t> {
        auto r = inner->step_once();
        if (r.item) return StepResult<std::uint64_t>::emit(r.item->first);
        return StepResult<std::uint64_t>::idle();
      },
      fuel);
}

}  // namespace dprm
