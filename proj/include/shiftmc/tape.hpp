#ifndef SHIFTMC_TAPE_HPP
#define SHIFTMC_TAPE_HPP

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "shiftmc/errors.hpp"
#include "shiftmc/rng.hpp"

namespace shiftmc {

struct TapeStats {
  std::uint64_t cells_generated = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
};

class TapeCursor;

/// The lazily materialized uniform sequence U_1, U_2, ... of one seeded
/// generator, with a per-cell memo map caching transforms that depend only on
/// that cell's value, and a sliding retention window.
///
/// Cell indices are 1-based and permanent: cell i always holds the i-th
/// generator output, regardless of access order or window movement.
/// Single-writer: one estimator run drives a tape at a time.
class Tape {
 public:
  explicit Tape(std::uint64_t seed)
      : seed_(seed), gen_(seed_generator(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t window_start() const noexcept { return window_start_; }
  /// Highest materialized index (0 on a fresh tape).
  std::uint64_t high_index() const noexcept { return next_index_ - 1; }
  const TapeStats& stats() const noexcept { return stats_; }

  bool memo_enabled() const noexcept { return memo_enabled_; }
  /// With memoization off, memoized_transform recomputes on every call and
  /// counts a miss each time; results are bit-identical either way.
  void set_memo_enabled(bool enabled) noexcept { memo_enabled_ = enabled; }

  double cell_value(std::uint64_t index) { return materialize(index).value; }

  /// First call for (index, transform_id) computes f(value), stores and
  /// returns it (a miss); later calls return the stored bits (a hit).
  /// A given transform_id must always be paired with the same pure f.
  template <class F>
  double memoized_transform(std::uint64_t index, int transform_id, F&& f) {
    Cell& cell = materialize(index);
    if (!memo_enabled_) {
      ++stats_.memo_misses;
      return f(cell.value);
    }
    for (const auto& [id, cached] : cell.memos) {
      if (id == transform_id) {
        ++stats_.memo_hits;
        return cached;
      }
    }
    const double v = f(cell.value);
    cell.memos.emplace_back(transform_id, v);
    ++stats_.memo_misses;
    return v;
  }

  /// Discards cells below new_start together with their memos. new_start may
  /// not move backwards.
  void advance_window(std::uint64_t new_start) {
    if (new_start < window_start_) {
      throw ContractViolation("advance_window: window may not move backwards");
    }
    while (!cells_.empty() && front_index_ < new_start) {
      cells_.pop_front();
      ++front_index_;
    }
    window_start_ = new_start;
  }

  TapeCursor cursor(std::uint64_t start);

 private:
  struct Cell {
    double value;
    std::vector<std::pair<int, double>> memos;
  };

  Cell& materialize(std::uint64_t index) {
    if (index < window_start_) {
      throw ReclaimedCellError("tape cell " + std::to_string(index) +
                               " was reclaimed (window starts at " +
                               std::to_string(window_start_) + ")");
    }
    while (next_index_ <= index) {
      const UniformDraw draw = next_uniform(gen_);
      gen_ = draw.next;
      ++stats_.cells_generated;
      if (next_index_ >= window_start_) {
        if (cells_.empty()) front_index_ = next_index_;
        cells_.push_back(Cell{draw.value, {}});
      }
      ++next_index_;
    }
    return cells_[index - front_index_];
  }

  std::uint64_t seed_;
  GeneratorState gen_;
  std::uint64_t window_start_ = 1;
  std::uint64_t next_index_ = 1;    // index the next generator draw receives
  std::uint64_t front_index_ = 1;   // index of cells_.front() when nonempty
  std::deque<Cell> cells_;
  bool memo_enabled_ = true;
  TapeStats stats_;
};

/// A read position for one sample evaluation. Reads advance sequentially
/// from `start`; consumed() is the number of cells read so far.
class TapeCursor {
 public:
  TapeCursor(Tape& tape, std::uint64_t start) : tape_(&tape), start_(start), position_(start) {
    if (start < tape.window_start()) {
      throw ReclaimedCellError("cursor start " + std::to_string(start) +
                               " is below the tape window");
    }
    if (start == 0) throw ContractViolation("cursor start must be >= 1");
  }

  double next() { return tape_->cell_value(position_++); }

  template <class F>
  double next_transformed(int transform_id, F&& f) {
    return tape_->memoized_transform(position_++, transform_id, std::forward<F>(f));
  }

  std::uint64_t start() const noexcept { return start_; }
  std::uint64_t position() const noexcept { return position_; }
  std::uint64_t consumed() const noexcept { return position_ - start_; }
  Tape& tape() noexcept { return *tape_; }

 private:
  Tape* tape_;
  std::uint64_t start_;
  std::uint64_t position_;
};

inline TapeCursor Tape::cursor(std::uint64_t start) { return TapeCursor(*this, start); }

}  // namespace shiftmc

#endif  // SHIFTMC_TAPE_HPP
