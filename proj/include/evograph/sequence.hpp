#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evograph/rng.hpp"

namespace evograph {

/**
 * Declarative integer sequence (X_t)-style driver: constant, uniform integer
 * range, finite pmf (integer weights), or a scripted list. Every draw is
 * checked against the declared [min,max] envelope.
 */
class SequenceSpec {
 public:
  enum class Kind : std::uint8_t { Constant, UniformInt, Pmf, Scripted };

  static SequenceSpec constant(std::int64_t c);
  static SequenceSpec uniform_int(std::int64_t lo, std::int64_t hi);
  static SequenceSpec pmf(std::vector<std::int64_t> values, std::vector<std::uint64_t> weights);
  static SequenceSpec scripted(std::vector<std::int64_t> values, bool cycle);

  Kind kind() const { return kind_; }
  std::int64_t min() const { return min_; }
  std::int64_t max() const { return max_; }

  /// Next value; scripted draws consume no randomness.
  std::int64_t draw(RngStream& rng);

  /// Restart a scripted cursor (no effect on other kinds).
  void reset() { cursor_ = 0; }

  nlohmann::json to_json() const;
  static SequenceSpec from_json(const nlohmann::json& j);

 private:
  SequenceSpec() = default;

  Kind kind_ = Kind::Constant;
  std::int64_t min_ = 0, max_ = 0;
  std::int64_t const_ = 0;
  std::int64_t lo_ = 0, hi_ = 0;
  std::vector<std::int64_t> values_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t weight_total_ = 0;
  bool cycle_ = false;
  std::size_t cursor_ = 0;
};

}  // namespace evograph
