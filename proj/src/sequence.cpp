#include "evograph/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace evograph {

SequenceSpec SequenceSpec::constant(std::int64_t c) {
  SequenceSpec s;
  s.kind_ = Kind::Constant;
  s.const_ = c;
  s.min_ = s.max_ = c;
  return s;
}

SequenceSpec SequenceSpec::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform range with lo > hi");
  SequenceSpec s;
  s.kind_ = Kind::UniformInt;
  s.lo_ = lo;
  s.hi_ = hi;
  s.min_ = lo;
  s.max_ = hi;
  return s;
}

SequenceSpec SequenceSpec::pmf(std::vector<std::int64_t> values,
                               std::vector<std::uint64_t> weights) {
  if (values.empty() || values.size() != weights.size())
    throw std::invalid_argument("pmf needs matching non-empty values/weights");
  SequenceSpec s;
  s.kind_ = Kind::Pmf;
  s.values_ = std::move(values);
  s.weights_ = std::move(weights);
  s.weight_total_ = 0;
  for (std::uint64_t w : s.weights_) s.weight_total_ += w;
  if (s.weight_total_ == 0) throw std::invalid_argument("pmf weights sum to zero");
  s.min_ = s.max_ = s.values_[0];
  for (std::size_t i = 0; i < s.values_.size(); ++i) {
    if (s.weights_[i] == 0) continue;
    s.min_ = std::min(s.min_, s.values_[i]);
    s.max_ = std::max(s.max_, s.values_[i]);
  }
  return s;
}

SequenceSpec SequenceSpec::scripted(std::vector<std::int64_t> values, bool cycle) {
  if (values.empty()) throw std::invalid_argument("scripted sequence needs values");
  SequenceSpec s;
  s.kind_ = Kind::Scripted;
  s.values_ = std::move(values);
  s.cycle_ = cycle;
  s.min_ = *std::min_element(s.values_.begin(), s.values_.end());
  s.max_ = *std::max_element(s.values_.begin(), s.values_.end());
  return s;
}

std::int64_t SequenceSpec::draw(RngStream& rng) {
  std::int64_t v = 0;
  switch (kind_) {
    case Kind::Constant:
      v = const_;
      break;
    case Kind::UniformInt:
      v = lo_ + static_cast<std::int64_t>(
                    rng.below(static_cast<std::uint64_t>(hi_ - lo_) + 1));
      break;
    case Kind::Pmf: {
      std::uint64_t x = rng.below(weight_total_);
      std::size_t i = 0;
      while (x >= weights_[i]) {
        x -= weights_[i];
        ++i;
      }
      v = values_[i];
      break;
    }
    case Kind::Scripted:
      if (cursor_ >= values_.size()) {
        if (!cycle_) throw std::runtime_error("scripted sequence exhausted");
        cursor_ = 0;
      }
      v = values_[cursor_++];
      break;
  }
  if (v < min_ || v > max_) throw std::logic_error("sequence emission outside declared bounds");
  return v;
}

nlohmann::json SequenceSpec::to_json() const {
  switch (kind_) {
    case Kind::Constant:
      return nlohmann::json{{"const", const_}};
    case Kind::UniformInt:
      return nlohmann::json{{"uniform", {lo_, hi_}}};
    case Kind::Pmf:
      return nlohmann::json{{"pmf", {{"values", values_}, {"weights", weights_}}}};
    case Kind::Scripted:
      return nlohmann::json{{"list", values_}, {"cycle", cycle_}};
  }
  throw std::logic_error("bad sequence kind");
}

SequenceSpec SequenceSpec::from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return constant(j.get<std::int64_t>());
  if (!j.is_object()) throw std::invalid_argument("sequence spec must be int or object");
  if (j.contains("const")) return constant(j.at("const").get<std::int64_t>());
  if (j.contains("uniform")) {
    const auto& r = j.at("uniform");
    if (!r.is_array() || r.size() != 2)
      throw std::invalid_argument("uniform spec needs [lo, hi]");
    return uniform_int(r[0].get<std::int64_t>(), r[1].get<std::int64_t>());
  }
  if (j.contains("pmf")) {
    const auto& p = j.at("pmf");
    return pmf(p.at("values").get<std::vector<std::int64_t>>(),
               p.at("weights").get<std::vector<std::uint64_t>>());
  }
  if (j.contains("list"))
    return scripted(j.at("list").get<std::vector<std::int64_t>>(),
                    j.value("cycle", false));
  throw std::invalid_argument("unrecognized sequence spec: " + j.dump());
}

}  // namespace evograph
