#pragma once

#include <cstdint>
#include <utility>

#include "ustcon/rotation_map.hpp"

namespace ustcon {

// Abstract-word accounting for the space-bounded evaluators. One word per live
// loop index, label digit, vertex register, and recursion frame slot; machine
// bytes are not what is being measured.
class WorkspaceMeter {
 public:
  void alloc(std::int64_t words) {
    live_ += words;
    if (live_ > peak_) peak_ = live_;
  }
  void release(std::int64_t words) { live_ -= words; }
  void reset() { live_ = peak_ = 0; }
  std::int64_t live() const { return live_; }
  std::int64_t peak() const { return peak_; }

 private:
  std::int64_t live_ = 0;
  std::int64_t peak_ = 0;
};

// Charges words for the lifetime of a scope. A null meter charges nothing.
class MeterCharge {
 public:
  MeterCharge(WorkspaceMeter* meter, std::int64_t words) : meter_(meter), words_(words) {
    if (meter_) meter_->alloc(words_);
  }
  ~MeterCharge() {
    if (meter_) meter_->release(words_);
  }
  MeterCharge(const MeterCharge&) = delete;
  MeterCharge& operator=(const MeterCharge&) = delete;

 private:
  WorkspaceMeter* meter_;
  std::int64_t words_;
};

// Rotation map presented as an evaluation oracle, so that deciders can walk
// graphs far too large to materialize.
class RotationOracle {
 public:
  virtual ~RotationOracle() = default;
  virtual std::uint64_t vertex_count() const = 0;
  virtual std::uint32_t degree() const = 0;
  virtual std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i,
                                                      WorkspaceMeter* meter) const = 0;
  std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i) const {
    return rot(v, i, nullptr);
  }
};

// Oracle view of a materialized table.
class TableOracle : public RotationOracle {
 public:
  explicit TableOracle(const RotationMap& map) : map_(&map) {}
  std::uint64_t vertex_count() const override { return map_->n; }
  std::uint32_t degree() const override { return map_->d; }
  std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i,
                                              WorkspaceMeter* meter) const override {
    MeterCharge result_registers(meter, 2);
    return map_->rot(v, i);
  }

 private:
  const RotationMap* map_;
};

// Square of an oracle: label (a1, a2), packed a1*d + a2, walks two inner
// steps, and the return label is (b2, b1) in the same packing, which keeps
// the map an involution. Adjacency is the inner adjacency squared.
class SquareOracle : public RotationOracle {
 public:
  explicit SquareOracle(const RotationOracle& inner) : inner_(&inner), d_(inner.degree()) {}
  std::uint64_t vertex_count() const override { return inner_->vertex_count(); }
  std::uint32_t degree() const override { return d_ * d_; }
  std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i,
                                              WorkspaceMeter* meter) const override {
    MeterCharge midpoint(meter, 2);
    const auto [w1, b1] = inner_->rot(v, i / d_, meter);
    const auto [w2, b2] = inner_->rot(w1, i % d_, meter);
    return {w2, b2 * d_ + b1};
  }

 private:
  const RotationOracle* inner_;
  std::uint32_t d_;
};

}  // namespace ustcon
