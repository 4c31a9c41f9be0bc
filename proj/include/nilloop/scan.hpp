#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "nilloop/elemset.hpp"
#include "nilloop/kernels.hpp"

namespace nilloop {

// Shared evaluation budget. Scans reserve their full cost up front, so a
// scan either runs to completion or is skipped whole; partial results never
// depend on thread scheduling.
struct Budget {
  uint64_t remaining;
  bool exhausted = false;

  explicit Budget(uint64_t total) : remaining(total) {}
  bool try_spend(uint64_t cost) {
    if (cost > remaining) {
      exhausted = true;
      return false;
    }
    remaining -= cost;
    return true;
  }
};

// Builds a kern::Program from term-shaped pieces. Fixed slots are bound by
// the scan drivers in slot order (slot i = outer variable i); constants and
// lane leaves are independent of the odometer.
class ProgramBuilder {
public:
  explicit ProgramBuilder(int n_outer_slots) : nslots_(n_outer_slots) {
    prog_.fixed.resize(n_outer_slots, {0, 0});
    for (int i = 0; i < n_outer_slots; ++i) {
      prog_.fixed[i].first = alloc();
    }
  }

  int16_t slot_reg(int slot) const { return prog_.fixed[slot].first; }
  int16_t constant(int32_t value) {
    int16_t r = alloc();
    prog_.fixed.emplace_back(r, value);
    return r;
  }
  int16_t lane() {
    if (lane_reg_ < 0) {
      lane_reg_ = alloc();
      prog_.lane_regs.push_back(lane_reg_);
    }
    return lane_reg_;
  }
  int16_t op(uint8_t o, int16_t a, int16_t b) {
    int16_t r = alloc();
    prog_.code.push_back({o, r, a, b});
    return r;
  }
  kern::Program finish(int16_t out) {
    prog_.out = out;
    return prog_;
  }

private:
  int16_t alloc() {
    prog_.nregs++;
    return static_cast<int16_t>(prog_.nregs - 1);
  }
  kern::Program prog_;
  int nslots_;
  int16_t lane_reg_ = -1;
};

namespace scan_detail {

inline void bind(kern::Program& p, const std::vector<int32_t>& odo,
                 const std::vector<const std::vector<int32_t>*>& domains) {
  for (size_t i = 0; i < odo.size(); ++i)
    p.fixed[i].second = (*domains[i])[odo[i]];
}

inline bool advance(std::vector<int32_t>& odo,
                    const std::vector<const std::vector<int32_t>*>& domains) {
  for (size_t i = odo.size(); i-- > 0;) {
    if (++odo[i] < static_cast<int32_t>(domains[i]->size())) return true;
    odo[i] = 0;
  }
  return false;
}

} // namespace scan_detail

// Runs `prog` over the full cartesian product of `outer` domains with the
// lane leaf sweeping `lanes`, and reports the lexicographically first point
// whose output is nonzero (nonidentity). Returns the outer values plus lane
// value. Deterministic for any worker count.
struct ScanHit {
  std::vector<int32_t> outer;
  int32_t lane;
  int32_t value;
};

inline std::optional<ScanHit> scan_first_nonzero(
    const kern::Tables& t, kern::Program prog,
    const std::vector<const std::vector<int32_t>*>& outer,
    const std::vector<int32_t>& lanes, int workers = 1) {
  const kern::Backend& be = kern::active_backend();
  uint64_t outer_total = 1;
  for (auto* d : outer) outer_total *= d->size();

  auto run_range = [&](uint64_t lo, uint64_t hi,
                       kern::Program p) -> std::optional<ScanHit> {
    std::vector<int32_t> odo(outer.size(), 0);
    // position the odometer at flat index lo
    uint64_t rest = lo;
    for (size_t i = outer.size(); i-- > 0;) {
      odo[i] = static_cast<int32_t>(rest % outer[i]->size());
      rest /= outer[i]->size();
    }
    std::vector<int32_t> out(lanes.size());
    for (uint64_t flat = lo; flat < hi; ++flat) {
      scan_detail::bind(p, odo, outer);
      be.eval_batch(t, p, lanes.data(), static_cast<int>(lanes.size()), out.data());
      for (size_t j = 0; j < lanes.size(); ++j) {
        if (out[j] != 0) {
          std::vector<int32_t> vals(outer.size());
          for (size_t i = 0; i < outer.size(); ++i) vals[i] = (*outer[i])[odo[i]];
          return ScanHit{vals, lanes[j], out[j]};
        }
      }
      scan_detail::advance(odo, outer);
    }
    return std::nullopt;
  };

  if (workers <= 1 || outer_total < 64) return run_range(0, outer_total, prog);

  const int w = std::min<uint64_t>(workers, outer_total);
  std::vector<std::optional<ScanHit>> hits(w);
  std::vector<std::thread> pool;
  for (int k = 0; k < w; ++k) {
    uint64_t lo = outer_total * k / w, hi = outer_total * (k + 1) / w;
    pool.emplace_back([&, lo, hi, k] { hits[k] = run_range(lo, hi, prog); });
  }
  for (auto& th : pool) th.join();
  for (auto& h : hits)
    if (h) return h; // chunks are in ascending flat order
  return std::nullopt;
}

// Runs `prog` over the cartesian product and ORs every output value into
// `found`. Optionally records, per output value, the first (odometer, lane)
// pair that produced it.
struct ValueWitness {
  std::vector<int32_t> outer;
  int32_t lane;
};

inline void scan_collect_values(
    const kern::Tables& t, kern::Program prog,
    const std::vector<const std::vector<int32_t>*>& outer,
    const std::vector<int32_t>& lanes, ElemSet& found,
    std::vector<std::optional<ValueWitness>>* witnesses = nullptr,
    int workers = 1) {
  const kern::Backend& be = kern::active_backend();
  uint64_t outer_total = 1;
  for (auto* d : outer) outer_total *= d->size();

  struct Partial {
    ElemSet mask;
    std::vector<std::optional<ValueWitness>> wit;
  };

  auto run_range = [&](uint64_t lo, uint64_t hi, kern::Program p) -> Partial {
    Partial part;
    part.mask = ElemSet(t.n);
    if (witnesses) part.wit.resize(t.n);
    std::vector<int32_t> odo(outer.size(), 0);
    uint64_t rest = lo;
    for (size_t i = outer.size(); i-- > 0;) {
      odo[i] = static_cast<int32_t>(rest % outer[i]->size());
      rest /= outer[i]->size();
    }
    std::vector<int32_t> out(lanes.size());
    for (uint64_t flat = lo; flat < hi; ++flat) {
      scan_detail::bind(p, odo, outer);
      be.eval_batch(t, p, lanes.data(), static_cast<int>(lanes.size()), out.data());
      for (size_t j = 0; j < lanes.size(); ++j) {
        int32_t v = out[j];
        if (!part.mask.test(v)) {
          part.mask.set(v);
          if (witnesses) {
            std::vector<int32_t> vals(outer.size());
            for (size_t i = 0; i < outer.size(); ++i) vals[i] = (*outer[i])[odo[i]];
            part.wit[v] = ValueWitness{vals, lanes[j]};
          }
        }
      }
      scan_detail::advance(odo, outer);
    }
    return part;
  };

  if (workers <= 1 || outer_total < 64) {
    Partial part = run_range(0, outer_total, prog);
    found |= part.mask;
    if (witnesses) {
      for (int v = 0; v < t.n; ++v)
        if (part.wit[v] && !(*witnesses)[v]) (*witnesses)[v] = part.wit[v];
    }
    return;
  }

  const int w = std::min<uint64_t>(workers, outer_total);
  std::vector<Partial> parts(w);
  std::vector<std::thread> pool;
  for (int k = 0; k < w; ++k) {
    uint64_t lo = outer_total * k / w, hi = outer_total * (k + 1) / w;
    pool.emplace_back([&, lo, hi, k] { parts[k] = run_range(lo, hi, prog); });
  }
  for (auto& th : pool) th.join();
  for (int k = 0; k < w; ++k) {
    found |= parts[k].mask;
    if (witnesses) {
      // chunk order = ascending flat order, so first chunk wins
      for (int v = 0; v < t.n; ++v)
        if (parts[k].wit[v] && !(*witnesses)[v]) (*witnesses)[v] = parts[k].wit[v];
    }
  }
}

} // namespace nilloop
