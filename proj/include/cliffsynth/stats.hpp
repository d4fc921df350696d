// Copyright 2026 The cliffsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cliffsynth/a2a.hpp"
#include "cliffsynth/cz_space.hpp"
#include "cliffsynth/gf2.hpp"
#include "cliffsynth/hfree.hpp"
#include "cliffsynth/io.hpp"

namespace cliffsynth {

inline HadamardFreeTarget sample_hfree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_hfree: n must be positive");
  Rng rng(seed);
  return random_hfree_target(n, rng);
}

inline BitMatrix sample_linear(int n, std::uint64_t seed) {
  return random_invertible(static_cast<std::size_t>(n), seed);
}

using LinearSynthesizer = std::function<Circuit(const BitMatrix&)>;

class SynthRegistry {
 public:
  static SynthRegistry with_defaults() {
    SynthRegistry r;
    r.add("pmh", [](const BitMatrix& m) { return pmh_synth(m); });
    r.add("gauss", [](const BitMatrix& m) { return gauss_synth(m); });
    return r;
  }

  void add(const std::string& name, LinearSynthesizer fn) { table_[name] = std::move(fn); }
  bool has(const std::string& name) const { return table_.count(name) > 0; }
  const LinearSynthesizer& get(const std::string& name) const {
    auto it = table_.find(name);
    if (it == table_.end()) throw std::invalid_argument("unknown synthesizer '" + name + "'");
    return it->second;
  }
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : table_) out.push_back(k);
    return out;
  }

 private:
  std::map<std::string, LinearSynthesizer> table_;
};

struct StatsConfig {
  std::string synthesizer = "pmh";
  int n_min = 4;
  int n_max = 4;
  int samples = 1;
  std::uint64_t seed = 1;
  bool verify_all = false;
  int threads = 1;
};

struct SampleStats {
  int n = 0;
  int index = 0;
  std::size_t missing = 0;   // dim of the complement before insertion
  std::size_t inserted = 0;  // CZ gates added
  int depth_before = 0;
  int depth_after = 0;
  std::size_t gates_before = 0;
  std::size_t gates_after = 0;
  bool verified = false;  // oracle check ran (and passed)
};

struct NStats {
  int n = 0;
  int samples = 0;
  double full_basis_fraction = 0;
  double mean_missing_fraction = 0;
  double depth_increase_fraction = 0;
  double mean_depth_increase = 0;
  double mean_gates_before = 0;
  double mean_gates_after = 0;
  double mean_inserted = 0;
};

struct StatsReport {
  std::string synthesizer;
  std::uint64_t seed = 0;
  std::vector<NStats> records;
  std::vector<SampleStats> samples;
};

inline SampleStats run_one_sample(const LinearSynthesizer& synth, int n, int index,
                                  std::uint64_t seed, bool verify) {
  Rng rng = Rng(seed).split(static_cast<std::uint64_t>(index));
  BitMatrix m = random_invertible(static_cast<std::size_t>(n), rng);
  Circuit c = synth(m);
  auto ins = insert_cz_detailed(c);
  SampleStats s;
  s.n = n;
  s.index = index;
  s.missing = ins.missing_before;
  s.inserted = ins.inserted;
  s.depth_before = ins.depth_before;
  s.depth_after = ins.depth_after;
  s.gates_before = c.size();
  s.gates_after = ins.circuit.size();
  if (verify) {
    if (!(hfree_canonical(c).m == m)) throw std::runtime_error("stats: synthesizer output does not implement its matrix");
    if (!(hfree_canonical(ins.circuit).m == m)) throw std::runtime_error("stats: CZ insertion changed the linear part");
    if (span_dim(ins.circuit) != num_pairs(n)) throw std::runtime_error("stats: CZ space not spanned after insertion");
    s.verified = true;
  }
  return s;
}

inline StatsReport run_insertcz_stats(const StatsConfig& cfg,
                                      const SynthRegistry& registry = SynthRegistry::with_defaults()) {
  if (cfg.samples < 1) throw std::invalid_argument("stats: samples must be >= 1");
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw std::invalid_argument("stats: bad n range");
  const auto& synth = registry.get(cfg.synthesizer);
  StatsReport rep;
  rep.synthesizer = cfg.synthesizer;
  rep.seed = cfg.seed;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<SampleStats> batch(static_cast<std::size_t>(cfg.samples));
    auto work = [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i) {
        bool verify = cfg.verify_all || i % 10 == 0;
        batch[static_cast<std::size_t>(i)] = run_one_sample(synth, n, i, cfg.seed, verify);
      }
    };
    int threads = std::max(1, std::min(cfg.threads, cfg.samples));
    if (threads == 1) {
      work(0, cfg.samples);
    } else {
      std::vector<std::thread> pool;
      int chunk = (cfg.samples + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        int lo = t * chunk;
        int hi = std::min(cfg.samples, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    NStats agg;
    agg.n = n;
    agg.samples = cfg.samples;
    const double pairs = static_cast<double>(num_pairs(n));
    for (const auto& s : batch) {
      agg.full_basis_fraction += s.missing == 0;
      agg.mean_missing_fraction += static_cast<double>(s.missing) / pairs;
      agg.depth_increase_fraction += s.depth_after > s.depth_before;
      agg.mean_depth_increase += s.depth_after - s.depth_before;
      agg.mean_gates_before += static_cast<double>(s.gates_before);
      agg.mean_gates_after += static_cast<double>(s.gates_after);
      agg.mean_inserted += static_cast<double>(s.inserted);
      rep.samples.push_back(s);
    }
    const double k = cfg.samples;
    agg.full_basis_fraction /= k;
    agg.mean_missing_fraction /= k;
    agg.depth_increase_fraction /= k;
    agg.mean_depth_increase /= k;
    agg.mean_gates_before /= k;
    agg.mean_gates_after /= k;
    agg.mean_inserted /= k;
    rep.records.push_back(agg);
  }
  return rep;
}

namespace detail {
inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}
}  // namespace detail

inline const char* kStatsCsvHeader =
    "n,samples,full_basis_fraction,mean_missing_fraction,depth_increase_fraction,"
    "mean_depth_increase,mean_gates_before,mean_gates_after,mean_inserted";

inline std::string stats_to_csv(const StatsReport& rep) {
  std::string out = std::string(kStatsCsvHeader) + "\n";
  for (const auto& r : rep.records) {
    out += std::to_string(r.n) + "," + std::to_string(r.samples) + "," + detail::fixed6(r.full_basis_fraction) +
           "," + detail::fixed6(r.mean_missing_fraction) + "," + detail::fixed6(r.depth_increase_fraction) + "," +
           detail::fixed6(r.mean_depth_increase) + "," + detail::fixed6(r.mean_gates_before) + "," +
           detail::fixed6(r.mean_gates_after) + "," + detail::fixed6(r.mean_inserted) + "\n";
  }
  return out;
}

// Numbers go through the same fixed formatting as the CSV so output is
// byte-stable.
inline std::string stats_to_json(const StatsReport& rep, bool detail_samples) {
  json j;
  j["synthesizer"] = rep.synthesizer;
  j["seed"] = rep.seed;
  json recs = json::array();
  for (const auto& r : rep.records) {
    recs.push_back({{"n", r.n},
                    {"samples", r.samples},
                    {"full_basis_fraction", detail::fixed6(r.full_basis_fraction)},
                    {"mean_missing_fraction", detail::fixed6(r.mean_missing_fraction)},
                    {"depth_increase_fraction", detail::fixed6(r.depth_increase_fraction)},
                    {"mean_depth_increase", detail::fixed6(r.mean_depth_increase)},
                    {"mean_gates_before", detail::fixed6(r.mean_gates_before)},
                    {"mean_gates_after", detail::fixed6(r.mean_gates_after)},
                    {"mean_inserted", detail::fixed6(r.mean_inserted)}});
  }
  j["records"] = recs;
  if (detail_samples) {
    json ss = json::array();
    for (const auto& s : rep.samples) {
      ss.push_back({{"n", s.n},
                    {"index", s.index},
                    {"missing", s.missing},
                    {"inserted", s.inserted},
                    {"depth_before", s.depth_before},
                    {"depth_after", s.depth_after},
                    {"gates_before", s.gates_before},
                    {"gates_after", s.gates_after},
                    {"verified", s.verified}});
    }
    j["samples"] = ss;
  }
  return j.dump(2) + "\n";
}

}  // namespace cliffsynth
