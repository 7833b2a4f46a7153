// Copyright 2026 The optsort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Problem data for 1|r_j|sum w_j: n jobs, each with an integer release time
// r_i >= 0 and an integer processing time p_i >= 1. Job ids are 1..n.
//
// Instance file format (UTF-8 text):
//
//   # optional comment lines
//   n
//   r_1 p_1
//   ...
//   r_n p_n
//
// Canonical serialization emits no comments and uses LF line endings.

#ifndef OPTSORT_INSTANCE_HPP_
#define OPTSORT_INSTANCE_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace optsort {

using Time = std::int64_t;
// Job ids are 1-based, as are sequence positions.
using JobId = int;
using Position = int;

class Instance {
 public:
  Instance(std::vector<Time> release, std::vector<Time> processing)
      : release_(std::move(release)), processing_(std::move(processing)) {
    if (release_.empty()) {
      throw std::invalid_argument("instance must contain at least one job");
    }
    if (release_.size() != processing_.size()) {
      throw std::invalid_argument("release/processing size mismatch");
    }
    for (std::size_t i = 0; i < release_.size(); ++i) {
      if (release_[i] < 0) {
        throw std::invalid_argument("release time must be >= 0 (job " +
                                    std::to_string(i + 1) + ")");
      }
      if (processing_[i] < 1) {
        throw std::invalid_argument("processing time must be >= 1 (job " +
                                    std::to_string(i + 1) + ")");
      }
    }
  }

  int size() const { return static_cast<int>(release_.size()); }
  Time release(JobId job) const { return release_[job - 1]; }
  Time processing(JobId job) const { return processing_[job - 1]; }
  const std::vector<Time>& releases() const { return release_; }
  const std::vector<Time>& processings() const { return processing_; }

  Time total_processing() const {
    return std::accumulate(processing_.begin(), processing_.end(), Time{0});
  }
  Time max_release() const {
    return *std::max_element(release_.begin(), release_.end());
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Time> release_;
  std::vector<Time> processing_;
};

// A processing order. order[k-1] is the job at position k.
struct Sequence {
  std::vector<JobId> order;
  int iteration = 0;

  int size() const { return static_cast<int>(order.size()); }
  JobId at(Position k) const { return order[k - 1]; }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

// True iff `order` is a permutation of 1..n.
inline bool is_permutation_of(std::span<const JobId> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (JobId j : order) {
    if (j < 1 || j > n || seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

inline void check_sequence(const Instance& inst, std::span<const JobId> order) {
  if (!is_permutation_of(order, inst.size())) {
    throw std::invalid_argument("sequence is not a permutation of the jobs");
  }
}

// ---------------------------------------------------------------------------
// Text I/O

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedLine,
    kNonInteger,
    kCountMismatch,
    kBadProcessing,
    kBadRelease,
  };

  ParseError(Kind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

namespace internal {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

inline Time parse_int(std::string_view token, int line) {
  Time value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(ParseError::Kind::kNonInteger, line,
                     "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace internal

inline Instance parse_instance(std::string_view text) {
  int line_no = 0;
  long long expected = -1;
  int header_line = 0;
  std::vector<Time> release;
  std::vector<Time> processing;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = internal::split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    if (expected < 0) {
      if (tokens.size() != 1) {
        throw ParseError(ParseError::Kind::kMalformedLine, line_no,
                         "expected the job count");
      }
      expected = internal::parse_int(tokens[0], line_no);
      header_line = line_no;
      if (expected < 1) {
        throw ParseError(ParseError::Kind::kCountMismatch, line_no,
                         "job count must be >= 1");
      }
    } else {
      if (static_cast<long long>(release.size()) == expected) {
        throw ParseError(ParseError::Kind::kCountMismatch, line_no,
                         "more job lines than the declared count " +
                             std::to_string(expected));
      }
      if (tokens.size() != 2) {
        throw ParseError(ParseError::Kind::kMalformedLine, line_no,
                         "expected 'release processing'");
      }
      Time r = internal::parse_int(tokens[0], line_no);
      Time p = internal::parse_int(tokens[1], line_no);
      if (r < 0) {
        throw ParseError(ParseError::Kind::kBadRelease, line_no,
                         "release time must be >= 0");
      }
      if (p < 1) {
        throw ParseError(ParseError::Kind::kBadProcessing, line_no,
                         "processing time must be >= 1");
      }
      release.push_back(r);
      processing.push_back(p);
    }
    if (nl == text.size()) break;
  }

  if (expected < 0) {
    throw ParseError(ParseError::Kind::kMalformedLine, line_no,
                     "missing job count");
  }
  if (static_cast<long long>(release.size()) != expected) {
    throw ParseError(ParseError::Kind::kCountMismatch, line_no,
                     "declared " + std::to_string(expected) +
                         " jobs on line " + std::to_string(header_line) +
                         " but found " + std::to_string(release.size()));
  }
  return Instance(std::move(release), std::move(processing));
}

inline std::string serialize_instance(const Instance& inst) {
  std::string out = std::to_string(inst.size()) + "\n";
  for (JobId j = 1; j <= inst.size(); ++j) {
    out += std::to_string(inst.release(j));
    out += ' ';
    out += std::to_string(inst.processing(j));
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random generation

// SplitMix64 (Steele, Lea, Flood 2014). The exact output stream is part of
// the instance-generation contract: a given (n, seed) must produce the same
// instance everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi] as lo + next() mod (hi - lo + 1).
  Time uniform(Time lo, Time hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<Time>(next() % span);
  }

 private:
  std::uint64_t state_;
};

inline constexpr Time kMaxGeneratedRelease = 200;
inline constexpr Time kMaxGeneratedProcessing = 50;

// r_i ~ U{0..200}, p_i ~ U{1..50}; draws alternate r_1, p_1, r_2, p_2, ...
inline Instance generate_instance(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Time> release(n);
  std::vector<Time> processing(n);
  for (int i = 0; i < n; ++i) {
    release[i] = rng.uniform(0, kMaxGeneratedRelease);
    processing[i] = rng.uniform(1, kMaxGeneratedProcessing);
  }
  return Instance(std::move(release), std::move(processing));
}

// Jobs in non-decreasing release order; ties by processing time, then id.
inline Sequence initial_sequence(const Instance& inst) {
  Sequence seq;
  seq.order.resize(inst.size());
  std::iota(seq.order.begin(), seq.order.end(), 1);
  std::sort(seq.order.begin(), seq.order.end(), [&](JobId a, JobId b) {
    if (inst.release(a) != inst.release(b)) {
      return inst.release(a) < inst.release(b);
    }
    if (inst.processing(a) != inst.processing(b)) {
      return inst.processing(a) < inst.processing(b);
    }
    return a < b;
  });
  return seq;
}

}  // namespace optsort

#endif  // OPTSORT_INSTANCE_HPP_
