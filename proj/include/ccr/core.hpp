#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccr {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// A walk in a graph: consecutive entries are adjacent (or equal at rest).
using Path = std::vector<Vertex>;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a query would see past the materialized window of an
// implicitly-infinite graph and boundary clamping was not requested.
struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuleViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

/// Collects named invariant-assertion failures. Strategies and the
/// transfer machinery report through this instead of silently falling
/// back; a non-clean log downgrades the match verdict.
class InvariantLog {
 public:
  struct Entry {
    std::string name;
    std::string detail;
    long count = 0;
  };

  void fail(const std::string& name, const std::string& detail) {
    for (auto& e : entries_) {
      if (e.name == name) {
        ++e.count;
        return;
      }
    }
    entries_.push_back({name, detail, 1});
  }

  void require(bool ok, const std::string& name, const std::string& detail = "") {
    if (!ok) fail(name, detail);
  }

  bool clean() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  long total() const {
    long n = 0;
    for (const auto& e : entries_) n += e.count;
    return n;
  }

  std::string summary() const {
    std::ostringstream os;
    for (const auto& e : entries_) os << e.name << " x" << e.count << " (" << e.detail << ")\n";
    return os.str();
  }

 private:
  std::vector<Entry> entries_;
};

// splitmix64, used wherever a seeded deterministic stream is needed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

/// Deterministic RNG with a tiny state, for seeded generators.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace ccr
