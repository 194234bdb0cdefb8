#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xling {

// Two-letter lowercase language tag ("en", "zh", ...). A pipeline run
// handles exactly two distinct languages, addressed by index 0/1.
class LanguageId {
 public:
  LanguageId() = default;
  explicit LanguageId(std::string_view code);

  const std::string& code() const { return code_; }
  bool operator==(const LanguageId&) const = default;

 private:
  std::string code_;
};

enum class SymbolKind : std::uint8_t { Word = 0, Entity = 1 };

std::string_view kind_name(SymbolKind kind);
SymbolKind parse_kind(std::string_view name);

// One of the four sampling/embedding classes of a run:
// (language index, symbol kind). Class index = lang * 2 + kind.
struct SymbolClass {
  std::uint8_t lang = 0;
  SymbolKind kind = SymbolKind::Word;

  int index() const { return lang * 2 + static_cast<int>(kind); }
  bool operator==(const SymbolClass&) const = default;
};

inline SymbolClass class_from_index(int index) {
  return SymbolClass{static_cast<std::uint8_t>(index / 2),
                     static_cast<SymbolKind>(index % 2)};
}

constexpr int kNumClasses = 4;

// A symbol id qualified by its class.
struct SymbolRef {
  SymbolClass cls;
  std::int32_t id = -1;

  bool operator==(const SymbolRef&) const = default;
};

// Structurally invalid input file; carries the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::int64_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        path_(path),
        line_(line) {}

  const std::string& path() const { return path_; }
  std::int64_t line() const { return line_; }

 private:
  std::string path_;
  std::int64_t line_;
};

// Well-formed input that violates a contract (missing file, empty
// vocabulary, invalid config field, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite value encountered during numeric work.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic 64-bit generator (splitmix64). Every stochastic choice in
// the toolkit draws from one of these so equal seeds give equal runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream, e.g. per epoch or per worker.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng rng(seed ^ (0x632be59bd9b4e019ULL * (salt + 1)));
  return rng.next();
}

// FNV-1a 64-bit, used for input digests in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace xling
