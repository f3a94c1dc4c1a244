#pragma once

// Run configuration: a key=value file, overridden by command-line flags.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "altsum/errors.hpp"
#include "altsum/euler_product.hpp"
#include "altsum/factor_sieve.hpp"

namespace altsum {

enum class OutputFormat { plain, csv, json };

inline constexpr std::uint64_t kMaxSieveCap = 1'000'000'000;  // ~4 GB of SPF words
inline constexpr std::uint64_t kMaxPrimeLimit = 100'000'000;

struct Config {
  std::uint64_t sieve_cap = default_sieve_cap();
  std::uint64_t prime_limit = kDefaultPrimeLimit;
  unsigned precision_bits = 64;
  unsigned grid_lo = 10;  // grid is 2^grid_lo .. 2^grid_hi
  unsigned grid_hi = 20;
  OutputFormat format = OutputFormat::plain;
  unsigned jobs = 1;
};

inline std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "plain") return OutputFormat::plain;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  return std::nullopt;
}

/// Throws DomainError on out-of-range fields.
inline void validate(const Config& c) {
  if (c.sieve_cap < 2 || c.sieve_cap > kMaxSieveCap)
    throw DomainError("config: sieve_cap must lie in [2, " + std::to_string(kMaxSieveCap) + "]");
  if (c.prime_limit < 1000 || c.prime_limit > kMaxPrimeLimit)
    throw DomainError("config: prime_limit must lie in [1000, " + std::to_string(kMaxPrimeLimit) + "]");
  if (c.precision_bits < 64) throw DomainError("config: precision_bits must be at least 64");
  if (c.precision_bits > 64)
    throw DomainError("config: precision_bits above 64 is not supported (reals are 64-bit-mantissa long double)");
  if (c.grid_lo < 1 || c.grid_lo > c.grid_hi || c.grid_hi > 40) throw DomainError("config: bad grid range");
  if (c.jobs < 1) throw DomainError("config: jobs must be positive");
}

namespace detail {

inline std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  std::uint64_t n = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || ec != std::errc() || end != v.data() + v.size()) throw DomainError("config: " + key + " expects an unsigned integer, got '" + v + "'");
  return n;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Applies one key=value setting. Grid is written "lo:hi" (powers of two).
inline void apply_setting(Config& c, const std::string& key, const std::string& value) {
  if (key == "sieve_cap") c.sieve_cap = detail::parse_uint(key, value);
  else if (key == "prime_limit") c.prime_limit = detail::parse_uint(key, value);
  else if (key == "precision_bits") c.precision_bits = static_cast<unsigned>(detail::parse_uint(key, value));
  else if (key == "jobs") c.jobs = static_cast<unsigned>(detail::parse_uint(key, value));
  else if (key == "grid") {
    const auto colon = value.find(':');
    if (colon == std::string::npos) throw DomainError("config: grid expects lo:hi");
    c.grid_lo = static_cast<unsigned>(detail::parse_uint(key, value.substr(0, colon)));
    c.grid_hi = static_cast<unsigned>(detail::parse_uint(key, value.substr(colon + 1)));
  } else if (key == "format") {
    auto f = parse_format(value);
    if (!f) throw DomainError("config: format must be plain, csv or json");
    c.format = *f;
  } else {
    throw DomainError("config: unknown key '" + key + "'");
  }
}

/// Lines are key=value; blank lines and lines starting with '#' are skipped.
inline Config parse_config(std::istream& in, Config c = {}) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(c, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  return c;
}

inline Config load_config(const std::string& path, Config c = {}) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open " + path);
  return parse_config(in, c);
}

}  // namespace altsum
