#pragma once

/*
 * Small shared utilities: error taxonomy, hashing, hex and byte helpers.
 *
 * Every error that can escape a library call derives from Error and carries
 * an exit class so the CLI can map it without string matching.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace msr2io {

using Bytes = std::vector<std::uint8_t>;

// CLI exit classes. Verdict failures (exit 1) are not errors; they are
// ordinary results.
enum class ExitClass : int {
  Ok = 0,
  Usage = 2,
  ParseOrValidate = 3,
  Budget = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitClass cls, const std::string& what)
      : std::runtime_error(what), cls_(cls) {}
  ExitClass exit_class() const { return cls_; }

 private:
  ExitClass cls_;
};

// An exploration or enumeration exceeded its configured budget. The bound is
// too generous for desk scale; the caller should tighten it.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ExitClass::Budget, what) {}
};

// Rewriting did not reach a normal form within the step budget.
class NonTerminatingTheory : public Error {
 public:
  explicit NonTerminatingTheory(const std::string& what)
      : Error(ExitClass::ParseOrValidate, what) {}
};

// An equation falls outside the supported theory fragment.
class UnsupportedEquation : public Error {
 public:
  explicit UnsupportedEquation(const std::string& what)
      : Error(ExitClass::ParseOrValidate, what) {}
};

// A symbol has no interpretation in the bytestring algebra.
class UnmappedSymbol : public Error {
 public:
  explicit UnmappedSymbol(const std::string& what)
      : Error(ExitClass::ParseOrValidate, what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& msg)
      : Error(ExitClass::ParseOrValidate,
              "syntax error at " + std::to_string(line) + ":" +
                  std::to_string(col) + ": " + msg),
        line_(line),
        col_(col),
        msg_(msg) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& message() const { return msg_; }

 private:
  int line_, col_;
  std::string msg_;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  // boost-style mix
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::string to_hex(const Bytes& b) {
  static const char* d = "0123456789abcdef";
  std::string out;
  out.reserve(b.size() * 2);
  for (auto x : b) {
    out.push_back(d[x >> 4]);
    out.push_back(d[x & 0xf]);
  }
  return out;
}

inline Bytes from_hex(const std::string& s) {
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (s.size() % 2 != 0)
    throw Error(ExitClass::ParseOrValidate, "odd-length hex string: " + s);
  Bytes out;
  out.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    int hi = nib(s[i]), lo = nib(s[i + 1]);
    if (hi < 0 || lo < 0)
      throw Error(ExitClass::ParseOrValidate, "bad hex string: " + s);
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

inline void append_be(Bytes& out, std::uint64_t v, int width) {
  for (int i = width - 1; i >= 0; --i)
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

}  // namespace msr2io
