#pragma once

// Exact rank of sparse integer matrices over a prime field or over Q.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tabreg {

struct FieldChoice {
  enum class Kind : std::uint8_t { Prime, Rational };

  Kind kind = Kind::Prime;
  std::uint32_t prime = 2;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldChoice prime_field(std::uint32_t p);
  static FieldChoice rationals() { return {Kind::Rational, 0}; }
  /// "2", "3", ..., or "q" for the rationals. Throws std::invalid_argument.
  static FieldChoice parse(const std::string& text);

  std::string name() const;
  friend bool operator==(const FieldChoice&, const FieldChoice&) = default;
};

/// Column-major sparse matrix with small integer entries.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

std::size_t rank(const SparseMatrix& m, FieldChoice field);

}  // namespace tabreg
