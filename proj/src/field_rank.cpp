#include "tabreg/field_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace tabreg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Incremental echelon basis over GF(2): each stored vector has a distinct
// pivot (its lowest set bit) and is reduced against all earlier pivots.
std::size_t rank_gf2(const SparseMatrix& m) {
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis_by_pivot(m.rows);
  std::size_t r = 0;
  std::vector<std::uint64_t> v(words);
  for (const auto& col : m.columns) {
    std::fill(v.begin(), v.end(), 0);
    for (auto [row, coeff] : col)
      if (coeff % 2 != 0) v[row / 64] ^= std::uint64_t{1} << (row % 64);
    for (std::size_t w = 0; w < words;) {
      if (v[w] == 0) {
        ++w;
        continue;
      }
      const std::size_t pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
      auto& b = basis_by_pivot[pivot];
      if (b.empty()) {
        b = v;
        ++r;
        break;
      }
      for (std::size_t k = w; k < words; ++k) v[k] ^= b[k];
    }
  }
  return r;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  const std::uint64_t mod = p;
  auto inverse = [mod](std::uint64_t a) {
    std::uint64_t result = 1, base = a % mod, e = mod - 2;
    while (e) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return result;
  };
  std::vector<std::vector<std::uint64_t>> basis_by_pivot(m.rows);
  std::size_t r = 0;
  std::vector<std::uint64_t> v(m.rows);
  for (const auto& col : m.columns) {
    std::fill(v.begin(), v.end(), 0);
    for (auto [row, coeff] : col) {
      const long long c = coeff % static_cast<long long>(mod);
      v[row] = (v[row] + static_cast<std::uint64_t>(c < 0 ? c + static_cast<long long>(mod) : c)) % mod;
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (v[i] == 0) continue;
      auto& b = basis_by_pivot[i];
      if (b.empty()) {
        // Normalize so the pivot entry is 1.
        const std::uint64_t inv = inverse(v[i]);
        for (std::size_t k = i; k < m.rows; ++k) v[k] = v[k] * inv % mod;
        b = v;
        ++r;
        break;
      }
      const std::uint64_t factor = v[i];
      for (std::size_t k = i; k < m.rows; ++k) v[k] = (v[k] + (mod - factor) * b[k]) % mod;
    }
  }
  return r;
}

// Fraction-free reduction over Z: the new vector is scaled by the pivot
// entry before subtracting, then divided by the content.
std::size_t rank_rational(const SparseMatrix& m) {
  using Int = boost::multiprecision::cpp_int;
  std::vector<std::vector<Int>> basis_by_pivot(m.rows);
  std::size_t r = 0;
  for (const auto& col : m.columns) {
    std::vector<Int> v(m.rows);
    for (auto [row, coeff] : col) v[row] += coeff;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (v[i] == 0) continue;
      auto& b = basis_by_pivot[i];
      if (b.empty()) {
        b = std::move(v);
        ++r;
        break;
      }
      const Int scale = b[i];
      const Int factor = v[i];
      Int content = 0;
      for (std::size_t k = i; k < m.rows; ++k) {
        v[k] = v[k] * scale - factor * b[k];
        if (v[k] != 0) content = content == 0 ? Int(abs(v[k])) : Int(gcd(content, abs(v[k])));
      }
      if (content > 1)
        for (std::size_t k = i; k < m.rows; ++k) v[k] /= content;
    }
  }
  return r;
}

}  // namespace

FieldChoice FieldChoice::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (std::uint32_t{1} << 31))
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  return {Kind::Prime, p};
}

FieldChoice FieldChoice::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "0") return rationals();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 10)
    throw std::invalid_argument("field must be a prime or 'q'");
  return prime_field(static_cast<std::uint32_t>(std::stoull(text)));
}

std::string FieldChoice::name() const { return kind == Kind::Rational ? "q" : std::to_string(prime); }

std::size_t rank(const SparseMatrix& m, FieldChoice field) {
  if (m.rows == 0 || m.columns.empty()) return 0;
  if (field.kind == FieldChoice::Kind::Rational) return rank_rational(m);
  if (field.prime == 2) return rank_gf2(m);
  return rank_mod_p(m, field.prime);
}

}  // namespace tabreg
