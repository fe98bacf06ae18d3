#pragma once

#include "hyperobs/polynomial.hpp"
#include "hyperobs/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hyperobs {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Three primes just below 2^61 used when the caller supplies none.
std::vector<std::uint64_t> default_primes();

/// Arithmetic modulo a prime p < 2^63.
class PrimeField {
 public:
  /// Throws std::invalid_argument if p is not a prime below 2^63.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  /// Throws std::domain_error for zero.
  std::uint64_t inv(std::uint64_t a) const;

  /// Image of a rational; throws std::domain_error when p divides the denominator.
  std::uint64_t reduce(const Rational& q) const;

 private:
  std::uint64_t p_;
};

using FieldRow = std::vector<std::uint64_t>;
using FieldMatrix = std::vector<FieldRow>;

/// Rank by Gaussian elimination over the field.
std::size_t rank(FieldMatrix rows, const PrimeField& field);

/// Row-echelon basis grown one row at a time.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& field, int n) : field_(field), n_(n) {}

  /// Reduces `row` against the basis; keeps it and returns true if independent.
  bool insert(FieldRow row);
  std::size_t rank() const { return rows_.size(); }
  int dim() const { return n_; }

 private:
  PrimeField field_;
  int n_;
  std::vector<FieldRow> rows_;   // normalized so rows_[i][pivots_[i]] == 1
  std::vector<int> pivots_;
};

/// Value of p at a field point; coefficients are reduced on the fly.
std::uint64_t evaluate_mod(const Polynomial& p, const PrimeField& field, std::span<const std::uint64_t> x);

}  // namespace hyperobs
