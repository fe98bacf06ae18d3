#include "hyperobs/prime_field.hpp"

#include <stdexcept>

namespace hyperobs {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> default_primes() {
  return {2305843009213693951ULL, 2305843009213693921ULL, 2305843009213693907ULL};
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^63");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const { return powmod(base, exp, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in prime field");
  return powmod(a, p_ - 2, p_);
}

std::uint64_t PrimeField::reduce(const Rational& q) const {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (den == 0) throw std::domain_error("prime divides a coefficient denominator");
  return den == 1 ? num : mul(num, inv(den));
}

std::size_t rank(FieldMatrix rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint64_t inv = field.inv(rows[r][c]);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = field.mul(rows[r][j], inv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const std::uint64_t factor = rows[i][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

bool EchelonBasis::insert(FieldRow row) {
  if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("echelon row has wrong length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto c = static_cast<std::size_t>(pivots_[i]);
    const std::uint64_t factor = row[c];
    if (factor == 0) continue;
    for (std::size_t j = c; j < row.size(); ++j) row[j] = field_.sub(row[j], field_.mul(factor, rows_[i][j]));
  }
  std::size_t lead = 0;
  while (lead < row.size() && row[lead] == 0) ++lead;
  if (lead == row.size()) return false;
  const std::uint64_t inv = field_.inv(row[lead]);
  for (std::size_t j = lead; j < row.size(); ++j) row[j] = field_.mul(row[j], inv);
  // Keep existing rows reduced in the new pivot column so later inserts
  // only need one pass.
  for (auto& existing : rows_) {
    const std::uint64_t factor = existing[lead];
    if (factor == 0) continue;
    for (std::size_t j = lead; j < row.size(); ++j) {
      existing[j] = field_.sub(existing[j], field_.mul(factor, row[j]));
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(static_cast<int>(lead));
  return true;
}

std::uint64_t evaluate_mod(const Polynomial& p, const PrimeField& field, std::span<const std::uint64_t> x) {
  std::uint64_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t prod = field.reduce(t.coeff);
    for (const auto& [v, e] : t.monomial.factors()) {
      if (v >= static_cast<int>(x.size())) throw std::out_of_range("evaluation point too short");
      prod = field.mul(prod, field.pow(x[static_cast<std::size_t>(v)], static_cast<std::uint64_t>(e)));
    }
    sum = field.add(sum, prod);
  }
  return sum;
}

}  // namespace hyperobs
