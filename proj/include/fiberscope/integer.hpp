#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fiberscope {

// precondition violations that are the caller's fault
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a valuation or a quotient needed more p-adic digits than we carry
struct BelowPrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// inverse of a mod m; throws if not invertible
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);
// distinct prime factors, ascending
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, unsigned e);
// multiplicative order of q mod n (gcd(q, n) = 1, n >= 1)
std::uint64_t mult_order(std::uint64_t q, std::uint64_t n);
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// big-integer factoring for bad-prime detection: trial division to `trial`,
// cofactor kept if prime; `residue` gets anything left unfactored
std::vector<mpz_class> prime_divisors(const mpz_class& n, std::uint64_t trial,
                                      mpz_class* residue = nullptr);

mpz_class pow_ui(std::uint64_t p, unsigned n);
std::string to_string(const mpz_class& x);
std::string to_string(const mpq_class& x);
mpq_class parse_rational(const std::string& s);
// p-adic valuation of a nonzero rational
int padic_valuation(const mpq_class& x, std::uint64_t p);

}  // namespace fiberscope
