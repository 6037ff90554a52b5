#include "fiberscope/integer.hpp"

#include <algorithm>
#include <cctype>

namespace fiberscope {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr) {
    __int128 q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw PreconditionError("invmod: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  // deterministic base set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto& [p, k] : factor_u64(n)) out.push_back(p);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t n) {
  if (n == 1) return 1;
  if (gcd_u64(q % n, n) != 1) throw PreconditionError("mult_order: q not a unit");
  std::uint64_t x = q % n, k = 1;
  while (x != 1) {
    x = mulmod(x, q, n);
    ++k;
  }
  return k;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<char> sieve(n + 1, 1);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) sieve[j] = 0;
  }
  return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n0, std::uint64_t trial, mpz_class* residue) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> out;
  if (residue) *residue = 1;
  if (n == 0) return out;
  for (std::uint64_t p = 2; p <= trial && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(static_cast<unsigned long>(p));
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= static_cast<unsigned long>(p);
    }
    if (mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > n) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0)
      out.push_back(n);
    else if (residue)
      *residue = n;
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class pow_ui(std::uint64_t p, unsigned n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, n);
  return r;
}

std::string to_string(const mpz_class& x) { return x.get_str(); }

std::string to_string(const mpq_class& x) { return x.get_str(); }

mpq_class parse_rational(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&] { return PreconditionError("not a rational number: '" + s0 + "'"); };
  if (s.empty()) throw bad();
  auto ok_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok_int(num) || !ok_int(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

int padic_valuation(const mpq_class& x, std::uint64_t p) {
  if (x == 0) throw PreconditionError("valuation of zero");
  auto val = [p](mpz_class n) {
    int k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= static_cast<unsigned long>(p);
      ++k;
    }
    return k;
  };
  return val(x.get_num()) - val(x.get_den());
}

}  // namespace fiberscope
