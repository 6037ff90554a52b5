#include "fiberscope/tame_class.hpp"

#include <numeric>
#include <sstream>

namespace fiberscope {

std::string TameExtensionClass::str() const {
  std::ostringstream os;
  os << "(p=" << p << ",f=" << f << ",e=" << e << ",index=" << unit_index << "/" << g << ")";
  return os.str();
}

std::uint64_t count_classes(std::uint32_t p, int f, std::uint64_t e) {
  if (e == 0 || e % p == 0) throw PreconditionError("count_classes: p divides e (wild)");
  return gcd_u64(e, ipow(p, f) - 1);
}

TameExtensionClass classify_binomial(std::uint32_t p, int f, std::uint64_t e, const FqElement& u) {
  if (e == 0 || e % p == 0) throw PreconditionError("classify_binomial: p divides e (wild)");
  const auto& F = *u.field();
  if (F.p() != p || F.degree() != f) throw PreconditionError("classify_binomial: unit from a different field");
  if (u.is_zero()) throw PreconditionError("classify_binomial: u = 0");
  TameExtensionClass c;
  c.p = p;
  c.f = f;
  c.e = e;
  c.g = gcd_u64(e, F.order() - 1);
  c.unit_index = F.dlog(u) % c.g;
  return c;
}

bool iso_test(const TameExtensionClass& a, const TameExtensionClass& b) { return a == b; }

std::uint64_t realizability_gcd(std::uint64_t e, int f, std::uint64_t q) {
  if (f < 1) throw PreconditionError("realizability: f < 1");
  if (q < 2) throw PreconditionError("realizability: q < 2");
  if (gcd_u64(e, q) != 1) throw PreconditionError("realizability: gcd(e, q) != 1");
  mpz_class n = (pow_ui(q, f) - 1) / static_cast<unsigned long>(q - 1);
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), n.get_mpz_t(), e);
  return g.get_ui();
}

bool realizability(std::uint64_t e, int f, std::uint64_t q) { return realizability_gcd(e, f, q) == 1; }

mpq_class proportion_realizable(std::uint64_t e, int f, std::uint64_t q) {
  return mpq_class(1, static_cast<unsigned long>(realizability_gcd(e, f, q)));
}

std::uint64_t max_abelian_subdegree(std::uint64_t e, std::uint64_t q) {
  if (gcd_u64(e, q) != 1) throw PreconditionError("max_abelian_subdegree: gcd(e, q) != 1");
  return gcd_u64(e, q - 1);
}

}  // namespace fiberscope
