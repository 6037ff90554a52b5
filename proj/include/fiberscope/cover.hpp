#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fiberscope/finite_field.hpp"
#include "fiberscope/padic.hpp"
#include "fiberscope/unramified.hpp"

namespace fiberscope {

using ZPoly = Poly<mpz_class>;
using QPoly = Poly<mpq_class>;

ZPoly zpoly(const std::vector<mpz_class>& c);
QPoly to_qpoly(const ZPoly& f);
// primitive integer multiple with positive leading coefficient
ZPoly primitive_part(const QPoly& f);
FqPoly reduce_mod(const ZPoly& f, const FieldPtr& F);

// squarefree factor of the discriminant over Q with its exponent
struct DiscComponent {
  ZPoly factor;  // primitive, squarefree
  int multiplicity;
};

// f(t, z) = sum c[i][j] z^i t^j, monic in z
class CoverSpec {
 public:
  explicit CoverSpec(std::vector<std::vector<mpz_class>> coeffs);

  int degree() const { return d_; }
  int t_degree() const;
  const std::vector<std::vector<mpz_class>>& coefficients() const { return c_; }
  // coefficient of z^i as a polynomial in t
  const std::vector<ZPoly>& rows() const { return rows_; }
  const ZPoly& disc() const { return disc_; }
  const ZPoly& radical() const { return radical_; }
  const std::vector<DiscComponent>& disc_components() const { return components_; }
  bool irreducibility_witnessed() const { return witness_.has_value(); }
  // (p, tbar) with f(tbar, z) irreducible mod p
  const std::optional<std::pair<std::uint32_t, std::uint32_t>>& irreducibility_witness() const { return witness_; }

  FqPoly at(const FqElement& t) const;
  FqPoly dt_at(const FqElement& t) const;
  ZqPoly at(const RingPtr& R, const PadicInt& t) const;
  QPoly at(const mpq_class& t) const;

  // s = 1/t, w = z t^k: the chart around t = infinity
  CoverSpec infinity_chart() const;
  int infinity_chart_twist() const;

 private:
  void validate();
  void compute_branch_data();
  void find_witness();

  std::vector<std::vector<mpz_class>> c_;
  int d_ = 0;
  std::vector<ZPoly> rows_, dt_rows_;
  ZPoly disc_, radical_;
  std::vector<DiscComponent> components_;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_;
};

// (-1)^(d(d-1)/2) res(f, f') for monic f
template <class T>
T discriminant(const Poly<T>& f) {
  int d = f.degree();
  T r = resultant(f, derivative(f));
  return ((d * (d - 1) / 2) % 2) ? T(-r) : r;
}

}  // namespace fiberscope
