#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fiberscope {

// images of 0..d-1
using Perm = std::vector<int>;
// cycle lengths, descending
using CycleType = std::vector<int>;

Perm identity_perm(int d);
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& a);
CycleType cycle_type(const Perm& a);
int perm_order(const Perm& a);
std::string cycle_type_str(const CycleType& c);
// "(1 2)(3 4)" with 1-based points; "()" is the identity
Perm parse_cycles(const std::string& s, int d);
std::string cycle_str(const Perm& a);
// one-line notation with 1-based images
Perm from_one_line(const std::vector<int>& images);

class PermutationGroup {
 public:
  static constexpr std::size_t kMaxOrder = 100000;
  PermutationGroup(int d, std::vector<Perm> generators);

  int degree() const { return d_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }  // sorted
  std::size_t order() const { return elems_.size(); }
  bool contains(const Perm& x) const;
  bool is_transitive() const;
  std::vector<Perm> stabilizer(int point) const;

 private:
  int d_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
};

PermutationGroup symmetric_group(int d);
PermutationGroup alternating_group(int d);
PermutationGroup dihedral_group(int d);
PermutationGroup cyclic_group(int d);

struct DoubleCoset {
  Perm representative;
  int block_size;  // number of right cosets of the point stabilizer inside it
};
// G0 \ G / <sigma> with G0 the stabilizer of the last point
std::vector<DoubleCoset> double_cosets(const PermutationGroup& G, const Perm& sigma);
// inertia degrees of the etale algebra at a Frobenius sigma; checked against the cycle type of sigma
std::vector<int> etale_from_frobenius(const Perm& sigma, const PermutationGroup& G);

// connectivity of the transposition graph; when connected and d <= 7 the closure is checked to be S_d
bool transposition_transitivity_check(const std::vector<Perm>& transpositions, int d);

}  // namespace fiberscope
