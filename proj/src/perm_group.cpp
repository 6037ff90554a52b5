#include "fiberscope/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fiberscope/integer.hpp"

namespace fiberscope {

Perm identity_perm(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

CycleType cycle_type(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  CycleType c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = true, ++len;
    c.push_back(len);
  }
  std::sort(c.rbegin(), c.rend());
  return c;
}

int perm_order(const Perm& a) {
  int o = 1;
  for (int l : cycle_type(a)) o = std::lcm(o, l);
  return o;
}

std::string cycle_type_str(const CycleType& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

Perm parse_cycles(const std::string& s, int d) {
  Perm p = identity_perm(d);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw PreconditionError("bad cycle notation '" + s + "': " + why); };
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') fail("expected '('");
    std::size_t j = s.find(')', i);
    if (j == std::string::npos) fail("unclosed cycle");
    std::istringstream in(s.substr(i + 1, j - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream t2(tok);
      int x;
      while (t2 >> x) {
        if (x < 1 || x > d) fail("point out of range");
        cyc.push_back(x - 1);
      }
    }
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) fail("repeated point in a cycle");
    // apply this cycle after the ones to its right: compose left to right as written
    Perm c = identity_perm(d);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    p = compose(p, c);
    i = j + 1;
  }
  return p;
}

std::string cycle_str(const Perm& a) {
  std::string s;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      s += (j == i ? "" : " ") + std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm from_one_line(const std::vector<int>& images) {
  Perm p;
  for (int x : images) p.push_back(x - 1);
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_perm(static_cast<int>(p.size())))
    throw PreconditionError("one-line permutation is not a bijection of 1..d");
  return p;
}

PermutationGroup::PermutationGroup(int d, std::vector<Perm> generators) : d_(d), gens_(std::move(generators)) {
  if (d < 1) throw PreconditionError("permutation group: degree must be positive");
  for (auto& g : gens_) {
    if (static_cast<int>(g.size()) != d) throw PreconditionError("permutation group: generator of wrong degree");
    Perm s = g;
    std::sort(s.begin(), s.end());
    if (s != identity_perm(d)) throw PreconditionError("permutation group: generator is not a permutation");
  }
  std::set<Perm> seen{identity_perm(d)};
  std::vector<Perm> frontier{identity_perm(d)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto& x : frontier)
      for (auto& g : gens_) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) {
          if (seen.size() > kMaxOrder) throw PreconditionError("permutation group: order exceeds the closure cap");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  elems_.assign(seen.begin(), seen.end());
}

bool PermutationGroup::contains(const Perm& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

bool PermutationGroup::is_transitive() const {
  std::set<int> orbit;
  for (auto& g : elems_) orbit.insert(g[0]);
  return static_cast<int>(orbit.size()) == d_;
}

std::vector<Perm> PermutationGroup::stabilizer(int point) const {
  std::vector<Perm> out;
  for (auto& g : elems_)
    if (g[point] == point) out.push_back(g);
  return out;
}

namespace {

Perm cycle_perm(int d, std::vector<int> pts) {
  Perm c = identity_perm(d);
  for (std::size_t k = 0; k < pts.size(); ++k) c[pts[k]] = pts[(k + 1) % pts.size()];
  return c;
}

Perm long_cycle(int d) {
  std::vector<int> pts(d);
  std::iota(pts.begin(), pts.end(), 0);
  return cycle_perm(d, pts);
}

}  // namespace

PermutationGroup symmetric_group(int d) {
  if (d == 1) return PermutationGroup(1, {});
  return PermutationGroup(d, {cycle_perm(d, {0, 1}), long_cycle(d)});
}

PermutationGroup alternating_group(int d) {
  std::vector<Perm> gens;
  for (int k = 2; k < d; ++k) gens.push_back(cycle_perm(d, {0, 1, k}));
  return PermutationGroup(d, gens);
}

PermutationGroup dihedral_group(int d) {
  Perm r(d);
  for (int i = 0; i < d; ++i) r[i] = (d - i) % d;
  return PermutationGroup(d, {long_cycle(d), r});
}

PermutationGroup cyclic_group(int d) { return PermutationGroup(d, {long_cycle(d)}); }

std::vector<DoubleCoset> double_cosets(const PermutationGroup& G, const Perm& sigma) {
  if (!G.contains(sigma)) throw PreconditionError("double_cosets: sigma is not in G");
  if (!G.is_transitive()) throw PreconditionError("double_cosets: G is not transitive");
  const int d = G.degree();
  const std::vector<Perm> G0 = G.stabilizer(d - 1);
  std::vector<Perm> powers{identity_perm(d)};
  for (Perm x = sigma; x != identity_perm(d); x = compose(x, sigma)) powers.push_back(x);

  std::set<Perm> visited;
  std::vector<DoubleCoset> out;
  for (auto& g : G.elements()) {
    if (visited.count(g)) continue;
    std::set<Perm> D;
    for (auto& h : G0)
      for (auto& s : powers) D.insert(compose(compose(h, g), s));
    visited.insert(D.begin(), D.end());
    if (D.size() % G0.size() != 0) throw std::logic_error("double_cosets: size not a multiple of |G0|");
    int block = static_cast<int>(D.size() / G0.size());
    // G0 g is labelled by g^-1(d); right multiplication by sigma moves the label by sigma^-1,
    // so the block is the orbit of d under g sigma g^-1
    Perm conj = compose(g, compose(sigma, inverse(g)));
    int orbit = 1;
    for (int x = conj[d - 1]; x != d - 1; x = conj[x]) ++orbit;
    if (orbit != block) throw std::logic_error("double_cosets: block size disagrees with the conjugate orbit");
    out.push_back({g, block});
  }
  return out;
}

std::vector<int> etale_from_frobenius(const Perm& sigma, const PermutationGroup& G) {
  std::vector<int> sizes;
  for (auto& dc : double_cosets(G, sigma)) sizes.push_back(dc.block_size);
  std::sort(sizes.rbegin(), sizes.rend());
  if (sizes != cycle_type(sigma)) throw std::logic_error("etale_from_frobenius: block sizes differ from the cycle type");
  return sizes;
}

bool transposition_transitivity_check(const std::vector<Perm>& transpositions, int d) {
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& t : transpositions) {
    if (static_cast<int>(t.size()) != d || cycle_type(t) != [&] {
          CycleType c(d - 1, 1);
          if (d >= 2) c[0] = 2;
          return c;
        }())
      throw PreconditionError("transposition_transitivity_check: generator is not a transposition");
    std::vector<int> moved;
    for (int i = 0; i < d; ++i)
      if (t[i] != i) moved.push_back(i);
    parent[find(moved[0])] = find(moved[1]);
  }
  int roots = 0;
  for (int i = 0; i < d; ++i) roots += find(i) == i;
  bool connected = roots == 1;
  if (connected && d <= 7) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    if (PermutationGroup(d, transpositions).order() != fact)
      throw std::logic_error("transposition_transitivity_check: connected but closure is not S_d");
  }
  return connected;
}

}  // namespace fiberscope
