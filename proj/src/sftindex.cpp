#include "shapelift/sftindex.hpp"

#include <algorithm>
#include <numeric>

#include "shapelift/errors.hpp"

namespace shapelift {

namespace {

long as_integer(const Rational& v, const char* what) {
  if (!v.is_integer()) throw DomainError(std::string(what) + " is not an integer: " + v.str());
  return v.num().get_si();
}

long pair_total(const std::vector<EndPair>& pairs) {
  long total = 0;
  for (const auto& [m, n] : pairs) total += m + n;
  return total;
}

Rational sum(const std::vector<Rational>& xs) {
  Rational total;
  for (const Rational& x : xs) total += x;
  return total;
}

}  // namespace

long index_general(const EndData& ends, const std::vector<Rational>& neg_cz_minus_halfdim) {
  if (!ends.neg_pairs.empty() && ends.neg_pairs.size() != neg_cz_minus_halfdim.size()) {
    throw DomainError("negative end data lists have different lengths");
  }
  long s_plus = static_cast<long>(ends.cz_plus_halfdim.size());
  long s_minus = static_cast<long>(neg_cz_minus_halfdim.size());
  Rational total = Rational(s_plus + s_minus - 2) + Rational(2 * ends.c1) + sum(ends.cz_plus_halfdim) -
                   sum(neg_cz_minus_halfdim);
  return as_integer(total, "Fredholm index");
}

long index_torus_ends(const std::vector<Rational>& pos_terms, const std::vector<EndPair>& neg_pairs) {
  long s_plus = static_cast<long>(pos_terms.size());
  long s_minus = static_cast<long>(neg_pairs.size());
  Rational total = Rational(s_plus + s_minus - 2) + sum(pos_terms) + Rational(2 * pair_total(neg_pairs));
  return as_integer(total, "Fredholm index");
}

long index_bidegree(const std::vector<EndPair>& neg_pairs, long d1, long d2) {
  long s_minus = static_cast<long>(neg_pairs.size());
  return (s_minus - 2) + 4 * (d1 + d2) + 2 * pair_total(neg_pairs);
}

BuildingTotals building_totals(const BuildingData& b) {
  if (b.component_indices.empty()) throw DomainError("building has no components");
  if (b.matched_leaf_dims.size() + 1 != b.component_indices.size()) {
    throw DomainError("a connected building with " + std::to_string(b.component_indices.size()) +
                      " components needs " + std::to_string(b.component_indices.size() - 1) + " matchings");
  }
  if (!b.component_areas.empty() && b.component_areas.size() != b.component_indices.size()) {
    throw DomainError("component areas and indices have different lengths");
  }
  BuildingTotals out;
  out.area = sum(b.component_areas);
  out.index = std::accumulate(b.component_indices.begin(), b.component_indices.end(), 0L) -
              std::accumulate(b.matched_leaf_dims.begin(), b.matched_leaf_dims.end(), 0L);
  return out;
}

Rational plane_area(const Rational& r, const Rational& s, long m, long n) {
  if (r.sign() <= 0 || s.sign() <= 0) throw DomainError("plane area needs r, s > 0");
  return r * Rational(m) + s * Rational(n);
}

bool TreeCheck::holds() const {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool x) { return x; }); };
  return all(tree_identity) && all(index_chain) && sum_nonpositive;
}

TreeCheck tree_homology_check(const BuildingData& b, const std::vector<long>& per_component_neg_sums,
                              long ind_C0_minus_ends) {
  if (ind_C0_minus_ends < 0) throw DomainError("needs ind(C_0) >= #negative ends of C_0");
  const std::size_t n = b.tree.size();
  if (b.component_indices.size() != n || per_component_neg_sums.size() != n) {
    throw DomainError("tree counts, indices and homology sums must have one entry per component");
  }
  TreeCheck out;
  long chain_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const TreeCounts& t = b.tree[i];
    if (t.Q < 0 || t.R < 0 || t.neg_ends < 0) throw DomainError("tree counts must be nonnegative");
    if (static_cast<long>(t.s.size()) != t.Q) {
      throw DomainError("component " + std::to_string(i) + " lists " + std::to_string(t.s.size()) +
                        " positive-end counts for Q=" + std::to_string(t.Q));
    }
    long s_total = std::accumulate(t.s.begin(), t.s.end(), 0L);
    out.tree_identity.push_back(t.R + t.Q - (s_total - 1) == 1);
    long lhs = b.component_indices[i] - t.neg_ends;
    out.index_chain.push_back(lhs == 2 * per_component_neg_sums[i]);
    chain_total += lhs;
  }
  out.matching_consistent = chain_total == -ind_C0_minus_ends;
  out.total_sum = std::accumulate(per_component_neg_sums.begin(), per_component_neg_sums.end(), 0L);
  out.sum_nonpositive = out.total_sum <= 0;
  return out;
}

}  // namespace shapelift
