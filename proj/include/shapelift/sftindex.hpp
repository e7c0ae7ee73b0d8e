#pragma once

#include <utility>
#include <vector>

#include "shapelift/rational.hpp"

namespace shapelift {

/// Integer pair (m, n) exactly as it enters the index formulas.
using EndPair = std::pair<long, long>;

/// The orbit gamma_(m,n) has type (-m, -n); this is the pair the formulas
/// consume. Callers state which convention they mean by going through here.
inline EndPair formula_pair_from_label(long m, long n) { return {-m, -n}; }

struct EndData {
  /// CZ + dim S / 2 for every positive end.
  std::vector<Rational> cz_plus_halfdim;
  /// Negative torus ends, only used for the count when given.
  std::vector<EndPair> neg_pairs;
  long c1 = 0;
};

/// (s+ + s- - 2) + 2 c1 + sum(CZ+ + dim/2) - sum(CZ- - dim/2).
long index_general(const EndData& ends, const std::vector<Rational>& neg_cz_minus_halfdim);

/// (s+ + s- - 2) + sum(pos) + 2 sum(m + n).
long index_torus_ends(const std::vector<Rational>& pos_terms, const std::vector<EndPair>& neg_pairs);

/// (s- - 2) + 4 (d1 + d2) + 2 sum(m + n).
long index_bidegree(const std::vector<EndPair>& neg_pairs, long d1, long d2);

/// Q curves in the symplectization with s[j] positive ends each, R curves in
/// the cobordism, and neg_ends ends on the torus.
struct TreeCounts {
  long Q = 0;
  long R = 0;
  std::vector<long> s;
  long neg_ends = 0;
};

struct BuildingData {
  std::vector<long> component_indices;
  std::vector<long> matched_leaf_dims;
  std::vector<Rational> component_areas;
  std::vector<TreeCounts> tree;
};

struct BuildingTotals {
  Rational area;
  long index = 0;
};

BuildingTotals building_totals(const BuildingData& b);

/// r m + s n.
Rational plane_area(const Rational& r, const Rational& s, long m, long n);

struct TreeCheck {
  std::vector<bool> tree_identity;
  std::vector<bool> index_chain;
  /// sum_i (ind C_i - e_i) equals -(ind C_0 - #ends C_0).
  bool matching_consistent = false;
  long total_sum = 0;
  bool sum_nonpositive = false;

  bool holds() const;
};

TreeCheck tree_homology_check(const BuildingData& b, const std::vector<long>& per_component_neg_sums,
                              long ind_C0_minus_ends);

}  // namespace shapelift
