#pragma once

// Independent reference computations used to check the library. None of
// these call the library routine they are checking.

#include <map>
#include <optional>
#include <vector>

#include "qadm/mpoly.hpp"
#include "qadm/rational.hpp"
#include "qadm/singularity.hpp"
#include "qadm/trees.hpp"

namespace oracle {

using qadm::MPoly;
using qadm::Rational;

// Sparse row echelon form over Q.
class Echelon {
 public:
  // Reduces `row` against the stored pivots; keeps it if it is independent.
  bool insert(std::map<int, Rational> row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<int, std::map<int, Rational>> pivots_;  // leading column -> row
};

// dim K[x,y] / (I + m^N) for generators in x, y.
std::size_t truncated_quotient_dim(const std::vector<MPoly>& generators, int N);
// dim K[x,y] / I, found by growing N until the truncated dimension is stable.
std::size_t quotient_dim(const std::vector<MPoly>& generators);
// Whether `basis` maps to a basis of K[x,y]/I (with I of finite colength).
bool is_monomial_basis(const std::vector<MPoly>& generators, const std::vector<MPoly>& basis);

// Tjurina ideal generators of the normal form of t (D2 uses the marked-node
// presentation, whose quotient is m / I rather than K[x,y] / I).
std::vector<MPoly> tjurina_ideal(qadm::SingType t);
std::size_t tjurina_dim(qadm::SingType t);

// delta = dim(normalization / local ring), from explicit branch parametrizations.
int brute_force_delta(qadm::SingType t);

// Labeled brute-force enumeration of w-stable trees up to isomorphism.
// Returns the number of isomorphism classes.
std::size_t brute_force_strata_count(int n, const qadm::WeightVector& w);
// The representatives themselves.
std::vector<qadm::MarkedTree> brute_force_strata(int n, const qadm::WeightVector& w);

// Rooted marked-tree isomorphism by explicit child matching.
bool isomorphic(const qadm::MarkedTree& a, const qadm::MarkedTree& b);

}  // namespace oracle
