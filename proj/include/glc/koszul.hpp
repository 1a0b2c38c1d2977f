#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glc/cohom.hpp"
#include "glc/linalg.hpp"

namespace glc {

/// Homogeneous elements x_1..x_m of R = A/I with dim R/(x) = 0, m = dim R.
struct ParameterSequence {
  std::vector<Polynomial> elements;
  std::vector<int> degrees;
};

/// dim A/(I + (x)) == 0 and the length equals dim A/I.
bool is_parameter_sequence(const Ideal& I, const ParameterSequence& x);

/// Pseudo-random combinations of the monomials of a common degree D, with
/// D the lcm of the weights and then its multiples. Throws DomainError
/// when the attempts run out.
ParameterSequence find_hsop(const Ideal& I, std::uint64_t seed = 0, int max_attempts = 64);

/// Degree-t strand of the Koszul cocomplex K^r = sum_{|S|=r} R(deg S) with
/// differential e_S -> sum x_i e_i ∧ e_S.
struct KoszulStrand {
  int t = 0;
  std::vector<std::size_t> dims;       // dim [K^r]_t, r = 0..m
  std::vector<Matrix> differentials;   // d^r : [K^r]_t -> [K^{r+1}]_t, r = 0..m-1
  std::vector<long long> cohomology;   // dim [H^r(x; R)]_t
};

/// Throws ResourceError when a strand piece exceeds max_dim.
KoszulStrand koszul_strand(const Ideal& I, const ParameterSequence& x, int t,
                           std::size_t max_dim = 5000);

long long koszul_cohomology_slice(const Ideal& I, const ParameterSequence& x, int r, int t,
                                  std::size_t max_dim = 5000);

/// Degrees t outside [first, second] carry no H^r(x; R); derived from the
/// twists of K^r and the top degrees of local cohomology.
std::pair<int, int> koszul_support_window(const ExtComputation& ext, const ParameterSequence& x,
                                          int r);

/// H^r(x; R) != 0, by scanning the support window.
bool koszul_cohomology_total_nonzero(const ExtComputation& ext, const ParameterSequence& x,
                                     int r, std::size_t max_dim = 5000);

struct HochsterRobertsRow {
  int r;
  int t;
  long long koszul_dim;
  std::optional<long long> lc_dim;  // total dim H^r_m(R); empty if not finite length
  bool equal;
};

struct HochsterRobertsReport {
  std::vector<HochsterRobertsRow> rows;  // r = 0..dim R - 1, t = 0
  std::vector<bool> concentrated;        // H^r_m(R) = [H^r_m(R)]_0, per row
  bool hypothesis_holds = true;          // every row concentrated in degree 0
  bool all_equal = true;
  std::optional<int> first_discrepancy;
};

HochsterRobertsReport hochster_roberts_check(const ExtComputation& ext,
                                             const ParameterSequence& x,
                                             std::size_t max_dim = 5000);

}  // namespace glc
