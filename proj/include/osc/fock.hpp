#pragma once

// Rank-r Heisenberg Fock space: basis vectors are r-tuples of partitions,
// b_{-m} appends a part m, b_m removes one with factor m * multiplicity.

#include "osc/quadratic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

using Partition = std::vector<std::int64_t>;  // weakly decreasing, positive parts
using FockLabel = std::vector<Partition>;     // one partition per channel

std::int64_t degree(const FockLabel& label);
/// "[3,1,1]" at rank 1, "([3,1]|[2])" otherwise.
std::string label_to_string(const FockLabel& label);

/// Total degree first, then channel degrees descending, then partitions
/// in reverse lexicographic order.
struct LabelOrder {
  bool operator()(const FockLabel& a, const FockLabel& b) const;
};

class FockVector {
public:
  using Terms = std::map<FockLabel, Rational, LabelOrder>;

  explicit FockVector(std::size_t rank = 1) : rank_(rank) {}
  static FockVector vacuum(std::size_t rank = 1);
  static FockVector basis(const FockLabel& label);
  /// Parses "2*[1,1] - 1/3*[2]" or "([1]|[])"; rank inferred from labels.
  static FockVector parse(std::string_view text, std::size_t rank_hint = 0);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const FockLabel& label) const;
  void add_term(const FockLabel& label, const Rational& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& c, FockVector a) { return a *= c; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.rank_ == b.rank_ && a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  std::size_t rank_;
  Terms terms_;
};

/// V = pi^{(x) rank} with pi embedded at channel `embedding` (1-based).
/// `momentum` tags Fock-type modules; no operator in scope reads it.
struct VoaConfig {
  std::size_t rank = 1;
  std::size_t embedding = 1;
  Rational momentum{0};

  void validate() const;
};

/// b_n on one channel (1-based). n = 0 is rejected.
FockVector apply_mode(std::int64_t n, std::size_t channel, const FockVector& v);

/// The action of a Weyl-quadratic element through the channel `channel`.
FockVector apply_quadratic(const QuadraticElement& a, const FockVector& v, std::size_t channel = 1);
FockVector apply_quadratic(const QuadraticElement& a, const FockVector& v, const VoaConfig& config);

/// L_p on the embedded channel.
FockVector virasoro(std::int64_t p, const FockVector& v, const VoaConfig& config = {});
/// L_p summed over all channels.
FockVector virasoro_total(std::int64_t p, const FockVector& v);

/// c with ([L_p, L_-p] - 2p L_0) v = c/12 (p^3 - p) v for every test vector.
/// Throws std::runtime_error naming the first inconsistent vector.
Rational measure_central_charge(std::int64_t p, const std::vector<FockVector>& vectors, const VoaConfig& config = {},
                                bool all_channels = false);

/// exp(A) v for locally nilpotent A. Accepts A whose terms each lower the
/// degree, and otherwise A without pure-creation terms whose powers vanish on
/// v. Throws std::invalid_argument when A is not locally nilpotent on v.
FockVector exp_apply(const QuadraticElement& a, const FockVector& v, std::size_t channel = 1);

/// The torus action of a number-operator combination A (offset-0 quadratic
/// part only): a^k on the eigenspace of eigenvalue k. k must be an integer.
FockVector exp_torus(const QuadraticElement& a, const Rational& base, const FockVector& v, std::size_t channel = 1);

/// Partitions of n in reverse lexicographic order.
std::vector<Partition> partitions(std::int64_t n);
/// All rank-tuples of partitions of total size d, in LabelOrder.
std::vector<FockLabel> graded_basis(std::int64_t d, std::size_t rank = 1);

struct AdmissibilityReport {
  bool pass = true;
  std::string witness;  // first failing (i, label) when pass is false
};

/// Number operators :b_{-i} b_i: on the embedded channel are diagonal with
/// eigenvalue i * (multiplicity of i), for i <= max_index, degree <= max_degree.
AdmissibilityReport check_admissibility(const VoaConfig& config, std::int64_t max_index, std::int64_t max_degree);

}  // namespace osc
