#pragma once

// Truncated coinvariants V / sp_F V and V / (sp_F x| F) V on V = pi^{(x) r}.
//
// Relations are images X v of window generators X on basis vectors v of
// degree <= M, kept when the image has degree <= N. Images of one generator
// are homogeneous, so each target degree is reduced independently.

#include "osc/fock.hpp"
#include "osc/fpoint.hpp"
#include "osc/quadratic.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace osc {

/// :b_{-s} b_m: for s in S, s <= W, m in [-W, W] \ {0}.
std::vector<QuadraticElement> sp_f_generators(const FPoint& f, std::int64_t window);
/// The above followed by b_{-s} for s in S, s <= W.
std::vector<QuadraticElement> sp_f_x_generators(const FPoint& f, std::int64_t window);

struct CoinvOptions {
  /// Worker threads for the per-degree reduction; results do not depend on it.
  unsigned threads = 1;
  /// Upper bound on generator applications; exceeding it gives a partial report.
  std::optional<std::uint64_t> max_applications;
};

struct CoinvReport {
  std::vector<std::int64_t> gaps;
  std::size_t rank = 1;
  std::int64_t N = 0;
  std::int64_t M = 0;
  std::int64_t W = 0;
  std::vector<std::int64_t> dims;
  bool stabilized = false;
  std::size_t generators = 0;
  /// Resource bound hit; dims are upper bounds only.
  bool partial = false;
  /// Dimension vectors of every schedule step, in order.
  std::vector<std::vector<std::int64_t>> history;

  /// No gaps: allowed as a smoke test, no abelian variety behind it.
  bool degenerate() const { return gaps.empty(); }

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

enum class CoinvKind { A, X };

/// One truncated computation (stabilized is left false).
CoinvReport coinvariants(CoinvKind kind, const VoaConfig& config, const FPoint& f, std::int64_t N, std::int64_t M,
                         std::int64_t W, const CoinvOptions& options = {});

CoinvReport coinvariants_A(const VoaConfig& config, const FPoint& f, std::int64_t N, std::int64_t M, std::int64_t W,
                           const CoinvOptions& options = {});
CoinvReport coinvariants_X(const VoaConfig& config, const FPoint& f, std::int64_t N, std::int64_t M, std::int64_t W,
                           const CoinvOptions& options = {});

using CoinvRun = std::function<CoinvReport(std::int64_t M, std::int64_t W)>;

/// Runs the schedule of (M, W) steps; stabilized once two consecutive steps
/// agree. The returned report is the last step computed.
CoinvReport stabilize(const CoinvRun& run, const std::vector<std::pair<std::int64_t, std::int64_t>>& schedule);

/// Exact rank of a list of rational vectors of common length.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows, std::size_t columns);

}  // namespace osc
