#include "osc/coinvariants.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace osc {

std::vector<QuadraticElement> sp_f_generators(const FPoint& f, std::int64_t window) {
  std::vector<QuadraticElement> out;
  for (auto s : f.pole_orders(window)) {
    for (std::int64_t m = -window; m <= window; ++m) {
      if (m != 0) out.push_back(QuadraticElement::pair(-s, m));
    }
  }
  return out;
}

std::vector<QuadraticElement> sp_f_x_generators(const FPoint& f, std::int64_t window) {
  auto out = sp_f_generators(f, window);
  for (auto s : f.pole_orders(window)) out.push_back(QuadraticElement::mode(-s));
  return out;
}

namespace {

// Incremental row echelon form over Q.
class Echelon {
public:
  explicit Echelon(std::size_t columns) : columns_(columns) {}

  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return pivots_.size() == columns_; }

  void insert(std::vector<Rational> row) {
    for (const auto& [col, pivot] : pivots_) {
      if (row[col].is_zero()) continue;
      const Rational factor = row[col];
      for (std::size_t j = 0; j < columns_; ++j) {
        if (!pivot[j].is_zero()) row[j] -= factor * pivot[j];
      }
    }
    for (std::size_t j = 0; j < columns_; ++j) {
      if (row[j].is_zero()) continue;
      const Rational inv = Rational(1) / row[j];
      for (std::size_t k = j; k < columns_; ++k) row[k] *= inv;
      pivots_.emplace_back(j, std::move(row));
      return;
    }
  }

private:
  std::size_t columns_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> pivots_;
};

// Degree shift of a generator: images of degree-k vectors have degree k + shift.
std::int64_t degree_shift(const QuadraticElement& g) {
  if (!g.central().is_zero()) throw std::invalid_argument("generators must have zero central part");
  std::optional<std::int64_t> shift;
  auto take = [&shift](std::int64_t s) {
    if (shift && *shift != s) throw std::invalid_argument("generator is not homogeneous");
    shift = s;
  };
  for (const auto& [m, c] : g.linear().terms()) take(-m);
  for (const auto& [d, s] : g.quadratic()) take(-d);
  return shift.value_or(0);
}

struct DegreeJob {
  std::int64_t degree;
  std::uint64_t applications;
  bool run;
};

}  // namespace

std::size_t rational_rank(std::vector<std::vector<Rational>> rows, std::size_t columns) {
  Echelon e(columns);
  for (auto& r : rows) {
    if (r.size() != columns) throw std::invalid_argument("row length mismatch");
    e.insert(std::move(r));
    if (e.full()) break;
  }
  return e.rank();
}

CoinvReport coinvariants(CoinvKind kind, const VoaConfig& config, const FPoint& f, std::int64_t N, std::int64_t M,
                         std::int64_t W, const CoinvOptions& options) {
  config.validate();
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  if (N > M) throw std::invalid_argument("precondition N <= M violated");
  if (M > W) throw std::invalid_argument("precondition M <= W violated");

  const auto gens = kind == CoinvKind::A ? sp_f_generators(f, W) : sp_f_x_generators(f, W);
  std::vector<std::int64_t> shifts;
  for (const auto& g : gens) shifts.push_back(degree_shift(g));

  std::vector<std::vector<FockLabel>> bases;
  for (std::int64_t k = 0; k <= M; ++k) bases.push_back(graded_basis(k, config.rank));

  // Plan the work per target degree; the budget is spent in degree order.
  std::vector<DegreeJob> jobs;
  std::uint64_t spent = 0;
  bool partial = false;
  for (std::int64_t n = 0; n <= N; ++n) {
    std::uint64_t count = 0;
    for (auto s : shifts) {
      const std::int64_t k = n - s;
      if (k >= 0 && k <= M) count += bases[k].size();
    }
    bool run = !partial;
    if (run && options.max_applications && spent + count > *options.max_applications) {
      run = false;
      partial = true;
    }
    if (run) spent += count;
    jobs.push_back({n, count, run});
  }

  std::vector<std::int64_t> dims(N + 1);
  auto work = [&](std::size_t idx) {
    const std::int64_t n = jobs[idx].degree;
    const auto& target = bases[n];
    if (!jobs[idx].run) {
      dims[n] = static_cast<std::int64_t>(target.size());
      return;
    }
    std::map<FockLabel, std::size_t, LabelOrder> column;
    for (std::size_t i = 0; i < target.size(); ++i) column.emplace(target[i], i);
    Echelon e(target.size());
    for (std::size_t gi = 0; gi < gens.size() && !e.full(); ++gi) {
      const std::int64_t k = n - shifts[gi];
      if (k < 0 || k > M) continue;
      for (const auto& label : bases[k]) {
        FockVector image = apply_quadratic(gens[gi], FockVector::basis(label), config);
        if (image.is_zero()) continue;
        std::vector<Rational> row(target.size());
        for (const auto& [l, c] : image.terms()) row[column.at(l)] = c;
        e.insert(std::move(row));
        if (e.full()) break;
      }
    }
    dims[n] = static_cast<std::int64_t>(target.size() - e.rank());
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  CoinvReport r;
  r.gaps.assign(f.gaps().begin(), f.gaps().end());
  r.rank = config.rank;
  r.N = N;
  r.M = M;
  r.W = W;
  r.dims = dims;
  r.generators = gens.size();
  r.partial = partial;
  r.history.push_back(dims);
  return r;
}

CoinvReport coinvariants_A(const VoaConfig& config, const FPoint& f, std::int64_t N, std::int64_t M, std::int64_t W,
                           const CoinvOptions& options) {
  return coinvariants(CoinvKind::A, config, f, N, M, W, options);
}

CoinvReport coinvariants_X(const VoaConfig& config, const FPoint& f, std::int64_t N, std::int64_t M, std::int64_t W,
                           const CoinvOptions& options) {
  return coinvariants(CoinvKind::X, config, f, N, M, W, options);
}

CoinvReport stabilize(const CoinvRun& run, const std::vector<std::pair<std::int64_t, std::int64_t>>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i].first <= schedule[i - 1].first || schedule[i].second <= schedule[i - 1].second) {
      throw std::invalid_argument("schedule must be strictly increasing");
    }
  }
  std::vector<std::vector<std::int64_t>> history;
  CoinvReport last;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    CoinvReport r = run(schedule[i].first, schedule[i].second);
    history.push_back(r.dims);
    const bool agree = i > 0 && !r.partial && !last.partial && r.dims == last.dims;
    last = std::move(r);
    if (agree) {
      last.stabilized = true;
      break;
    }
  }
  last.history = std::move(history);
  return last;
}

nlohmann::ordered_json CoinvReport::to_json() const {
  nlohmann::ordered_json j;
  j["gaps"] = gaps;
  j["rank"] = rank;
  j["N"] = N;
  j["M"] = M;
  j["W"] = W;
  j["dims"] = dims;
  j["stabilized"] = stabilized;
  j["generators"] = generators;
  return j;
}

std::string CoinvReport::to_text() const {
  std::ostringstream os;
  os << "gaps {";
  for (std::size_t i = 0; i < gaps.size(); ++i) os << (i ? "," : "") << gaps[i];
  os << "}  genus " << gaps.size() << "  rank " << rank << "\n";
  os << "N = " << N << "  M = " << M << "  W = " << W << "  generators = " << generators << "\n";
  os << "dims:";
  for (auto d : dims) os << " " << d;
  os << "\n";
  os << "stabilized: " << (stabilized ? "yes" : "no") << "\n";
  if (partial) os << "note: resource bound reached; dimensions are upper bounds\n";
  if (degenerate()) os << "note: genus 0 point (degenerate smoke test)\n";
  return os.str();
}

}  // namespace osc
