#include "osc/fock.hpp"

#include "osc/oscillator.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace osc {

std::int64_t degree(const FockLabel& label) {
  std::int64_t d = 0;
  for (const auto& part : label) d += std::accumulate(part.begin(), part.end(), std::int64_t{0});
  return d;
}

std::string label_to_string(const FockLabel& label) {
  auto one = [](const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
  };
  if (label.size() == 1) return one(label[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? "|" : "") + one(label[i]);
  return s + ")";
}

bool LabelOrder::operator()(const FockLabel& a, const FockLabel& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ca = std::accumulate(a[i].begin(), a[i].end(), std::int64_t{0});
    const auto cb = std::accumulate(b[i].begin(), b[i].end(), std::int64_t{0});
    if (ca != cb) return ca > cb;
  }
  return b < a;
}

FockVector FockVector::vacuum(std::size_t rank) { return basis(FockLabel(rank)); }

FockVector FockVector::basis(const FockLabel& label) {
  FockVector v(label.size());
  v.add_term(label, Rational(1));
  return v;
}

Rational FockVector::coefficient(const FockLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add_term(const FockLabel& label, const Rational& c) {
  if (label.size() != rank_) throw std::invalid_argument("FockVector: label rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, x] : terms_) x *= c;
  return *this;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != Rational(1)) os << mag << "*";
    os << label_to_string(l);
  }
  return os.str();
}

namespace {

class VectorParser {
public:
  explicit VectorParser(std::string_view s) : s_(s) {}

  FockVector run(std::size_t rank_hint) {
    std::vector<std::pair<FockLabel, Rational>> terms;
    skip();
    Rational sign(1);
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? Rational(-1) : Rational(1);
    terms.push_back(term(sign));
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-' ? Rational(-1) : Rational(1)));
    }
    std::size_t rank = rank_hint ? rank_hint : terms.front().first.size();
    FockVector v(rank);
    for (auto& [l, c] : terms) {
      if (l.size() != rank) fail("labels of different rank");
      v.add_term(l, c);
    }
    return v;
  }

private:
  std::pair<FockLabel, Rational> term(Rational sign) {
    skip();
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') get();
      c = Rational::parse(s_.substr(start, pos_ - start));
      skip();
      if (get() != '*') fail("expected '*' after coefficient");
      skip();
    }
    return {label(), sign * c};
  }

  FockLabel label() {
    if (peek() == '[') return {partition()};
    if (peek() != '(') fail("expected '[' or '('");
    get();
    FockLabel l;
    while (true) {
      skip();
      l.push_back(partition());
      skip();
      char ch = get();
      if (ch == ')') break;
      if (ch != '|') fail("expected '|' or ')'");
    }
    return l;
  }

  Partition partition() {
    skip();
    if (get() != '[') fail("expected '['");
    Partition p;
    skip();
    if (peek() == ']') {
      get();
      return p;
    }
    while (true) {
      skip();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      if (start == pos_) fail("expected a positive part");
      auto part = std::stoll(std::string(s_.substr(start, pos_ - start)));
      if (part <= 0) fail("parts must be positive");
      p.push_back(part);
      skip();
      char ch = get();
      if (ch == ']') break;
      if (ch != ',') fail("expected ',' or ']'");
    }
    std::sort(p.rbegin(), p.rend());
    return p;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("vector parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// b_n on a single basis label; returns the coefficient and the new label.
bool mode_on_label(std::int64_t n, std::size_t ch, FockLabel& label, Rational& coeff) {
  Partition& p = label[ch];
  if (n < 0) {
    const std::int64_t m = -n;
    p.insert(std::upper_bound(p.begin(), p.end(), m, std::greater<>()), m);
    return true;
  }
  auto range = std::equal_range(p.begin(), p.end(), n, std::greater<>());
  const auto mult = static_cast<std::int64_t>(range.second - range.first);
  if (mult == 0) return false;
  p.erase(range.first);
  coeff *= Rational(n * mult);
  return true;
}

void check_channel(std::size_t channel, std::size_t rank) {
  if (channel < 1 || channel > rank) throw std::invalid_argument("channel out of range");
}

// Adds w * b_a b_b |label> to out (b_b applied first).
void add_pair(FockVector& out, const FockLabel& label, std::size_t ch, std::int64_t a, std::int64_t b,
              const Rational& w) {
  if (w.is_zero()) return;
  FockLabel l = label;
  Rational c = w;
  if (!mode_on_label(b, ch, l, c)) return;
  if (!mode_on_label(a, ch, l, c)) return;
  out.add_term(l, c);
}

}  // namespace

FockVector FockVector::parse(std::string_view text, std::size_t rank_hint) { return VectorParser(text).run(rank_hint); }

void VoaConfig::validate() const {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (embedding < 1 || embedding > rank) throw std::invalid_argument("embedding index must lie in 1..rank");
}

FockVector apply_mode(std::int64_t n, std::size_t channel, const FockVector& v) {
  if (n == 0) throw std::invalid_argument("b(0) is central; it acts as a scalar, not as a mode");
  check_channel(channel, v.rank());
  FockVector out(v.rank());
  for (const auto& [label, c] : v.terms()) {
    FockLabel l = label;
    Rational x = c;
    if (mode_on_label(n, channel - 1, l, x)) out.add_term(l, x);
  }
  return out;
}

FockVector apply_quadratic(const QuadraticElement& a, const FockVector& v, std::size_t channel) {
  check_channel(channel, v.rank());
  const std::size_t ch = channel - 1;
  FockVector out = a.central() * v;
  for (const auto& [m, c] : a.linear().terms()) out += c * apply_mode(m, channel, v);
  for (const auto& [label, x] : v.terms()) {
    const Partition& parts = label[ch];
    for (const auto& [d, s] : a.quadratic()) {
      auto weight = [&s, &x](std::int64_t lo, std::int64_t hi) {
        Rational w = s.value(lo) * x;
        return lo == hi ? Rational(1, 2) * w : w;
      };
      // Both creators: a <= b < 0.
      for (std::int64_t b = d / 2; d < 0 && b <= -1; ++b) {
        if (d - b > b) continue;
        add_pair(out, label, ch, d - b, b, weight(d - b, b));
      }
      // One creator, one annihilator b > 0 that must be a part.
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && parts[i] == parts[i - 1]) continue;
        const std::int64_t b = parts[i];
        if (b <= d) continue;
        add_pair(out, label, ch, d - b, b, weight(d - b, b));
      }
      // Both annihilators: 0 < a <= b.
      for (std::int64_t lo = 1; 2 * lo <= d; ++lo) {
        add_pair(out, label, ch, lo, d - lo, weight(lo, d - lo));
      }
    }
  }
  return out;
}

FockVector apply_quadratic(const QuadraticElement& a, const FockVector& v, const VoaConfig& config) {
  config.validate();
  if (config.rank != v.rank()) throw std::invalid_argument("vector rank differs from the configuration");
  return apply_quadratic(a, v, config.embedding);
}

FockVector virasoro(std::int64_t p, const FockVector& v, const VoaConfig& config) {
  return apply_quadratic(tau_hat(p), v, config);
}

FockVector virasoro_total(std::int64_t p, const FockVector& v) {
  FockVector out(v.rank());
  const QuadraticElement l = tau_hat(p);
  for (std::size_t ch = 1; ch <= v.rank(); ++ch) out += apply_quadratic(l, v, ch);
  return out;
}

Rational measure_central_charge(std::int64_t p, const std::vector<FockVector>& vectors, const VoaConfig& config,
                                bool all_channels) {
  if (p >= -1 && p <= 1) throw std::invalid_argument("central charge needs p outside {-1, 0, 1}");
  if (vectors.empty()) throw std::invalid_argument("no test vectors");
  auto L = [&](std::int64_t q, const FockVector& v) { return all_channels ? virasoro_total(q, v) : virasoro(q, v, config); };
  const Rational norm = Rational(p * p * p - p, 12);
  std::optional<Rational> c;
  for (const auto& v : vectors) {
    if (v.is_zero()) throw std::invalid_argument("zero test vector");
    FockVector w = L(p, L(-p, v)) - L(-p, L(p, v)) - Rational(2 * p) * L(0, v);
    const auto& [label, x] = *v.terms().begin();
    Rational lambda = w.coefficient(label) / x;
    if (w != lambda * v) throw std::runtime_error("test vector is not an eigenvector: " + v.to_string());
    Rational here = lambda / norm;
    if (c && *c != here) throw std::runtime_error("inconsistent central charge at " + v.to_string());
    c = here;
  }
  return *c;
}

FockVector exp_apply(const QuadraticElement& a, const FockVector& v, std::size_t channel) {
  if (!a.central().is_zero()) throw std::invalid_argument("exp: central part has no rational exponential");
  bool lowering = true;
  for (const auto& [m, c] : a.linear().terms()) {
    if (m < 0) throw std::invalid_argument("exp: creation mode b(" + std::to_string(m) + ") is not locally nilpotent");
  }
  for (const auto& [d, s] : a.quadratic()) {
    if (d <= 0) lowering = false;
    for (std::int64_t lo = d + 1; d < 0 && lo <= -1; ++lo) {
      if (!s.value(lo).is_zero()) {
        throw std::invalid_argument("exp: degree-raising diagonal " + std::to_string(d) + " is not locally nilpotent");
      }
    }
  }
  std::int64_t cap = 256;
  if (lowering) {
    cap = 1;
    for (const auto& [label, c] : v.terms()) cap = std::max(cap, degree(label) + 1);
  }
  FockVector result = v;
  FockVector term = v;
  for (std::int64_t k = 1; !term.is_zero(); ++k) {
    if (k > cap) throw std::invalid_argument("exp: element is not locally nilpotent on this vector");
    term = Rational(1, k) * apply_quadratic(a, term, channel);
    result += term;
  }
  return result;
}

FockVector exp_torus(const QuadraticElement& a, const Rational& base, const FockVector& v, std::size_t channel) {
  if (!a.linear().is_zero()) throw std::invalid_argument("torus action needs a number-operator combination");
  for (const auto& [d, s] : a.quadratic()) {
    if (d != 0) throw std::invalid_argument("torus action needs offset-0 diagonals only");
  }
  FockVector out(v.rank());
  for (const auto& [label, x] : v.terms()) {
    FockVector b = FockVector::basis(label);
    Rational k = apply_quadratic(a, b, channel).coefficient(label);
    if (!k.is_integer()) throw std::invalid_argument("eigenvalue " + k.to_string() + " is not an integer");
    out.add_term(label, x * base.pow(k.to_int64()));
  }
  return out;
}

std::vector<Partition> partitions(std::int64_t n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<FockLabel> graded_basis(std::int64_t d, std::size_t rank) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<FockLabel> out;
  FockLabel cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t left) {
    if (cur.size() + 1 == rank) {
      for (auto& p : partitions(left)) {
        cur.push_back(p);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      for (auto& p : partitions(k)) {
        cur.push_back(p);
        rec(left - k);
        cur.pop_back();
      }
    }
  };
  rec(d);
  return out;
}

AdmissibilityReport check_admissibility(const VoaConfig& config, std::int64_t max_index, std::int64_t max_degree) {
  config.validate();
  for (std::int64_t i = 1; i <= max_index; ++i) {
    const QuadraticElement number = QuadraticElement::pair(-i, i);
    for (std::int64_t d = 0; d <= max_degree; ++d) {
      for (const auto& label : graded_basis(d, config.rank)) {
        const auto& p = label[config.embedding - 1];
        const auto mult = std::count(p.begin(), p.end(), i);
        FockVector b = FockVector::basis(label);
        if (apply_quadratic(number, b, config) != Rational(i * mult) * b) {
          return {false, "i=" + std::to_string(i) + " at " + label_to_string(label)};
        }
      }
    }
  }
  return {};
}

}  // namespace osc
