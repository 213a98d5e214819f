#include "hodge/signature.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

namespace {

const BigInt kZero = 0;

BigInt choose2(const BigInt& a) { return a * (a - 1) / 2; }

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::AsymmetricNumbers: return "asymmetric-numbers";
    case ErrorCode::EmptySupport: return "empty-support";
    case ErrorCode::ConventionViolation: return "convention-violation";
    case ErrorCode::ZeroWeight: return "zero-weight";
    case ErrorCode::NotNormalized: return "not-normalized";
    case ErrorCode::WrongParity: return "wrong-parity";
    case ErrorCode::OddInput: return "odd-input";
    case ErrorCode::ParityBug: return "parity-bug";
    case ErrorCode::MiddleNumberZero: return "middle-number-zero";
    case ErrorCode::WeightTooSmall: return "weight-too-small";
    case ErrorCode::TooSmall: return "too-small";
    case ErrorCode::ZeroHodgeNumber: return "zero-hodge-number";
    case ErrorCode::DimensionOrder: return "dimension-order";
    case ErrorCode::BadN: return "bad-n";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown";
}

std::string_view parity_name(Parity parity) {
  return parity == Parity::Orthogonal ? "orthogonal" : "symplectic";
}

// ---------------------------------------------------------------------------
// HodgeSignature

HodgeSignature::HodgeSignature(std::int64_t weight, std::map<std::int64_t, BigInt> numbers)
    : weight_(weight) {
  if (weight < 1) {
    throw HodgeError(ErrorCode::InvalidArgument, "weight must be a positive integer, got " + std::to_string(weight));
  }
  for (auto& [p, h] : numbers) {
    if (h < 0) {
      throw HodgeError(ErrorCode::InvalidArgument, "Hodge number h^{" + std::to_string(p) + "," +
                                                       std::to_string(weight - p) + "} is negative");
    }
    if (h != 0) numbers_.emplace(p, std::move(h));
  }
}

HodgeSignature HodgeSignature::from_dense(std::int64_t weight, const std::vector<BigInt>& top_down) {
  if (weight < 0 || top_down.size() != static_cast<std::size_t>(weight) + 1) {
    throw HodgeError(ErrorCode::InvalidArgument, "dense Hodge list for weight " + std::to_string(weight) +
                                                     " needs " + std::to_string(weight + 1) + " entries, got " +
                                                     std::to_string(top_down.size()));
  }
  std::map<std::int64_t, BigInt> numbers;
  for (std::size_t i = 0; i < top_down.size(); ++i) {
    numbers.emplace(weight - static_cast<std::int64_t>(i), top_down[i]);
  }
  return HodgeSignature(weight, std::move(numbers));
}

const BigInt& HodgeSignature::at(std::int64_t p) const {
  auto it = numbers_.find(p);
  return it == numbers_.end() ? kZero : it->second;
}

BigInt HodgeSignature::total_dimension() const {
  BigInt total = 0;
  for (const auto& [p, h] : numbers_) total += h;
  return total;
}

std::vector<BigInt> HodgeSignature::dense() const {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(weight_) + 1);
  for (std::int64_t p = weight_; p >= 0; --p) out.push_back(at(p));
  return out;
}

std::string HodgeSignature::to_string() const {
  std::ostringstream os;
  os << "w=" << weight_ << " {";
  bool first = true;
  for (auto it = numbers_.rbegin(); it != numbers_.rend(); ++it) {
    if (!first) os << ", ";
    first = false;
    os << "h^{" << it->first << "," << weight_ - it->first << "}=" << it->second;
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Validation and normal form

bool ValidationResult::ok() const {
  return std::none_of(issues.begin(), issues.end(),
                      [](const ValidationIssue& i) { return i.severity == Severity::Error; });
}

bool ValidationResult::has(ErrorCode code) const {
  return std::any_of(issues.begin(), issues.end(), [code](const ValidationIssue& i) { return i.code == code; });
}

ValidationResult validate(const HodgeSignature& sig) {
  ValidationResult result;
  const auto w = sig.weight();
  const auto& numbers = sig.numbers();

  if (numbers.empty()) {
    result.issues.push_back({ErrorCode::EmptySupport, Severity::Error, "all Hodge numbers are zero"});
    return result;
  }

  bool symmetric = true;
  for (const auto& [p, h] : numbers) {
    const BigInt& mirror = sig.at(w - p);
    if (mirror != h) {
      symmetric = false;
      // Report each asymmetric pair once, from its larger index.
      if (p >= w - p || sig.at(w - p) == 0) {
        std::ostringstream os;
        os << "h^{" << p << "," << w - p << "}=" << h << " but h^{" << w - p << "," << p << "}=" << mirror;
        result.issues.push_back({ErrorCode::AsymmetricNumbers, Severity::Error, os.str()});
      }
    }
  }
  if (!symmetric) return result;

  const auto p_min = numbers.begin()->first;
  const auto p_max = numbers.rbegin()->first;
  if (p_min != 0) {
    std::ostringstream os;
    if (p_min < 0) {
      os << "support contains negative index p=" << p_min;
    } else {
      os << "h^{" << w << ",0} = 0";
    }
    if (p_max == p_min) {
      os << "; support is a single middle block, normal form would have weight 0";
      result.issues.push_back({ErrorCode::ZeroWeight, Severity::Error, os.str()});
    } else {
      os << "; a Tate twist to weight " << (p_max - p_min) << " repairs this";
      result.issues.push_back({ErrorCode::ConventionViolation, Severity::Warning, os.str()});
    }
  }
  return result;
}

bool is_normalized(const HodgeSignature& sig) {
  const auto result = validate(sig);
  return result.issues.empty();
}

void require_normalized(const HodgeSignature& sig) {
  const auto result = validate(sig);
  for (const auto& issue : result.issues) {
    if (issue.severity == Severity::Error) throw HodgeError(issue.code, issue.message);
  }
  if (!result.issues.empty()) {
    throw HodgeError(ErrorCode::NotNormalized, "signature is not in normal form: " + result.issues.front().message);
  }
}

HodgeSignature normalize(const HodgeSignature& sig) {
  const auto result = validate(sig);
  for (const auto& issue : result.issues) {
    if (issue.severity == Severity::Error) throw HodgeError(issue.code, issue.message);
  }
  const auto p_min = sig.numbers().begin()->first;
  if (p_min == 0) return sig;
  const auto p_max = sig.numbers().rbegin()->first;
  std::map<std::int64_t, BigInt> shifted;
  for (const auto& [p, h] : sig.numbers()) shifted.emplace(p - p_min, h);
  return HodgeSignature(p_max - p_min, std::move(shifted));
}

// ---------------------------------------------------------------------------
// Infinitesimal Hodge numbers

InfinitesimalNumbers::InfinitesimalNumbers(Parity parity, BigInt dim_v, std::map<std::int64_t, BigInt> nonnegative)
    : parity_(parity), dim_v_(std::move(dim_v)) {
  for (auto& [k, h] : nonnegative) {
    if (k < 0) throw HodgeError(ErrorCode::InvalidArgument, "infinitesimal numbers are keyed by k >= 0");
    if (h != 0) values_.emplace(k, std::move(h));
  }
}

const BigInt& InfinitesimalNumbers::at(std::int64_t k) const {
  auto it = values_.find(k < 0 ? -k : k);
  return it == values_.end() ? kZero : it->second;
}

std::map<std::int64_t, BigInt> InfinitesimalNumbers::expanded() const {
  std::map<std::int64_t, BigInt> out;
  for (const auto& [k, h] : values_) {
    out.emplace(k, h);
    if (k != 0) out.emplace(-k, h);
  }
  return out;
}

BigInt InfinitesimalNumbers::total() const {
  BigInt total = 0;
  for (const auto& [k, h] : values_) total += k == 0 ? h : 2 * h;
  return total;
}

namespace {

// Each formula is a sum over j of h^{p, w-p} h^{p-K, w-p+K} with p = w - j
// running over a window [p_lo, w], plus an optional diagonal block. Only p in
// the support can contribute, so iterate the support instead of j.
BigInt windowed_pair_sum(const HodgeSignature& sig, std::int64_t p_lo, std::int64_t shift) {
  BigInt sum = 0;
  const auto& numbers = sig.numbers();
  for (auto it = numbers.lower_bound(p_lo); it != numbers.end(); ++it) {
    if (it->first > sig.weight()) break;
    const BigInt& partner = sig.at(it->first - shift);
    if (partner != 0) sum += it->second * partner;
  }
  return sum;
}

// h_inf^K for K >= 0.
BigInt infinitesimal_number(const HodgeSignature& sig, std::int64_t big_k) {
  const auto w = sig.weight();
  if (sig.parity() == Parity::Orthogonal) {
    const auto n = w / 2;
    if (big_k % 2 == 0) {
      // sum_{j=0}^{n-k-1} h^{2n-j,j} h^{2n-j-2k,j+2k} + C(h^{n+k,n-k}, 2)
      const auto k = big_k / 2;
      return windowed_pair_sum(sig, n + k + 1, 2 * k) + choose2(sig.at(n + k));
    }
    // sum_{j=0}^{n-k-1} h^{2n-j,j} h^{2n-j-2k-1,j+2k+1}
    const auto k = (big_k - 1) / 2;
    return windowed_pair_sum(sig, n + k + 1, 2 * k + 1);
  }
  const auto n = (w - 1) / 2;
  if (big_k % 2 == 0) {
    // sum_{j=0}^{n-k} h^{2n+1-j,j} h^{2n+1-j-2k,j+2k}
    const auto k = big_k / 2;
    return windowed_pair_sum(sig, n + k + 1, 2 * k);
  }
  // sum_{j=0}^{n-k-1} h^{2n+1-j,j} h^{2n-j-2k,j+2k+1} + C(h^{n+k+1,n-k} + 1, 2)
  const auto k = (big_k - 1) / 2;
  const BigInt& middle = sig.at(n + k + 1);
  return windowed_pair_sum(sig, n + k + 2, 2 * k + 1) + middle * (middle + 1) / 2;
}

}  // namespace

InfinitesimalNumbers infinitesimal_numbers(const HodgeSignature& sig) {
  require_normalized(sig);
  // Every nonzero term pairs two support indices p1 >= p2 with K = p1 - p2
  // (the diagonal blocks pair p with its mirror w - p), so only those K can
  // be nonzero.
  std::map<std::int64_t, BigInt> values;
  for (const auto& [p1, h1] : sig.numbers()) {
    for (const auto& [p2, h2] : sig.numbers()) {
      if (p2 > p1) break;
      const auto big_k = p1 - p2;
      if (values.contains(big_k)) continue;
      values.emplace(big_k, infinitesimal_number(sig, big_k));
    }
  }
  return InfinitesimalNumbers(sig.parity(), sig.total_dimension(), std::move(values));
}

std::int64_t level(const HodgeSignature& sig) {
  const auto inf = infinitesimal_numbers(sig);
  return inf.nonnegative().empty() ? 0 : inf.nonnegative().rbegin()->first;
}

BigInt domain_dimension(const HodgeSignature& sig) {
  const auto inf = infinitesimal_numbers(sig);
  BigInt dim = 0;
  for (const auto& [k, h] : inf.nonnegative()) {
    if (k >= 1) dim += h;
  }
  return dim;
}

// ---------------------------------------------------------------------------
// Level >= 3 by case analysis on the Hodge numbers

LevelCriterion level_at_least_3(const HodgeSignature& sig) {
  require_normalized(sig);
  const auto w = sig.weight();
  LevelCriterion out;

  if (w % 2 == 1) {
    if (w >= 3) {
      out.holds = true;
      out.case_label = "1";
      out.reason = "odd weight " + std::to_string(w) + " >= 3";
    } else {
      out.reason = "odd weight 1";
    }
    return out;
  }

  const auto n = w / 2;
  if (n < 2) {
    out.reason = "even weight " + std::to_string(w) + " < 4";
    return out;
  }

  const auto& numbers = sig.numbers();

  // (2.a) h^{n+k,n-k} > 1 for some 2 <= k <= n.
  for (auto it = numbers.lower_bound(n + 2); it != numbers.end() && it->first <= 2 * n; ++it) {
    if (it->second > 1) {
      out.holds = true;
      out.case_label = "2.a";
      out.k = it->first - n;
      out.reason = "h^{" + std::to_string(it->first) + "," + std::to_string(w - it->first) + "} > 1";
      return out;
    }
  }

  // (2.b) k in [2, n], j in [0, n-k-1]: h^{2n-j,j} h^{2n-j-2k,j+2k} > 0.
  // (2.c) k in [1, n-1], j in [0, n-k-1]: h^{2n-j,j} h^{2n-j-2k-1,j+2k+1} > 0.
  // Both are scans over support pairs (p1, p2) with p1 = 2n-j; keep the
  // smallest (k, j) so the reported witness is deterministic.
  auto scan = [&](bool even_gap, std::int64_t k_min, std::int64_t k_max) -> std::optional<std::pair<std::int64_t, std::int64_t>> {
    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    for (const auto& [p1, h1] : numbers) {
      for (const auto& [p2, h2] : numbers) {
        if (p2 >= p1) break;
        const auto gap = p1 - p2;
        if ((gap % 2 == 0) != even_gap) continue;
        const auto k = even_gap ? gap / 2 : (gap - 1) / 2;
        if (k < k_min || k > k_max) continue;
        const auto j = 2 * n - p1;
        if (j < 0 || j > n - k - 1) continue;
        std::pair<std::int64_t, std::int64_t> cand{k, j};
        if (!best || cand < *best) best = cand;
      }
    }
    return best;
  };

  if (auto hit = scan(true, 2, n)) {
    out.holds = true;
    out.case_label = "2.b";
    out.k = hit->first;
    out.j = hit->second;
    out.reason = "h^{" + std::to_string(2 * n - hit->second) + "," + std::to_string(hit->second) + "} h^{" +
                 std::to_string(2 * n - hit->second - 2 * hit->first) + "," +
                 std::to_string(hit->second + 2 * hit->first) + "} > 0";
    return out;
  }
  if (auto hit = scan(false, 1, n - 1)) {
    out.holds = true;
    out.case_label = "2.c";
    out.k = hit->first;
    out.j = hit->second;
    out.reason = "h^{" + std::to_string(2 * n - hit->second) + "," + std::to_string(hit->second) + "} h^{" +
                 std::to_string(2 * n - hit->second - 2 * hit->first - 1) + "," +
                 std::to_string(hit->second + 2 * hit->first + 1) + "} > 0";
    return out;
  }
  out.reason = "no case of the level criterion applies";
  return out;
}

// ---------------------------------------------------------------------------

OrthogonalSignaturePair orthogonal_signature(const HodgeSignature& sig) {
  if (sig.parity() != Parity::Orthogonal) {
    throw HodgeError(ErrorCode::WrongParity, "orthogonal signature requires even weight, got " +
                                                 std::to_string(sig.weight()));
  }
  require_normalized(sig);
  const auto n = sig.weight() / 2;
  // r collects h^{n-2k-1, n+2k+1}, s collects h^{n-2k, n+2k}: split by the
  // parity of n - p.
  OrthogonalSignaturePair out{0, 0};
  for (const auto& [p, h] : sig.numbers()) {
    if ((n - p) % 2 == 0) {
      out.s += h;
    } else {
      out.r += h;
    }
  }
  return out;
}

}  // namespace hodge
