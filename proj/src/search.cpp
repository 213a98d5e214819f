#include "hodge/report.hpp"

#include <algorithm>
#include <thread>

namespace hodge {

std::optional<SearchPredicate> parse_predicate(std::string_view name) {
  if (name == "mhl-lt-ct") return SearchPredicate::MhlLessThanCt;
  if (name == "level-ge-3") return SearchPredicate::LevelAtLeast3;
  if (name == "sharp-candidates") return SearchPredicate::SharpCandidates;
  return std::nullopt;
}

std::string_view predicate_name(SearchPredicate predicate) {
  switch (predicate) {
    case SearchPredicate::MhlLessThanCt: return "mhl-lt-ct";
    case SearchPredicate::LevelAtLeast3: return "level-ge-3";
    case SearchPredicate::SharpCandidates: return "sharp-candidates";
  }
  return "unknown";
}

bool matches(SearchPredicate predicate, const BoundsReport& report) {
  switch (predicate) {
    case SearchPredicate::MhlLessThanCt:
      return report.mhl_below_ct;
    case SearchPredicate::LevelAtLeast3:
      return report.level >= 3;
    case SearchPredicate::SharpCandidates:
      // The Hodge locus bound alone decides final_bound.
      return report.legal_basis.size() == 1 && report.legal_basis.front() == BoundSource::HodgeLocus;
  }
  return false;
}

namespace {

// Fills h^{p,w-p} for p = w, w-1, ..., down to the middle; the lower half
// mirrors the upper half, so the dense list is ordered by these choices.
class Enumerator {
 public:
  Enumerator(std::int64_t weight, std::int64_t max_total, const std::function<bool(const HodgeSignature&)>& visit)
      : weight_(weight), max_total_(max_total), visit_(visit) {}

  void run() {
    values_.clear();
    recurse(weight_, 0);
  }

 private:
  // Returns false to stop.
  bool recurse(std::int64_t p, std::int64_t used) {
    const std::int64_t mirror = weight_ - p;
    if (p < mirror) {
      std::map<std::int64_t, BigInt> numbers;
      for (const auto& [idx, h] : values_) {
        numbers.emplace(idx, h);
        numbers.emplace(weight_ - idx, h);
      }
      return visit_(HodgeSignature(weight_, std::move(numbers)));
    }
    const std::int64_t cost = p == mirror ? 1 : 2;
    const std::int64_t lowest = p == weight_ ? 1 : 0;
    for (std::int64_t h = lowest; used + cost * h <= max_total_; ++h) {
      if (h != 0) values_.emplace_back(p, h);
      const bool go_on = recurse(p - 1, used + cost * h);
      if (h != 0) values_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  std::int64_t weight_;
  std::int64_t max_total_;
  const std::function<bool(const HodgeSignature&)>& visit_;
  std::vector<std::pair<std::int64_t, std::int64_t>> values_;
};

}  // namespace

void enumerate_signatures(std::int64_t weight, std::int64_t max_total,
                          const std::function<bool(const HodgeSignature&)>& visit) {
  if (weight < 1) throw HodgeError(ErrorCode::InvalidArgument, "search weight must be >= 1");
  Enumerator(weight, max_total, visit).run();
}

void search(const SearchOptions& options, const std::function<void(const BoundsReport&)>& emit) {
  if (options.max_total > kSearchMaxTotal) {
    throw HodgeError(ErrorCode::CapExceeded, "--max-total " + std::to_string(options.max_total) +
                                                 " exceeds the search cap " + std::to_string(kSearchMaxTotal));
  }
  if (options.max_total < 0) throw HodgeError(ErrorCode::InvalidArgument, "--max-total must be nonnegative");
  if (options.limit && *options.limit == 0) return;

  const unsigned threads =
      options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::size_t kBatch = 2048;

  std::size_t emitted = 0;
  std::vector<HodgeSignature> batch;
  bool done = false;

  auto flush = [&] {
    std::vector<std::optional<BoundsReport>> results(batch.size());
    {
      std::vector<std::jthread> pool;
      const unsigned used = std::min<unsigned>(threads, static_cast<unsigned>(batch.size()));
      for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < batch.size(); i += used) {
            auto r = report(batch[i]);
            if (matches(options.predicate, r)) results[i] = std::move(r);
          }
        });
      }
    }
    for (auto& r : results) {
      if (!r) continue;
      emit(*r);
      if (options.limit && ++emitted >= *options.limit) {
        done = true;
        break;
      }
    }
    batch.clear();
  };

  enumerate_signatures(options.weight, options.max_total, [&](const HodgeSignature& sig) {
    batch.push_back(sig);
    if (batch.size() >= kBatch) flush();
    return !done;
  });
  if (!done && !batch.empty()) flush();
}

std::vector<BoundsReport> search(const SearchOptions& options) {
  std::vector<BoundsReport> out;
  search(options, [&](const BoundsReport& r) { out.push_back(r); });
  return out;
}

}  // namespace hodge
