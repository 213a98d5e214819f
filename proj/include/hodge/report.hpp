#pragma once

// Structured and human-readable rendering of reports, Hodge-number list
// parsing, and enumeration of signatures.

#include "hodge/bounds.hpp"
#include "hodge/hypersurfaces.hpp"
#include "hodge/signature.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hodge {

inline constexpr std::string_view kSchemaVersion = "hodgebound.report/1";

enum class OutputFormat { Text, Json };

/// One report as an ordered JSON tree. All integers are decimal strings.
class ReportDocument {
 public:
  explicit ReportDocument(nlohmann::ordered_json body) : body_(std::move(body)) {}

  static ReportDocument parse(std::string_view text);

  const nlohmann::ordered_json& body() const noexcept { return body_; }

  /// Pretty JSON (indent 2), no trailing newline.
  std::string to_json() const;
  /// Single-line JSON, for streams of documents.
  std::string to_json_line() const;
  std::string to_text() const;
  std::string render(OutputFormat format) const;

 private:
  nlohmann::ordered_json body_;
};

nlohmann::ordered_json signature_json(const HodgeSignature& sig);
nlohmann::ordered_json bounds_json(const BoundsReport& report);
nlohmann::ordered_json warnings_json(const std::vector<Warning>& warnings);

/// `analyze` document: input echo, normalization warnings, bounds.
ReportDocument analyze_document(const HodgeSignature& input, const HodgeSignature& normalized,
                                const BoundsReport& report, const std::vector<Warning>& extra_warnings);

ReportDocument hypersurface_document(const HypersurfaceReport& report);

ReportDocument admissibility_document(const BigInt& domain_dim, const BigInt& subdatum_dim, const BigInt& image_dim,
                                      std::int64_t level, AdmissibilityVerdict verdict);

/// Parse `--hodge`: either a dense comma list of weight+1 entries ordered
/// h^{w,0} first, or sparse `p:value` pairs. Throws ParseError with the
/// character position of the offending token.
HodgeSignature parse_hodge_list(std::int64_t weight, std::string_view text);

/// Parse a nonnegative decimal integer; throws ParseError.
BigInt parse_nonnegative(std::string_view text, std::string_view what);

// ---------------------------------------------------------------------------
// Search

enum class SearchPredicate { MhlLessThanCt, LevelAtLeast3, SharpCandidates };

std::optional<SearchPredicate> parse_predicate(std::string_view name);
std::string_view predicate_name(SearchPredicate predicate);

/// Largest total dimension accepted by search.
inline constexpr std::int64_t kSearchMaxTotal = 64;

bool matches(SearchPredicate predicate, const BoundsReport& report);

/// Normalized signatures of the given weight with dim V <= max_total, in
/// lexicographic order of the dense list h^{w,0}, h^{w-1,1}, ... Stops when
/// `visit` returns false.
void enumerate_signatures(std::int64_t weight, std::int64_t max_total,
                          const std::function<bool(const HodgeSignature&)>& visit);

struct SearchOptions {
  std::int64_t weight;
  std::int64_t max_total;
  SearchPredicate predicate;
  std::optional<std::size_t> limit;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Reports of the matching signatures, in enumeration order. Candidates are
/// evaluated in parallel batches; `emit` sees results in deterministic order.
/// Throws CapExceeded when max_total > kSearchMaxTotal.
void search(const SearchOptions& options, const std::function<void(const BoundsReport&)>& emit);

std::vector<BoundsReport> search(const SearchOptions& options);

}  // namespace hodge
