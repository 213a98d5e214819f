#include "hodge/report.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace hodge {

using nlohmann::ordered_json;

namespace {

std::string str(const BigInt& x) { return x.str(); }
std::string str(std::int64_t x) { return std::to_string(x); }

ordered_json optional_str(const std::optional<BigInt>& x) { return x ? ordered_json(str(*x)) : ordered_json(nullptr); }

}  // namespace

// ---------------------------------------------------------------------------
// JSON builders

ordered_json signature_json(const HodgeSignature& sig) {
  ordered_json hodge = ordered_json::array();
  for (auto it = sig.numbers().rbegin(); it != sig.numbers().rend(); ++it) {
    hodge.push_back({{"p", str(it->first)}, {"q", str(sig.weight() - it->first)}, {"h", str(it->second)}});
  }
  return {{"weight", str(sig.weight())},
          {"parity", std::string(parity_name(sig.parity()))},
          {"dim_v", str(sig.total_dimension())},
          {"hodge", std::move(hodge)}};
}

ordered_json warnings_json(const std::vector<Warning>& warnings) {
  ordered_json out = ordered_json::array();
  for (const auto& w : warnings) out.push_back({{"code", w.code}, {"message", w.message}});
  return out;
}

namespace {

ordered_json witness_json(const SubdatumWitness& w) {
  ordered_json out;
  out["kind"] = std::string(subdatum_kind_name(w.kind));
  if (w.rs) {
    out["rs"] = {str(w.rs->first), str(w.rs->second)};
  } else {
    out["rs"] = nullptr;
  }
  out["codim"] = str(w.codim);
  out["codim_group_route"] = str(w.codim_group_route);
  out["bound"] = str(w.bound());
  out["description"] = w.description;
  return out;
}

}  // namespace

ordered_json bounds_json(const BoundsReport& r) {
  ordered_json out;
  out["signature"] = signature_json(r.signature);
  out["level"] = str(r.level);

  const auto criterion = level_at_least_3(r.signature);
  ordered_json crit;
  crit["holds"] = criterion.holds;
  crit["case"] = criterion.holds ? ordered_json(criterion.case_label) : ordered_json(nullptr);
  crit["k"] = criterion.k ? ordered_json(str(*criterion.k)) : ordered_json(nullptr);
  crit["j"] = criterion.j ? ordered_json(str(*criterion.j)) : ordered_json(nullptr);
  crit["reason"] = criterion.reason;
  out["level_at_least_3"] = std::move(crit);

  out["domain_dimension"] = str(r.domain_dimension);
  ordered_json inf = ordered_json::array();
  for (const auto& [k, h] : r.infinitesimal.nonnegative()) inf.push_back({{"k", str(k)}, {"h", str(h)}});
  out["infinitesimal_numbers"] = std::move(inf);
  if (r.signature.parity() == Parity::Orthogonal) {
    const auto rs = orthogonal_signature(r.signature);
    out["orthogonal_signature"] = {{"r", str(rs.r)}, {"s", str(rs.s)}};
  } else {
    out["orthogonal_signature"] = nullptr;
  }
  out["simplicity"] = {{"status", std::string(simplicity_name(r.simplicity.status))},
                       {"reason", r.simplicity.reason}};

  ordered_json bounds;
  bounds["griffiths"] = str(r.griffiths_bound);
  if (r.mhl_upper) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
    bounds["hodge_locus"] = {{"upper", str(*r.mhl_upper)}, {"witnesses", std::move(witnesses)}};
  } else {
    bounds["hodge_locus"] = nullptr;
  }
  bounds["carlson_toledo"] = {{"value", str(r.ct.value)},
                              {"method", std::string(ct_method_name(r.ct.method))},
                              {"floored", r.ct.floored},
                              {"in_final_bound", r.ct_in_final_bound}};
  bounds["mhl_lt_ct"] = r.mhl_below_ct;
  bounds["final_bound"] = str(r.final_bound);
  ordered_json basis = ordered_json::array();
  for (auto s : r.legal_basis) basis.push_back(std::string(bound_source_name(s)));
  bounds["legal_basis"] = std::move(basis);
  out["bounds"] = std::move(bounds);

  if (r.image_dim) {
    out["image"] = {{"dim", str(*r.image_dim)}, {"verdict", std::string(image_verdict_name(*r.image_verdict))}};
  } else {
    out["image"] = nullptr;
  }
  out["warnings"] = warnings_json(r.warnings);
  return out;
}

ReportDocument analyze_document(const HodgeSignature& input, const HodgeSignature& normalized,
                                const BoundsReport& report, const std::vector<Warning>& extra_warnings) {
  ordered_json body;
  body["schema"] = std::string(kSchemaVersion);
  body["command"] = "analyze";
  ordered_json in;
  in["signature"] = signature_json(input);
  in["image_dim"] = optional_str(report.image_dim);
  body["input"] = std::move(in);
  body["normalized"] = !(input == normalized);
  body["report"] = bounds_json(report);
  body["warnings"] = warnings_json(extra_warnings);
  return ReportDocument(std::move(body));
}

ReportDocument hypersurface_document(const HypersurfaceReport& r) {
  ordered_json body;
  body["schema"] = std::string(kSchemaVersion);
  body["command"] = "hypersurface";
  body["input"] = {{"dim", str(r.n)}, {"degree", str(r.d)}};
  ordered_json hs;
  hs["primitive"] = signature_json(r.primitive);
  hs["moduli_dim"] = str(r.moduli_dim);
  hs["h_n-1_1"] = str(r.h_n1_1);
  hs["moduli_dim_equals_h_n-1_1"] = r.moduli_dim == r.h_n1_1;
  if (r.image_dim) {
    hs["universal_family"] = {{"image_dim", str(*r.image_dim)},
                              {"final_bound", str(r.bounds->final_bound)},
                              {"verdict", std::string(maximality_name(*r.maximality))}};
  } else {
    hs["universal_family"] = nullptr;
  }
  body["hypersurface"] = std::move(hs);
  body["report"] = r.bounds ? bounds_json(*r.bounds) : ordered_json(nullptr);
  body["warnings"] = warnings_json(r.warnings);
  return ReportDocument(std::move(body));
}

ReportDocument admissibility_document(const BigInt& domain_dim, const BigInt& subdatum_dim, const BigInt& image_dim,
                                      std::int64_t level, AdmissibilityVerdict verdict) {
  ordered_json body;
  body["schema"] = std::string(kSchemaVersion);
  body["command"] = "admissible";
  body["input"] = {{"domain_dim", str(domain_dim)},
                   {"subdatum_dim", str(subdatum_dim)},
                   {"image_dim", str(image_dim)},
                   {"level", str(level)}};
  body["excess"] = str(BigInt(subdatum_dim + image_dim - domain_dim));
  body["verdict"] = std::string(admissibility_name(verdict));
  return ReportDocument(std::move(body));
}

// ---------------------------------------------------------------------------
// Rendering

ReportDocument ReportDocument::parse(std::string_view text) {
  try {
    return ReportDocument(ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw HodgeError(ErrorCode::ParseError, e.what());
  }
}

std::string ReportDocument::to_json() const { return body_.dump(2); }

std::string ReportDocument::to_json_line() const { return body_.dump(); }

namespace {

std::string scalar_text(const ordered_json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_object(const ordered_json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items()) {
    if (x.is_structured()) return false;
  }
  return true;
}

void render_text(std::ostream& os, const ordered_json& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(os, value, indent + 1);
    } else if (value.is_array()) {
      if (value.empty()) {
        os << pad << key << ": (none)\n";
        continue;
      }
      os << pad << key << ":\n";
      for (const auto& item : value) {
        if (is_flat_object(item)) {
          os << pad << "  -";
          for (const auto& [k, x] : item.items()) os << ' ' << k << '=' << scalar_text(x);
          os << '\n';
        } else if (item.is_object()) {
          os << pad << "  -\n";
          render_text(os, item, indent + 2);
        } else {
          os << pad << "  - " << scalar_text(item) << '\n';
        }
      }
    } else {
      os << pad << key << ": " << scalar_text(value) << '\n';
    }
  }
}

}  // namespace

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  render_text(os, body_, 0);
  return os.str();
}

std::string ReportDocument::render(OutputFormat format) const {
  return format == OutputFormat::Json ? to_json() : to_text();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw HodgeError(ErrorCode::ParseError, "at position " + std::to_string(pos) + ": " + what);
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_digits(std::string_view s, std::size_t pos, std::string_view what) {
  if (s.empty()) parse_fail(pos, "empty " + std::string(what));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      parse_fail(pos + i, "expected a nonnegative integer for " + std::string(what) + ", found '" +
                              std::string(1, s[i]) + "'");
    }
  }
  return BigInt(std::string(s));
}

std::int64_t parse_index(std::string_view s, std::size_t pos) {
  bool negative = false;
  std::size_t skip = 0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    skip = 1;
  }
  const BigInt magnitude = parse_digits(s.substr(skip), pos + skip, "index p");
  if (magnitude > BigInt(std::numeric_limits<std::int64_t>::max() / 4)) parse_fail(pos, "index p out of range");
  const auto v = magnitude.convert_to<std::int64_t>();
  return negative ? -v : v;
}

}  // namespace

BigInt parse_nonnegative(std::string_view text, std::string_view what) {
  std::size_t offset = 0;
  return parse_digits(trim(text, offset), offset, what);
}

HodgeSignature parse_hodge_list(std::int64_t weight, std::string_view text) {
  if (weight < 1) throw HodgeError(ErrorCode::InvalidArgument, "--weight must be >= 1");

  struct Token {
    std::string_view text;
    std::size_t pos;
  };
  std::vector<Token> tokens;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t pos = start;
    auto tok = trim(text.substr(start, end - start), pos);
    tokens.push_back({tok, pos});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }

  const bool sparse = text.find(':') != std::string_view::npos;
  if (!sparse) {
    const auto expected = static_cast<std::size_t>(weight) + 1;
    if (tokens.size() != expected) {
      parse_fail(text.size(), "dense list for weight " + std::to_string(weight) + " needs " +
                                  std::to_string(expected) + " entries, got " + std::to_string(tokens.size()));
    }
    std::vector<BigInt> values;
    for (const auto& t : tokens) values.push_back(parse_digits(t.text, t.pos, "Hodge number"));
    return HodgeSignature::from_dense(weight, values);
  }

  std::map<std::int64_t, BigInt> numbers;
  std::set<std::int64_t> seen;
  for (const auto& t : tokens) {
    const auto colon = t.text.find(':');
    if (colon == std::string_view::npos) parse_fail(t.pos, "expected p:value in sparse list");
    std::size_t p_pos = t.pos;
    const auto p = parse_index(trim(t.text.substr(0, colon), p_pos), p_pos);
    std::size_t v_pos = t.pos + colon + 1;
    auto value = parse_digits(trim(t.text.substr(colon + 1), v_pos), v_pos, "Hodge number");
    if (!seen.insert(p).second) parse_fail(t.pos, "index p=" + std::to_string(p) + " given twice");
    numbers.emplace(p, std::move(value));
  }
  return HodgeSignature(weight, std::move(numbers));
}

}  // namespace hodge
