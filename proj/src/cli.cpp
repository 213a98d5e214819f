#include "hodge/cli.hpp"

#include "hodge/bounds.hpp"
#include "hodge/hypersurfaces.hpp"
#include "hodge/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace hodge {

namespace {

OutputFormat to_format(const std::string& name) { return name == "json" ? OutputFormat::Json : OutputFormat::Text; }

void print(std::ostream& out, const ReportDocument& doc, OutputFormat format) {
  out << doc.render(format);
  if (format == OutputFormat::Json) out << '\n';
}

int cmd_analyze(std::int64_t weight, const std::string& hodge_text, const std::optional<std::string>& image_text,
                OutputFormat format, std::ostream& out, std::ostream& err) {
  const HodgeSignature input = parse_hodge_list(weight, hodge_text);
  const auto validation = validate(input);
  if (!validation.ok()) {
    for (const auto& issue : validation.issues) {
      if (issue.severity == Severity::Error) err << "error [" << error_code_name(issue.code) << "]: " << issue.message << '\n';
    }
    return kExitInvalidInput;
  }
  const HodgeSignature normal = normalize(input);
  std::vector<Warning> warnings;
  if (!(normal == input)) {
    warnings.push_back({"normalized-tate-twist", "input " + input.to_string() + " twisted to " + normal.to_string()});
  }
  std::optional<BigInt> image_dim;
  if (image_text) image_dim = parse_nonnegative(*image_text, "--image-dim");

  const BoundsReport rep = report(normal, image_dim);
  print(out, analyze_document(input, normal, rep, warnings), format);
  return rep.image_verdict == ImageVerdict::ExceedsBound ? kExitInconsistentImage : kExitOk;
}

int cmd_hypersurface(std::int64_t n, std::int64_t d, OutputFormat format, std::ostream& out) {
  const auto rep = hypersurface_report(n, d);
  print(out, hypersurface_document(rep), format);
  return kExitOk;
}

int cmd_search(std::int64_t weight, std::int64_t max_total, const std::string& predicate_text,
               std::optional<std::size_t> limit, OutputFormat format, std::ostream& out, std::ostream& err) {
  const auto predicate = parse_predicate(predicate_text);
  if (!predicate) {
    err << "error [parse-error]: unknown predicate '" << predicate_text << "'\n";
    return kExitInvalidInput;
  }
  SearchOptions options{weight, max_total, *predicate, limit};
  std::size_t count = 0;
  search(options, [&](const BoundsReport& r) {
    nlohmann::ordered_json body;
    body["schema"] = std::string(kSchemaVersion);
    body["command"] = "search";
    body["predicate"] = std::string(predicate_name(*predicate));
    body["index"] = std::to_string(count);
    body["report"] = bounds_json(r);
    const ReportDocument doc(std::move(body));
    if (format == OutputFormat::Json) {
      out << doc.to_json_line() << '\n';
    } else {
      if (count > 0) out << "---\n";
      out << doc.to_text();
    }
    ++count;
  });
  if (format == OutputFormat::Text) out << "# " << count << " signature(s) matched\n";
  return kExitOk;
}

int cmd_admissible(const std::string& domain, const std::string& subdatum, const std::string& image,
                   std::int64_t lvl, OutputFormat format, std::ostream& out) {
  const BigInt domain_dim = parse_nonnegative(domain, "--domain-dim");
  const BigInt subdatum_dim = parse_nonnegative(subdatum, "--subdatum-dim");
  const BigInt image_dim = parse_nonnegative(image, "--image-dim");
  const auto verdict = admissibility(domain_dim, subdatum_dim, image_dim, lvl);
  const auto doc = admissibility_document(domain_dim, subdatum_dim, image_dim, lvl, verdict);
  if (format == OutputFormat::Json) {
    print(out, doc, format);
  } else {
    out << admissibility_name(verdict) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Period domain invariants and dimension bounds for period maps", "hodgebound"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));
  };

  std::int64_t weight = 0;
  std::string hodge_text;
  std::optional<std::string> image_text;
  auto* analyze = app.add_subcommand("analyze", "Bounds for a Hodge signature");
  analyze->add_option("--weight", weight, "Weight w >= 1")->required();
  analyze->add_option("--hodge", hodge_text, "h^{w,0},...,h^{0,w} or p:value pairs")->required();
  analyze->add_option("--image-dim", image_text, "Known dimension of a period image");
  add_format(analyze);

  std::int64_t dim = 0;
  std::int64_t degree = 0;
  auto* hyper = app.add_subcommand("hypersurface", "Primitive Hodge numbers and bounds for a smooth hypersurface");
  hyper->add_option("--dim", dim, "Dimension n of the hypersurface")->required();
  hyper->add_option("--degree", degree, "Degree d >= 3")->required();
  add_format(hyper);

  std::int64_t search_weight = 0;
  std::int64_t max_total = 0;
  std::string predicate = "level-ge-3";
  std::optional<std::size_t> limit;
  auto* search_cmd = app.add_subcommand("search", "Enumerate signatures matching a predicate");
  search_cmd->add_option("--weight", search_weight, "Weight w >= 1")->required();
  search_cmd->add_option("--max-total", max_total, "Largest dim V to enumerate")->required();
  search_cmd->add_option("--predicate", predicate, "mhl-lt-ct | level-ge-3 | sharp-candidates");
  search_cmd->add_option("--limit", limit, "Stop after this many matches");
  add_format(search_cmd);

  std::string domain_dim;
  std::string subdatum_dim;
  std::string image_dim;
  std::int64_t lvl = 0;
  auto* adm = app.add_subcommand("admissible", "Admissibility of a Hodge subdatum for a variation");
  adm->add_option("--domain-dim", domain_dim, "dim D")->required();
  adm->add_option("--subdatum-dim", subdatum_dim, "dim D_M")->required();
  adm->add_option("--image-dim", image_dim, "dim of the period image")->required();
  adm->add_option("--level", lvl, "Level of the Hodge datum")->required();
  add_format(adm);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const OutputFormat format = to_format(format_name);
  try {
    if (*analyze) return cmd_analyze(weight, hodge_text, image_text, format, out, err);
    if (*hyper) return cmd_hypersurface(dim, degree, format, out);
    if (*search_cmd) return cmd_search(search_weight, max_total, predicate, limit, format, out, err);
    if (*adm) return cmd_admissible(domain_dim, subdatum_dim, image_dim, lvl, format, out);
  } catch (const HodgeError& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::CapExceeded ? kExitCapExceeded : kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace hodge
