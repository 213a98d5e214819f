#include "hodge/hypersurfaces.hpp"

#include <algorithm>

namespace hodge {

std::string_view maximality_name(Maximality m) { return m == Maximality::Sharp ? "sharp" : "not-sharp"; }

bool HypersurfaceReport::has_warning(std::string_view code) const {
  return std::any_of(warnings.begin(), warnings.end(), [code](const Warning& w) { return w.code == code; });
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

BigInt milnor_coefficient(std::int64_t n, std::int64_t d, std::int64_t m) {
  if (n < 1 || d < 2 || m < 0) {
    throw HodgeError(ErrorCode::InvalidArgument, "milnor_coefficient needs n >= 1, d >= 2, m >= 0");
  }
  // (1 - t^{d-1})^{n+2} (1 - t)^{-(n+2)}
  //   = sum_k (-1)^k C(n+2, k) t^{k(d-1)} sum_i C(i + n+1, n+1) t^i
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= n + 2 && k * (d - 1) <= m; ++k) {
    const BigInt term = binomial(n + 2, k) * binomial(m - k * (d - 1) + n + 1, n + 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

HodgeSignature primitive_hodge_numbers(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 3) {
    throw HodgeError(ErrorCode::InvalidArgument, "hypersurface needs n >= 1 and d >= 3");
  }
  std::map<std::int64_t, BigInt> numbers;
  for (std::int64_t q = 0; q <= n; ++q) {
    const std::int64_t m = (q + 1) * d - (n + 2);
    if (m >= 0) numbers.emplace(n - q, milnor_coefficient(n, d, m));
  }
  return HodgeSignature(n, std::move(numbers));
}

BigInt moduli_dimension(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 3) {
    throw HodgeError(ErrorCode::InvalidArgument, "hypersurface needs n >= 1 and d >= 3");
  }
  return binomial(n + 1 + d, d) - 1 - (BigInt(n + 2) * (n + 2) - 1);
}

namespace {

HypersurfaceReport build(std::int64_t n, std::int64_t d, bool universal) {
  HodgeSignature primitive = primitive_hodge_numbers(n, d);
  std::vector<Warning> warnings;

  // Hodge-Tate primitive cohomology (a single middle block) has a point as
  // period domain; there is nothing to bound.
  std::optional<HodgeSignature> normal;
  if (validate(primitive).has(ErrorCode::ZeroWeight)) {
    warnings.push_back({"bounds-unavailable", "primitive cohomology is concentrated in h^{" + std::to_string(n / 2) +
                                                  "," + std::to_string(n / 2) + "}: the period domain is a point"});
  } else {
    normal = normalize(primitive);
    if (normal->weight() != primitive.weight()) {
      warnings.push_back({"normalized-tate-twist", "h^{" + std::to_string(n) +
                                                       ",0} = 0; bounds use the twist to weight " +
                                                       std::to_string(normal->weight())});
    }
  }

  const BigInt h_n1_1 = primitive.at(n - 1);
  std::optional<BigInt> image_dim;
  if (universal) image_dim = h_n1_1;

  if (n == 4 && d == 6 && primitive.at(2) != kSexticFourfoldQuotedH22) {
    warnings.push_back({"h22-quoted-value-mismatch",
                        "Jacobian ring gives primitive h^{2,2} = " + primitive.at(2).str() +
                            "; the commonly quoted value is " + kSexticFourfoldQuotedH22.str() +
                            ". Bounds use the computed value; the Hodge locus bound does not depend on it"});
  }

  std::optional<BoundsReport> bounds;
  if (normal) bounds = report(*normal, image_dim);
  std::optional<Maximality> maximality;
  if (image_dim) {
    maximality = *image_dim == bounds->final_bound ? Maximality::Sharp : Maximality::NotSharp;
  }
  return HypersurfaceReport{n,
                            d,
                            std::move(primitive),
                            moduli_dimension(n, d),
                            h_n1_1,
                            std::move(image_dim),
                            std::move(bounds),
                            maximality,
                            std::move(warnings)};
}

}  // namespace

HypersurfaceReport hypersurface_report(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 3) {
    throw HodgeError(ErrorCode::InvalidArgument, "hypersurface needs --dim >= 1 and --degree >= 3, got n=" +
                                                     std::to_string(n) + ", d=" + std::to_string(d));
  }
  return build(n, d, n >= 4 && n % 2 == 0 && d == n + 2);
}

HypersurfaceReport universal_family_report(std::int64_t n) {
  if (n < 4 || n % 2 != 0) {
    throw HodgeError(ErrorCode::BadN, "universal family statement needs n even and n >= 4, got " + std::to_string(n));
  }
  return build(n, n + 2, true);
}

}  // namespace hodge
