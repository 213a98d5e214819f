#pragma once

// Primitive Hodge numbers of smooth degree-d hypersurfaces X in P^{n+1},
// read off the Hilbert series of the Jacobian ring
//
//   ((1 - t^{d-1}) / (1 - t))^{n+2}
//
// with h^{n-q,q}_prim equal to the coefficient of t^{(q+1)d - (n+2)}.

#include "hodge/bigint.hpp"
#include "hodge/bounds.hpp"
#include "hodge/signature.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hodge {

/// C(a, b), zero when a < b or either argument is negative.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Coefficient of t^m in ((1 - t^{d-1}) / (1 - t))^{n+2}.
/// Requires n >= 1, d >= 2, m >= 0.
BigInt milnor_coefficient(std::int64_t n, std::int64_t d, std::int64_t m);

/// Weight-n signature of primitive middle cohomology. Requires n >= 1, d >= 3.
/// Not normalized when d < n + 2 (then h^{n,0} = 0).
HodgeSignature primitive_hodge_numbers(std::int64_t n, std::int64_t d);

/// dim P(H^0(O(d))) - dim PGL_{n+2} = C(n+1+d, d) - 1 - ((n+2)^2 - 1).
BigInt moduli_dimension(std::int64_t n, std::int64_t d);

/// Primitive h^{2,2} of a sextic fourfold as commonly quoted in the
/// literature. The Jacobian ring gives 1751; the report carries both.
inline const BigInt kSexticFourfoldQuotedH22 = 1755;

enum class Maximality { Sharp, NotSharp };

std::string_view maximality_name(Maximality m);

struct HypersurfaceReport {
  std::int64_t n;
  std::int64_t d;
  /// Weight n, as computed (possibly with h^{n,0} = 0).
  HodgeSignature primitive;
  BigInt moduli_dim;
  /// h^{n-1,1}_prim, for n >= 1 (h^{0,1} when n = 1).
  BigInt h_n1_1;
  /// Image dimension of the period map of the universal family; only for
  /// n even >= 4 and d = n + 2.
  std::optional<BigInt> image_dim;
  /// Bounds for the normalized primitive signature; absent when the
  /// primitive part is a single middle block.
  std::optional<BoundsReport> bounds;
  std::optional<Maximality> maximality;
  std::vector<Warning> warnings;

  bool has_warning(std::string_view code) const;
};

/// Errors: InvalidArgument unless n >= 1 and d >= 3.
HypersurfaceReport hypersurface_report(std::int64_t n, std::int64_t d);

/// The universal family of degree n+2 hypersurfaces, n even >= 4: the period
/// image has dimension h^{n-1,1}, compared against the bounds.
/// Errors: BadN.
HypersurfaceReport universal_family_report(std::int64_t n);

}  // namespace hodge
