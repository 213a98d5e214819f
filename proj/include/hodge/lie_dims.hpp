#pragma once

// Real dimensions of the classical groups appearing as G^der(R), as the
// compact isotropy K, and as their counterparts for the constructed
// subdata. This gives a second route to every dimension that the Hodge
// numbers already determine in closed form.

#include "hodge/bigint.hpp"
#include "hodge/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

/// dim_R SO(r, s) = (r+s)(r+s-1)/2; only r + s matters.
BigInt dim_so(const BigInt& r, const BigInt& s);

/// dim_R U(m) = m^2.
BigInt dim_u(const BigInt& m);

/// dim_R Sp_{2d}(R) = d(2d+1). Throws OddInput for odd arguments.
BigInt dim_sp(const BigInt& two_d);

/// One U(h^{p,w-p}) factor of the isotropy group.
struct UnitaryFactor {
  std::int64_t p;
  BigInt size;
};

/// K = SO(h^{n,n}) x prod_i U(h^{n-i,n+i}) for orthogonal signatures and
/// K = prod_i U(h^{n+i+1,n-i}) for symplectic ones. Factors of size zero
/// are omitted from `unitary`.
struct IsotropyDescription {
  Parity parity;
  std::vector<UnitaryFactor> unitary;
  std::optional<BigInt> special_orthogonal;

  BigInt real_dimension() const;
  std::string to_string() const;
};

IsotropyDescription isotropy(const HodgeSignature& sig);

/// dim_R of G^der(R) for the period datum of sig.
BigInt group_dimension(const HodgeSignature& sig);

/// (dim_R G^der - dim_R K) / 2. Throws ParityBug if the difference is odd.
BigInt cross_check_domain_dim(const HodgeSignature& sig);

/// dim D - dim D_M for the stabilizer of a rational Hodge vector in V^{n,n},
/// from SO(r,s) / K against SO(r,s-1) / (SO(h^{n,n}-1) x prod U).
/// Requires even weight and h^{n,n} > 0.
BigInt vector_stabilizer_codim(const HodgeSignature& sig);

/// dim D - dim D_M for the splitting V = V_1 + V_1^perp along a rational
/// symplectic plane through V^{r,s} + V^{s,r}, from Sp_{2d} / K against
/// (Sp_{2d-2} x Sp_2) / (U(1) x U(h^{r,s}-1) x prod U). Requires odd weight,
/// dim V > 2 and h^{r,s} > 0.
BigInt plane_splitting_codim(const HodgeSignature& sig, std::int64_t r);

}  // namespace hodge
