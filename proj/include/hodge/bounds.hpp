#pragma once

// Upper bounds on the dimension of the image of a period map with a given
// generic period datum:
//
//   * Griffiths transversality: dim <= h_inf^1.
//   * Carlson-Toledo: dim <= m_CT, the largest abelian subspace of g^{-1,1}.
//   * Hodge locus: in level >= 3 with G^der Q-simple,
//       dim <= m_HL = inf over strict Hodge subdata (M, D_M) of
//                     (dim D - dim D_M) - 1.
//     Two explicit subdata give upper estimates for m_HL: the stabilizer of a
//     Hodge vector in V^{n,n} (even weight 2n) and the splitting along a
//     rational symplectic plane (odd weight).

#include "hodge/bigint.hpp"
#include "hodge/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

enum class SubdatumKind { OrthogonalVectorStabilizer, SymplecticPlaneSplitting };

std::string_view subdatum_kind_name(SubdatumKind kind);

/// A constructed strict Hodge subdatum, described by its codimension in D.
struct SubdatumWitness {
  SubdatumKind kind;
  /// The Hodge number h^{r,s} used by the symplectic construction.
  std::optional<std::pair<std::int64_t, std::int64_t>> rs;
  /// dim D - dim D_M from the closed form in the Hodge numbers.
  BigInt codim;
  /// Same quantity from the real group dimension chain.
  BigInt codim_group_route;
  std::string description;

  /// Upper estimate for m_HL: codim - 1.
  BigInt bound() const { return codim - 1; }
};

/// Even weight 2n, n >= 2, h^{n,n} != 0: codim = sum_{i=1}^n h^{n-i,n+i}.
/// Errors: WrongParity, WeightTooSmall, MiddleNumberZero.
SubdatumWitness mhl_upper_orthogonal(const HodgeSignature& sig);

/// Odd weight, dim V = 2d > 2: codim = 2d - h^{r,s} - 1. With no rs given,
/// the largest h^{r,s} with r > s is used (ties: smallest r).
/// Errors: WrongParity, TooSmall, ZeroHodgeNumber, InvalidArgument (r+s != w).
SubdatumWitness mhl_upper_symplectic(const HodgeSignature& sig,
                                     std::optional<std::pair<std::int64_t, std::int64_t>> rs = std::nullopt);

enum class CtMethod { Weight4ClosedForm, BlockLowerBound };

std::string_view ct_method_name(CtMethod method);

struct CarlsonToledo {
  BigInt value;
  CtMethod method;
  /// Set when the weight-4 term h^{3,1}h^{2,2}/2 was not an integer.
  bool floored = false;
};

/// Weight 4: max{h^{3,1}h^{4,0}, floor(h^{3,1}h^{2,2}/2)}. Other weights: a
/// lower bound from explicit abelian blocks of g^{-1,1}.
CarlsonToledo carlson_toledo(const HodgeSignature& sig);

enum class SimplicityStatus { Simple, NotSimple, Unknown };

std::string_view simplicity_name(SimplicityStatus status);

struct SimplicityGuard {
  SimplicityStatus status;
  std::string reason;
};

/// Whether G^der is known to be Q-simple from dim V alone.
SimplicityGuard simplicity_guard(const HodgeSignature& sig);

enum class AdmissibilityVerdict {
  /// dim D_M + image - dim D >= 0 in level <= 2.
  TransverseLocusDense,
  /// Admissible in level >= 3: no Hodge-generic variation with these
  /// dimensions exists.
  Contradiction,
  /// dim D_M + image - dim D < 0.
  NotAdmissibleEmpty,
};

std::string_view admissibility_name(AdmissibilityVerdict verdict);

/// Errors: DimensionOrder if subdatum_dim >= domain_dim, InvalidArgument on
/// negative inputs.
AdmissibilityVerdict admissibility(const BigInt& domain_dim, const BigInt& subdatum_dim, const BigInt& image_dim,
                                   std::int64_t level);

enum class BoundSource { Griffiths, HodgeLocus, CarlsonToledo };

std::string_view bound_source_name(BoundSource source);

enum class ImageVerdict { Maximal, BelowBound, ExceedsBound };

std::string_view image_verdict_name(ImageVerdict verdict);

struct Warning {
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct BoundsReport {
  HodgeSignature signature;
  std::int64_t level;
  BigInt domain_dimension;
  InfinitesimalNumbers infinitesimal;
  BigInt griffiths_bound;

  SimplicityGuard simplicity;
  std::optional<BigInt> mhl_upper;
  std::vector<SubdatumWitness> witnesses;

  CarlsonToledo ct;
  bool ct_in_final_bound;

  /// mhl_upper present and strictly below the Carlson-Toledo figure.
  bool mhl_below_ct;

  BigInt final_bound;
  std::vector<BoundSource> legal_basis;

  std::optional<BigInt> image_dim;
  std::optional<ImageVerdict> image_verdict;

  std::vector<Warning> warnings;

  bool has_warning(std::string_view code) const;
};

/// Assemble every applicable bound for a normalized signature. The Hodge
/// locus bound is only used in level >= 3 with a simple derived group; the
/// Carlson-Toledo figure enters final_bound only in weight 4, where the
/// closed form is used; elsewhere it is an informational lower bound.
/// Never fails on a valid normalized signature.
BoundsReport report(const HodgeSignature& sig, std::optional<BigInt> image_dim = std::nullopt);

}  // namespace hodge
