#pragma once

#include "bsurf/solution.hpp"

#include <string>

namespace bsurf {

struct SectorConstants {
  long long c0 = 0;  // largest weight of a fundamental surface on a sector
  long long k = 0;   // number of fundamental surfaces
  long long c = 0;   // k * c0
};

SectorConstants sector_constants(const std::vector<Weights>& fundamentals);

struct WeightCeiling {
  Integer k_base = 2;          // K
  std::vector<Integer> tower;  // K_1 .. K_k with K_i = K^(10^i)
  const Integer& k_star() const { return tower.back(); }
};

// Refuses towers whose top exponent would exceed this many bits of output.
constexpr unsigned long long kTowerBitLimit = 1ULL << 22;

WeightCeiling weight_ceiling(const Integer& k_base, int levels);

struct CeilingParams {
  Integer r_max = 1, s0 = 1, s1 = 1;
};

// Defaults: every parameter is the longest sector boundary of B, at least 1.
CeilingParams default_ceiling_params(const BranchedSurface& b);

// Smallest K >= 2 with K^10 > 4 (r_max C + s0 s1 C^2).
Integer choose_K(const Integer& c, const CeilingParams& p);

extern const char* const kChooseKRule;

struct GenusBoundCertificate {
  std::string name;
  std::vector<Weights> fundamentals;
  std::vector<Rational> chis;
  long long coordinate_bound = 0;
  Integer completeness_bound = 0;
  SectorConstants constants;
  CeilingParams params;
  bool k_chosen = true;  // false when K was supplied
  WeightCeiling ceiling;
  Rational sum_abs_chi = 0;
  Integer genus_bound = 0;
  std::vector<std::string> caveats;
};

Integer genus_from(const Integer& k_star, const Rational& sum_abs_chi);

GenusBoundCertificate genus_bound(const BranchedSurface& b, long long coordinate_bound, std::optional<Integer> k = std::nullopt,
                                  std::optional<CeilingParams> params = std::nullopt);

} // namespace bsurf
