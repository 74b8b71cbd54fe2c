#pragma once

// Rational homology of Brieskorn-Pham links and of their Reeb quotients,
// plus the classical topological classifiers.
//
// The functions here take plain exponent spans because they are applied to
// sub-links, which may have only two exponents.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brieskorn/arith.hpp"

namespace brieskorn {

/// Milnor-Orlik alternating subset sum
///   sum over I_t subset of I_s of (-1)^{s-t} prod_{I_t} a_i / lcm_{I_t} a_i,
/// which is the middle Betti number of the link (the reduced H_0 rank for a
/// two-exponent torus link).
Integer middle_betti(std::span<const std::int64_t> a);

/// Betti numbers of the quotient orbifold L(a)/S^1 over Q.
struct QuotientBetti {
  std::vector<std::int64_t> ranks;  // b_0 .. b_{2q}
  std::int64_t chi = 0;

  int complex_dim() const { return static_cast<int>(ranks.size() - 1) / 2; }
  bool operator==(const QuotientBetti&) const = default;
};

QuotientBetti quotient_betti(std::span<const std::int64_t> a);

/// Euler characteristic of the Reeb quotient.
std::int64_t chi_s1(std::span<const std::int64_t> a);

/// Connected components of the gcd graph, each sorted, in order of their
/// smallest vertex.
std::vector<std::vector<std::size_t>> gcd_components(std::span<const std::int64_t> a);

bool is_rational_homology_sphere(std::span<const std::int64_t> a);
bool is_homotopy_sphere(std::span<const std::int64_t> a);

struct Dim5Type {
  enum class Tag { Sphere5, ConnectedSumS2xS3, RationalHomologySphere, Unclassified };

  Tag tag = Tag::Unclassified;
  std::int64_t count = 0;   // number of S^2 x S^3 summands
  std::string name;         // Smale manifold label such as "M3", or "Unknown"
  std::int64_t middle_rank = 0;

  /// Short label used in tables, e.g. "S5", "2(S2xS3)", "M3", "2M3".
  std::string label() const;
  static Dim5Type from_label(const std::string& label, std::int64_t middle_rank);

  bool operator==(const Dim5Type&) const = default;
};

Dim5Type diffeo_type_dim5(std::span<const std::int64_t> a);

struct Signature7 {
  std::int64_t sigma = 0;
  /// sigma/8 mod 28 in [0, 28), present for homotopy spheres.
  std::optional<std::int64_t> exotic_class;

  bool operator==(const Signature7&) const = default;
};

inline constexpr std::int64_t kDefaultLatticeBudget = 1'000'000'000;

/// Signature of the Milnor fibre of a five-exponent Brieskorn-Pham
/// polynomial by direct count over the open lattice box 0 < x_j < a_j.
/// The outer coordinate is sharded across `jobs` threads.
Signature7 milnor_signature_dim7(std::span<const std::int64_t> a,
                                 std::int64_t budget = kDefaultLatticeBudget, unsigned jobs = 1);

}  // namespace brieskorn
