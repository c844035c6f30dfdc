#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dendroid/alphabet.hpp"

namespace dendroid {

/// A finitely described permutation of a countable alphabet.
///
/// The permutation is the base map `σ` (identity on finite letters, the
/// eventual shift `Ray(r,i) ↦ Ray(r,i+d_r)` on every ray) overridden on a
/// finite patch. It is a bijection iff the patch is injective and
/// `patch(D) = σ(D)` for its domain `D`; the constructor enforces this.
///
/// Patch entries that agree with `σ` are dropped, and zero shifts are not
/// stored, so structural equality is equality of maps (plus window bound).
class FDPerm {
 public:
  using Patch = std::map<Letter, Letter>;
  using RayShift = std::map<std::string, std::int64_t>;

  /// Throws DomainError when the description is not a bijection of
  /// `alphabet`, when a patched ray letter lies outside `|index| <= window_bound`,
  /// or when a shift names an unknown ray.
  FDPerm(AlphabetSpec alphabet, Patch patch, RayShift ray_shift, std::int64_t window_bound);

  static FDPerm identity(AlphabetSpec alphabet);

  /// Product of disjoint cycles `(x0 x1 ... xk)` meaning `x0 ↦ x1 ↦ ... ↦ x0`,
  /// layered over the given ray shifts, with the smallest compatible window
  /// bound. Cycles cannot sit on a shifted ray (the result would not be a
  /// bijection); use the general constructor for spliced patches.
  static FDPerm from_cycles(AlphabetSpec alphabet, const std::vector<std::vector<Letter>>& cycles,
                            RayShift ray_shift = {});

  const AlphabetSpec& alphabet() const noexcept { return alphabet_; }
  const Patch& patch() const noexcept { return patch_; }
  /// The patch read backwards (image ↦ preimage).
  const Patch& inverse_patch() const noexcept { return inverse_; }
  const RayShift& ray_shift() const noexcept { return shift_; }
  std::int64_t window_bound() const noexcept { return window_; }

  std::int64_t shift(const std::string& ray) const;
  std::int64_t max_abs_shift() const;
  bool has_infinite_orbit() const noexcept { return !shift_.empty(); }

  /// Image of `x` under the base map `σ` alone.
  Letter base(const Letter& x) const;
  Letter base_inverse(const Letter& x) const;

  /// Unchecked evaluation; `x` must belong to the alphabet.
  Letter operator()(const Letter& x) const;

  /// Unchecked evaluation of the inverse permutation.
  Letter preimage(const Letter& y) const;

  friend bool operator==(const FDPerm&, const FDPerm&) = default;

 private:
  AlphabetSpec alphabet_;
  Patch patch_;
  Patch inverse_;
  RayShift shift_;
  std::int64_t window_ = 0;
};

/// Checked evaluation. Throws DomainError if `x` is not in the alphabet.
Letter apply(const FDPerm& p, const Letter& x);

FDPerm invert(const FDPerm& p);

/// `outer ∘ inner` (apply `inner` first). Both must share an alphabet.
FDPerm compose(const FDPerm& outer, const FDPerm& inner);

/// One tail of a ray: letters `Ray(ray, i)` with `sign(i) == end`, `|i|`
/// beyond the window bound, and `i ≡ residue (mod modulus)`.
struct RayTail {
  std::string ray;
  int end = 1;  // +1 for the +∞ end, -1 for the -∞ end
  std::int64_t residue = 0;
  std::int64_t modulus = 1;

  friend bool operator==(const RayTail&, const RayTail&) = default;
  friend auto operator<=>(const RayTail&, const RayTail&) = default;
};

std::string to_string(const RayTail& t);

/// A finite cycle, listed from its canonically smallest letter.
struct FiniteOrbit {
  std::vector<Letter> letters;

  friend bool operator==(const FiniteOrbit&, const FiniteOrbit&) = default;
};

/// A bi-infinite orbit. It arrives from the `source` tail, passes through a
/// finite stretch, and escapes along `ray` with eventual step `shift` into the
/// `sink` tail. `exceptional` lists, in orbit order, the patched letters on
/// that finite stretch.
struct InfiniteOrbit {
  std::string ray;
  std::int64_t shift = 0;
  RayTail source;
  RayTail sink;
  std::vector<Letter> exceptional;

  friend bool operator==(const InfiniteOrbit&, const InfiniteOrbit&) = default;
};

using OrbitDescriptor = std::variant<FiniteOrbit, InfiniteOrbit>;

/// Every finite letter and every patched letter lies in exactly one listed
/// finite orbit or infinite orbit; each tail of a shifted ray belongs to exactly
/// one infinite orbit. Ray letters outside the patch on `fixed_rays` are fixed
/// points and are not listed.
struct OrbitDecomposition {
  std::vector<OrbitDescriptor> orbits;
  std::vector<std::string> fixed_rays;

  std::size_t finite_count() const;
  std::size_t infinite_count() const;
};

OrbitDecomposition orbits(const FDPerm& p);

/// Orbit through a single letter. Throws DomainError for letters outside the
/// alphabet.
OrbitDescriptor orbit_of(const FDPerm& p, const Letter& x);

/// Largest `|index|` of any ray letter mentioned by the patch (0 if none).
std::int64_t patch_extent(const FDPerm& p);

}  // namespace dendroid
