#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dendroid {

/// Raised when an argument lies outside the domain of an operation
/// (unknown letter, unknown state, incompatible word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point of a countable alphabet: either a named finite letter, or the
/// integer position `index` on the bi-infinite ray `id`.
///
/// Ordering is total: every finite letter precedes every ray letter, finite
/// letters compare by name, ray letters by ray name and then by index.
class Letter {
 public:
  enum class Kind : std::uint8_t { Fin = 0, Ray = 1 };

  static Letter fin(std::string name);
  static Letter ray(std::string ray, std::int64_t index);

  Kind kind() const noexcept { return kind_; }
  bool is_fin() const noexcept { return kind_ == Kind::Fin; }
  bool is_ray() const noexcept { return kind_ == Kind::Ray; }
  const std::string& id() const noexcept { return id_; }
  std::int64_t index() const noexcept { return index_; }

  /// Same ray, index moved by `d`. Finite letters are returned unchanged.
  Letter shifted(std::int64_t d) const;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  Letter(Kind kind, std::string id, std::int64_t index)
      : kind_(kind), id_(std::move(id)), index_(index) {}

  // Member order defines the canonical ordering.
  Kind kind_;
  std::string id_;
  std::int64_t index_ = 0;
};

/// `"name"` for finite letters, `"ray:index"` for ray letters.
std::string to_string(const Letter& x);
std::ostream& operator<<(std::ostream& os, const Letter& x);

/// Identifiers are nonempty and free of whitespace and of the separator
/// characters used by the word syntax (`:`, `,`, `^`, `|`, `"`).
bool is_identifier(std::string_view s) noexcept;

/// Finite presentation of a countable alphabet: finitely many named letters
/// plus finitely many bi-infinite integer rays.
class AlphabetSpec {
 public:
  AlphabetSpec(std::vector<std::string> fin_letters, std::vector<std::string> rays);

  const std::vector<std::string>& fin_letters() const noexcept { return fin_; }
  const std::vector<std::string>& rays() const noexcept { return rays_; }

  bool has_fin(std::string_view name) const;
  bool has_ray(std::string_view name) const;
  bool contains(const Letter& x) const;
  bool is_finite() const noexcept { return rays_.empty(); }

  /// Throws DomainError unless `x` belongs to this alphabet.
  void require(const Letter& x) const;

  /// Parses `"name"`, `"ray:index"`, or a bare integer when the alphabet has
  /// exactly one ray (so `"5"` means `"z:5"` on `{*} ∪ z`).
  Letter parse(std::string_view text) const;

  friend bool operator==(const AlphabetSpec&, const AlphabetSpec&) = default;

 private:
  std::vector<std::string> fin_;   // sorted
  std::vector<std::string> rays_;  // sorted
};

/// All finite letters plus `Ray(r, i)` for every ray `r` and `|i| <= radius`,
/// in canonical order.
std::vector<Letter> window(const AlphabetSpec& spec, std::int64_t radius);

}  // namespace dendroid
