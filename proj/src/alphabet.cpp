#include "dendroid/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace dendroid {

namespace {

void sort_unique_checked(std::vector<std::string>& ids, const char* what) {
  for (const auto& id : ids) {
    if (!is_identifier(id)) {
      throw DomainError(std::string("invalid ") + what + " identifier '" + id + "'");
    }
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw DomainError(std::string("duplicate ") + what + " identifier");
  }
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Letter Letter::fin(std::string name) { return Letter(Kind::Fin, std::move(name), 0); }

Letter Letter::ray(std::string ray, std::int64_t index) {
  return Letter(Kind::Ray, std::move(ray), index);
}

Letter Letter::shifted(std::int64_t d) const {
  if (is_fin()) return *this;
  return Letter(Kind::Ray, id_, index_ + d);
}

std::string to_string(const Letter& x) {
  if (x.is_fin()) return x.id();
  return x.id() + ":" + std::to_string(x.index());
}

std::ostream& operator<<(std::ostream& os, const Letter& x) { return os << to_string(x); }

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ':' || c == ',' || c == '^' || c == '|' || c == '"' || c == ' ' ||
           c == '\t' || c == '\n' || c == '\r';
  });
}

AlphabetSpec::AlphabetSpec(std::vector<std::string> fin_letters, std::vector<std::string> rays)
    : fin_(std::move(fin_letters)), rays_(std::move(rays)) {
  sort_unique_checked(fin_, "letter");
  sort_unique_checked(rays_, "ray");
  for (const auto& r : rays_) {
    if (std::binary_search(fin_.begin(), fin_.end(), r)) {
      throw DomainError("identifier '" + r + "' is both a letter and a ray");
    }
  }
  if (fin_.empty() && rays_.empty()) throw DomainError("alphabet has no letters");
}

bool AlphabetSpec::has_fin(std::string_view name) const {
  return std::binary_search(fin_.begin(), fin_.end(), name, std::less<>{});
}

bool AlphabetSpec::has_ray(std::string_view name) const {
  return std::binary_search(rays_.begin(), rays_.end(), name, std::less<>{});
}

bool AlphabetSpec::contains(const Letter& x) const {
  return x.is_fin() ? has_fin(x.id()) : has_ray(x.id());
}

void AlphabetSpec::require(const Letter& x) const {
  if (!contains(x)) throw DomainError("letter '" + to_string(x) + "' is not in the alphabet");
}

Letter AlphabetSpec::parse(std::string_view text) const {
  if (has_fin(text)) return Letter::fin(std::string(text));
  if (auto colon = text.rfind(':'); colon != std::string_view::npos) {
    std::string_view ray = text.substr(0, colon);
    std::int64_t index = 0;
    if (has_ray(ray) && parse_int(text.substr(colon + 1), index)) {
      return Letter::ray(std::string(ray), index);
    }
  }
  std::int64_t index = 0;
  if (rays_.size() == 1 && parse_int(text, index)) return Letter::ray(rays_.front(), index);
  throw DomainError("cannot parse letter '" + std::string(text) + "'");
}

std::vector<Letter> window(const AlphabetSpec& spec, std::int64_t radius) {
  std::vector<Letter> out;
  out.reserve(spec.fin_letters().size() +
              spec.rays().size() * static_cast<std::size_t>(2 * std::max<std::int64_t>(radius, 0) + 1));
  for (const auto& f : spec.fin_letters()) out.push_back(Letter::fin(f));
  for (const auto& r : spec.rays()) {
    for (std::int64_t i = -radius; i <= radius; ++i) out.push_back(Letter::ray(r, i));
  }
  return out;
}

}  // namespace dendroid
