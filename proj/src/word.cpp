#include "dendroid/word.hpp"

#include <algorithm>

namespace dendroid {

SignedWord SignedWord::generator(std::string state, int exponent) {
  return SignedWord{{Syllable{std::move(state), exponent}}};
}

SignedWord reduce(SignedWord w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables.size());
  for (auto& s : w.syllables) {
    if (!out.empty() && out.back().state == s.state && out.back().exponent == -s.exponent) {
      out.pop_back();
    } else {
      out.push_back(std::move(s));
    }
  }
  return SignedWord{std::move(out)};
}

SignedWord inverse(const SignedWord& w) {
  SignedWord out;
  out.syllables.reserve(w.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
    out.syllables.push_back(Syllable{it->state, -it->exponent});
  }
  return out;
}

SignedWord operator*(const SignedWord& a, const SignedWord& b) {
  SignedWord out = a;
  out.syllables.insert(out.syllables.end(), b.syllables.begin(), b.syllables.end());
  return reduce(std::move(out));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.emplace_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SignedWord parse_signed_word(std::string_view text) {
  SignedWord w;
  for (const auto& tok : split_list(text)) {
    if (tok == kIdentity) continue;
    std::string_view name = tok;
    int exponent = 1;
    if (auto caret = name.find('^'); caret != std::string_view::npos) {
      const std::string_view exp = name.substr(caret + 1);
      if (exp == "-1") {
        exponent = -1;
      } else if (exp != "1" && exp != "+1") {
        throw DomainError("unsupported exponent in '" + tok + "' (use ^-1)");
      }
      name = name.substr(0, caret);
    }
    if (!is_identifier(name) || name == kIdentity) {
      throw DomainError("invalid state name in word: '" + tok + "'");
    }
    w.syllables.push_back(Syllable{std::string(name), exponent});
  }
  return w;
}

std::string to_string(const SignedWord& w) {
  if (w.empty()) return std::string(kIdentity);
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ',';
    out += s.state;
    if (s.exponent < 0) out += "^-1";
  }
  return out;
}

long exponent_sum(const SignedWord& w, std::string_view state) {
  long sum = 0;
  for (const auto& s : w.syllables) {
    if (s.state == state) sum += s.exponent;
  }
  return sum;
}

std::string to_string(const LevelWord& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ',';
    out += to_string(x);
  }
  return out;
}

}  // namespace dendroid
