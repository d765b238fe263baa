#include "theta_root/species.hpp"

#include <algorithm>

#include "theta_root/error.hpp"

namespace theta_root {

SigmaWord SigmaWord::parse(std::string_view text) {
  std::vector<Species> letters;
  for (char c : text) {
    if (c == '0') {
      letters.push_back(Species::stack);
    } else if (c == '1') {
      letters.push_back(Species::ferrers);
    } else if (c != ',' && c != ' ') {
      throw Error(std::string("sigma letters must be 0 or 1, got '") + c + "'");
    }
  }
  return SigmaWord(std::move(letters));
}

SigmaWord SigmaWord::uniform(Species s, int length) {
  return SigmaWord(std::vector<Species>(static_cast<std::size_t>(std::max(length, 0)), s));
}

Species SigmaWord::at(int level) const {
  if (letters_.empty()) throw Error("empty sigma word");
  return letters_[static_cast<std::size_t>(std::min(level, size() - 1))];
}

SigmaWord SigmaWord::extended(int length) const {
  if (letters_.empty()) throw Error("empty sigma word");
  auto letters = letters_;
  while (static_cast<int>(letters.size()) < length) letters.push_back(letters.back());
  return SigmaWord(std::move(letters));
}

std::string SigmaWord::to_string() const {
  std::string s;
  for (auto l : letters_) s += (l == Species::stack ? '0' : '1');
  return s;
}

}  // namespace theta_root
