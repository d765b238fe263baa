#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace theta_root {

// Decoration species attached to one level of an enriched tree.
enum class Species {
  stack = 0,    // stack polyominoes, size = rise
  ferrers = 1,  // Durfee-constrained Ferrers diagrams, size = width
};

// Level-indexed species assignment; letter i applies to tree level i.
class SigmaWord {
 public:
  SigmaWord() = default;
  explicit SigmaWord(std::vector<Species> letters) : letters_(std::move(letters)) {}

  // Parses text over {0,1}; throws Error on other characters.
  static SigmaWord parse(std::string_view text);
  static SigmaWord uniform(Species s, int length);

  const std::vector<Species>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  // Letter for `level`, repeating the last letter beyond the end.
  Species at(int level) const;

  // Pads with the last letter up to `length` letters (never shortens).
  SigmaWord extended(int length) const;

  std::string to_string() const;

  friend bool operator==(const SigmaWord&, const SigmaWord&) = default;

 private:
  std::vector<Species> letters_;
};

}  // namespace theta_root
