#pragma once

#include <string>
#include <vector>

namespace jacobi::ihom {

// p_0 .. p_m with p_0 = p_1 = p_2 = 0 and unit growth steps.
class Perversity {
 public:
  const std::vector<int>& entries() const { return entries_; }
  int m() const { return static_cast<int>(entries_.size()) - 1; }
  int operator[](int r) const { return entries_[static_cast<std::size_t>(r)]; }

  friend bool operator==(const Perversity&, const Perversity&) = default;

 private:
  friend Perversity validate_perversity(std::vector<int> entries);
  std::vector<int> entries_;
};

// Throws InvalidPerversity; the error index is the first violating entry.
Perversity validate_perversity(std::vector<int> entries);

Perversity zero_perversity(int m);
// Top perversity p_r = r - 2 (clamped at 0).
Perversity top_perversity(int m);

// Every valid perversity of length m + 1, lexicographic.
std::vector<Perversity> all_perversities(int m);

// "zero", "top", or a comma-separated list such as "0,0,0,1".
Perversity parse_perversity(const std::string& text, int m);

std::string to_string(const Perversity& p);

}  // namespace jacobi::ihom
