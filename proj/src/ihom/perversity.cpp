#include "jacobi/ihom/perversity.hpp"

#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi::ihom {

Perversity validate_perversity(std::vector<int> entries) {
  if (entries.empty()) throw Error(ErrorCode::InvalidPerversity, "empty perversity", 0);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (r <= 2) {
      if (entries[r] != 0)
        throw Error(ErrorCode::InvalidPerversity, "p_" + std::to_string(r) + " must be 0", static_cast<long>(r));
    } else {
      const int step = entries[r] - entries[r - 1];
      if (step != 0 && step != 1)
        throw Error(ErrorCode::InvalidPerversity, "p_" + std::to_string(r) + " must equal p_" +
                                                      std::to_string(r - 1) + " or p_" + std::to_string(r - 1) +
                                                      " + 1",
                    static_cast<long>(r));
    }
  }
  Perversity p;
  p.entries_ = std::move(entries);
  return p;
}

Perversity zero_perversity(int m) { return validate_perversity(std::vector<int>(static_cast<std::size_t>(m + 1), 0)); }

Perversity top_perversity(int m) {
  std::vector<int> e(static_cast<std::size_t>(m + 1), 0);
  for (int r = 3; r <= m; ++r) e[static_cast<std::size_t>(r)] = r - 2;
  return validate_perversity(std::move(e));
}

std::vector<Perversity> all_perversities(int m) {
  std::vector<std::vector<int>> partial{std::vector<int>(static_cast<std::size_t>(std::min(m, 2) + 1), 0)};
  for (int r = 3; r <= m; ++r) {
    std::vector<std::vector<int>> next;
    for (const auto& e : partial) {
      for (int step : {0, 1}) {
        auto f = e;
        f.push_back(e.back() + step);
        next.push_back(std::move(f));
      }
    }
    partial = std::move(next);
  }
  std::vector<Perversity> out;
  for (auto& e : partial) out.push_back(validate_perversity(std::move(e)));
  return out;
}

Perversity parse_perversity(const std::string& text, int m) {
  if (text == "zero") return zero_perversity(m);
  if (text == "top") return top_perversity(m);
  std::vector<int> e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      e.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidPerversity, "cannot read perversity entry '" + item + "'",
                  static_cast<long>(e.size()));
    }
  }
  if (static_cast<int>(e.size()) != m + 1)
    throw Error(ErrorCode::InvalidPerversity,
                "perversity needs " + std::to_string(m + 1) + " entries, got " + std::to_string(e.size()),
                static_cast<long>(e.size()));
  return validate_perversity(std::move(e));
}

std::string to_string(const Perversity& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.entries().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.entries()[i]);
  }
  return s + ")";
}

}  // namespace jacobi::ihom
