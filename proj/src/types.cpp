#include "minent/types.hpp"

#include <stdexcept>

namespace minent {

Distribution::Distribution(RationalVector probs) : p_(std::move(probs)) {
  if (p_.size() < 1)
    throw std::invalid_argument("distribution needs at least one entry");
  if (!all_nonnegative(p_))
    throw std::invalid_argument("distribution entry is negative");
  if (rational_sum(p_) != 1)
    throw std::invalid_argument("distribution entries must sum to exactly 1");
}

Distribution Distribution::from_strings(
    std::initializer_list<std::string_view> v) {
  RationalVector p(static_cast<Index>(v.size()));
  Index i = 0;
  for (auto s : v) p(i++) = parse_rational(s);
  return Distribution(std::move(p));
}

Distribution Distribution::from_strings(const std::vector<std::string>& v) {
  RationalVector p(static_cast<Index>(v.size()));
  Index i = 0;
  for (const auto& s : v) p(i++) = parse_rational(s);
  return Distribution(std::move(p));
}

Coupling::Coupling(RationalMatrix cells) : s_(std::move(cells)) {
  if (s_.rows() < 1 || s_.cols() < 1)
    throw std::invalid_argument("coupling needs at least one cell");
  if (!all_nonnegative(s_))
    throw std::invalid_argument("coupling cell is negative");
  if (rational_sum(s_) != 1)
    throw std::invalid_argument("coupling cells must sum to exactly 1");
}

Coupling Coupling::from_strings(
    std::initializer_list<std::initializer_list<std::string_view>> rows) {
  const Index n = static_cast<Index>(rows.size());
  if (n == 0) throw std::invalid_argument("coupling needs at least one row");
  const Index m = static_cast<Index>(rows.begin()->size());
  RationalMatrix s(n, m);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != m)
      throw std::invalid_argument("ragged coupling rows");
    Index j = 0;
    for (auto cell : row) s(i, j++) = parse_rational(cell);
    ++i;
  }
  return Coupling(std::move(s));
}

}  // namespace minent
