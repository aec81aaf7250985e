#include "minent/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace minent {

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rational literal: '" +
                                std::string(text) + "'");
  };
  if (text.empty()) fail();
  // Accept: -?digits(/digits)?  Anything else, including float syntax, is
  // rejected so exactness is never silently lost.
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    fail();
  bool seen_slash = false;
  std::size_t den_begin = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c == '/' && !seen_slash && i + 1 < text.size()) {
      seen_slash = true;
      den_begin = i + 1;
      continue;
    }
    fail();
  }
  if (seen_slash) {
    for (std::size_t j = den_begin; j < text.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(text[j]))) fail();
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) fail();
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in rational literal");
  q.canonicalize();
  return q;
}

int lex_compare(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      int c = cmp(a(i, j), b(i, j));
      if (c != 0) return c < 0 ? -1 : 1;
    }
  return 0;
}

bool rational_matrix_equal(const RationalMatrix& a, const RationalMatrix& b) {
  return lex_compare(a, b) == 0;
}

}  // namespace minent
