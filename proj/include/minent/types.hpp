#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "minent/rational.hpp"

namespace minent {

/// A probability distribution with finite support: exact rational entries,
/// each >= 0, summing to exactly 1. Immutable after construction.
class Distribution {
 public:
  explicit Distribution(RationalVector probs);
  static Distribution from_strings(std::initializer_list<std::string_view> v);
  static Distribution from_strings(const std::vector<std::string>& v);

  Index size() const { return p_.size(); }
  const RationalVector& probs() const { return p_; }
  const Rational& operator[](Index i) const { return p_(i); }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.p_.size() == b.p_.size() && a.p_ == b.p_;
  }

 private:
  RationalVector p_;
};

/// A joint distribution of a pair (X, Y) written as an n x m matrix of
/// exact rationals: entries >= 0 with total mass exactly 1.
class Coupling {
 public:
  explicit Coupling(RationalMatrix cells);
  static Coupling from_strings(
      std::initializer_list<std::initializer_list<std::string_view>> rows);

  Index rows() const { return s_.rows(); }
  Index cols() const { return s_.cols(); }
  const RationalMatrix& cells() const { return s_; }
  const Rational& operator()(Index i, Index j) const { return s_(i, j); }

  friend bool operator==(const Coupling& a, const Coupling& b) {
    return rational_matrix_equal(a.s_, b.s_);
  }

 private:
  RationalMatrix s_;
};

}  // namespace minent
