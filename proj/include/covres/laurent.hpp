#pragma once

#include <map>
#include <utility>
#include <vector>

#include "covres/util.hpp"

namespace covres {

// Integer Laurent polynomial in a fixed number of torus variables.  Keys are
// exponent vectors of length nvars(); the map holds no zero coefficients.
class LaurentCharacter {
 public:
  explicit LaurentCharacter(int nvars) : nvars_(nvars) {
    require(nvars >= 0, "variable count must be non-negative");
  }

  static LaurentCharacter monomial(std::vector<int> exp, Int coeff) {
    LaurentCharacter f(static_cast<int>(exp.size()));
    f.add_term(std::move(exp), std::move(coeff));
    return f;
  }

  static LaurentCharacter one(int nvars) {
    return monomial(std::vector<int>(nvars, 0), 1);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  void add_term(std::vector<int> exp, const Int& coeff) {
    check(static_cast<int>(exp.size()) == nvars_, "exponent arity mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(std::move(exp), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentCharacter& operator+=(const LaurentCharacter& o) {
    check(nvars_ == o.nvars_, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentCharacter& operator-=(const LaurentCharacter& o) {
    check(nvars_ == o.nvars_, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentCharacter operator+(LaurentCharacter a,
                                    const LaurentCharacter& b) {
    a += b;
    return a;
  }

  friend LaurentCharacter operator-(LaurentCharacter a,
                                    const LaurentCharacter& b) {
    a -= b;
    return a;
  }

  friend LaurentCharacter operator*(const LaurentCharacter& a,
                                    const LaurentCharacter& b) {
    check(a.nvars_ == b.nvars_, "variable count mismatch");
    LaurentCharacter out(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  LaurentCharacter& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend LaurentCharacter operator*(LaurentCharacter a, const Int& k) {
    a *= k;
    return a;
  }

  // Multiply by sign * z^shift in place; cheap because keys only translate.
  void shift(const std::vector<int>& delta, bool negate) {
    check(static_cast<int>(delta.size()) == nvars_, "shift arity mismatch");
    std::map<std::vector<int>, Int> out;
    for (auto& [e, c] : terms_) {
      std::vector<int> ne(nvars_);
      for (int i = 0; i < nvars_; ++i) ne[i] = e[i] + delta[i];
      out.emplace(std::move(ne), negate ? -c : c);
    }
    terms_ = std::move(out);
  }

  bool operator==(const LaurentCharacter& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Largest exponent vector in lex order; only valid on nonzero values.
  std::pair<std::vector<int>, Int> lex_max() const {
    check(!terms_.empty(), "lex_max of zero");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  Int sum_of_coefficients() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // Evaluate the coefficient of one monomial.
  Int coefficient(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  LaurentCharacter swap_vars(int i, int j) const {
    LaurentCharacter out(nvars_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> ne = e;
      std::swap(ne[i], ne[j]);
      out.add_term(std::move(ne), c);
    }
    return out;
  }

  LaurentCharacter invert_var(int i) const {
    LaurentCharacter out(nvars_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> ne = e;
      ne[i] = -ne[i];
      out.add_term(std::move(ne), c);
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += to_string(it->second);
      for (int i = 0; i < nvars_; ++i)
        if (it->first[i] != 0)
          s += "*z" + std::to_string(i + 1) + "^" +
               std::to_string(it->first[i]);
    }
    return s;
  }

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;
};

// Substitution of each source variable by sign * z_target^power (or by a
// signed constant when target < 0).  Collapses a character onto a subtorus.
struct TorusMap {
  struct Image {
    int target = -1;  // index into the image torus, -1 for a constant
    int power = 0;
    bool negate = false;  // multiply the image by -1
  };
  std::vector<Image> images;
  int target_vars = 0;

  LaurentCharacter apply(const LaurentCharacter& f) const {
    check(static_cast<int>(images.size()) == f.nvars(),
          "torus map arity mismatch");
    LaurentCharacter out(target_vars);
    for (const auto& [e, c] : f.terms()) {
      std::vector<int> ne(target_vars, 0);
      bool neg = false;
      for (std::size_t i = 0; i < images.size(); ++i) {
        const Image& im = images[i];
        if (im.target >= 0) ne[im.target] += im.power * e[i];
        if (im.negate && (e[i] % 2 != 0)) neg = !neg;
      }
      out.add_term(std::move(ne), neg ? -c : c);
    }
    return out;
  }
};

}  // namespace covres
