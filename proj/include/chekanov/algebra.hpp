#pragma once

// Free unital noncommutative algebra over Z/2 on a finite set of graded
// generators. Words are sequences of generator indices; a polynomial is the
// mod-2 set of its words kept in canonical order (length, then lexicographic
// by generator declaration index).

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chekanov/rat.hpp"

namespace chek {

struct Generator {
  std::string name;
  int degree = 0;
  std::optional<Rat> action;  // Reeb chord length, when known
};

class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].action && *gens_[i].action <= Rat(0))
        throw std::runtime_error("generator '" + gens_[i].name + "' has non-positive action");
      if (!index_.emplace(gens_[i].name, static_cast<int>(i)).second)
        throw std::runtime_error("duplicate generator name '" + gens_[i].name + "'");
    }
  }

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_.at(i); }
  const std::vector<Generator>& gens() const { return gens_; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  bool operator==(const Algebra& o) const {
    if (gens_.size() != o.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree) return false;
    return true;
  }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

using Word = std::vector<int>;  // generator indices; empty word is the unit

inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline int word_degree(const Algebra& alg, const Word& w) {
  int d = 0;
  for (int i : w) d += alg.gen(i).degree;
  return d;
}

inline std::optional<Rat> word_action(const Algebra& alg, const Word& w) {
  Rat total(0);
  for (int i : w) {
    if (!alg.gen(i).action) return std::nullopt;
    total += *alg.gen(i).action;
  }
  return total;
}

class Poly {
 public:
  Poly() = default;
  explicit Poly(AlgebraPtr alg) : alg_(std::move(alg)) {}
  Poly(AlgebraPtr alg, std::vector<Word> words) : alg_(std::move(alg)), words_(std::move(words)) {
    canonicalize();
  }

  static Poly zero(AlgebraPtr alg) { return Poly(std::move(alg)); }
  static Poly one(AlgebraPtr alg) { return Poly(std::move(alg), {Word{}}); }
  static Poly generator(AlgebraPtr alg, int i) { return Poly(std::move(alg), {Word{i}}); }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Word>& words() const { return words_; }
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0].empty(); }

  bool operator==(const Poly& o) const {
    return compatible(o) && words_ == o.words_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const {
    require_compatible(o);
    std::vector<Word> out;
    out.reserve(words_.size() + o.words_.size());
    // symmetric difference of two canonically sorted lists
    size_t i = 0, j = 0;
    while (i < words_.size() && j < o.words_.size()) {
      if (words_[i] == o.words_[j]) {
        ++i;
        ++j;
      } else if (word_less(words_[i], o.words_[j])) {
        out.push_back(words_[i++]);
      } else {
        out.push_back(o.words_[j++]);
      }
    }
    for (; i < words_.size(); ++i) out.push_back(words_[i]);
    for (; j < o.words_.size(); ++j) out.push_back(o.words_[j]);
    Poly p(alg_);
    p.words_ = std::move(out);
    return p;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }

  Poly operator*(const Poly& o) const {
    require_compatible(o);
    std::vector<Word> prods;
    prods.reserve(words_.size() * o.words_.size());
    for (const auto& a : words_)
      for (const auto& b : o.words_) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        prods.push_back(std::move(w));
      }
    Poly p(alg_, std::move(prods));
    return p;
  }

  // Degree when homogeneous, nullopt otherwise (0 is reported for the zero poly).
  std::optional<int> degree() const {
    if (words_.empty()) return 0;
    int d = word_degree(*alg_, words_[0]);
    for (const auto& w : words_)
      if (word_degree(*alg_, w) != d) return std::nullopt;
    return d;
  }

 private:
  void canonicalize() {
    std::sort(words_.begin(), words_.end(), word_less);
    // mod-2 collection: drop pairs of equal words
    std::vector<Word> out;
    for (size_t i = 0; i < words_.size();) {
      size_t j = i;
      while (j < words_.size() && words_[j] == words_[i]) ++j;
      if ((j - i) % 2 == 1) out.push_back(words_[i]);
      i = j;
    }
    words_ = std::move(out);
  }

  bool compatible(const Poly& o) const {
    if (alg_ == o.alg_) return true;
    if (alg_ && o.alg_ && *alg_ == *o.alg_) return true;
    // zero polynomials compare equal across algebras only when both empty
    return words_.empty() && o.words_.empty();
  }
  void require_compatible(const Poly& o) const {
    if (alg_ == o.alg_) return;
    if (alg_ && o.alg_ && *alg_ == *o.alg_) return;
    throw std::runtime_error("operands belong to different algebras");
  }

  AlgebraPtr alg_;
  std::vector<Word> words_;
};

// Poly grammar: terms separated by '+', letters by '*', unit "1", zero "0".
inline Poly parse_poly(const AlgebraPtr& alg, std::string_view text) {
  std::vector<Word> words;
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::runtime_error("empty polynomial string");
  bool any_term = false;
  while (pos < text.size()) {
    skip_ws();
    Word w;
    bool is_zero_term = false;
    bool letters_done = false;
    while (!letters_done) {
      skip_ws();
      if (pos < text.size() && text[pos] == '1') {
        ++pos;  // unit letter: contributes nothing
      } else if (pos < text.size() && text[pos] == '0') {
        ++pos;
        is_zero_term = true;
      } else {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        if (start == pos) throw std::runtime_error("parse error in polynomial at position " +
                                                   std::to_string(pos));
        std::string name(text.substr(start, pos - start));
        int idx = alg->index_of(name);
        if (idx < 0) throw std::runtime_error("unknown generator '" + name + "'");
        w.push_back(idx);
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      letters_done = true;
    }
    if (!is_zero_term) words.push_back(std::move(w));
    any_term = true;
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != '+') throw std::runtime_error("expected '+' at position " + std::to_string(pos));
      ++pos;
      if (pos == text.size()) throw std::runtime_error("trailing '+'");
    }
  }
  if (!any_term) throw std::runtime_error("empty polynomial string");
  return Poly(alg, std::move(words));
}

inline std::string word_to_string(const Algebra& alg, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += alg.gen(w[i]).name;
  }
  return s;
}

inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < p.words().size(); ++i) {
    if (i) s += '+';
    s += word_to_string(*p.algebra(), p.words()[i]);
  }
  return s;
}

}  // namespace chek
