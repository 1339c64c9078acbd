#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sutura/errors.hpp"
#include "sutura/laurent.hpp"

namespace sutura {

struct Letter {
  int gen;   // 0-based generator index
  int sign;  // +1 or -1

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

// Freely reduced word in a free group; reduction happens on construction.
class Word {
 public:
  Word() = default;

  explicit Word(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) push(l);
  }

  // "a b A B": lowercase letters are generators, uppercase their inverses
  static Word parse(const std::string& text, int n_generators) {
    std::istringstream is(text);
    std::string tok;
    std::vector<Letter> ls;
    while (is >> tok) {
      if (tok.size() != 1 || !std::isalpha(static_cast<unsigned char>(tok[0])))
        throw ParseError("word letter \"" + tok + "\" is not a single latin letter");
      char c = tok[0];
      Letter l = std::islower(static_cast<unsigned char>(c)) ? Letter{c - 'a', 1} : Letter{c - 'A', -1};
      if (l.gen >= n_generators)
        throw SemanticError(std::string("word references unknown generator '") + c + "'");
      ls.push_back(l);
    }
    return Word(ls);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->gen, -it->sign});
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    for (const Letter& l : b.letters_) w.push(l);
    return w;
  }

  // exponent-sum vector in Z^{n_generators}
  ExpVec abelianized(int n_generators) const {
    ExpVec e(static_cast<std::size_t>(n_generators), 0);
    for (const Letter& l : letters_) {
      if (l.gen < 0 || l.gen >= n_generators) throw IndexOutOfRange("letter index out of range");
      e[static_cast<std::size_t>(l.gen)] += l.sign;
    }
    return e;
  }

  std::string text() const {
    std::string s;
    for (const Letter& l : letters_) {
      if (!s.empty()) s += ' ';
      s += static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.gen);
    }
    return s;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  void push(const Letter& l) {
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +-1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  std::vector<Letter> letters_;
};

}  // namespace sutura
