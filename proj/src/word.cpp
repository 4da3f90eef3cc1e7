#include "cpmonoid/word.hpp"

#include <algorithm>

#include "cpmonoid/error.hpp"

namespace cpmonoid {

  bool is_valid_letter(char c) noexcept {
    auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f && c != '"' && c != '\\';
  }

  Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    index_.fill(-1);
    if (letters_.empty()) {
      throw AlphabetError("alphabet must be nonempty");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      char c = letters_[i];
      if (!is_valid_letter(c)) {
        throw AlphabetError(std::string("invalid letter in alphabet: code ")
                            + std::to_string(static_cast<unsigned char>(c)));
      }
      auto& slot = index_[static_cast<unsigned char>(c)];
      if (slot >= 0) {
        throw AlphabetError(std::string("duplicate letter in alphabet: ")
                            + c);
      }
      slot = static_cast<std::int16_t>(i);
    }
  }

  std::size_t Alphabet::index(char c) const {
    auto i = index_[static_cast<unsigned char>(c)];
    if (i < 0) {
      throw AlphabetError(std::string("letter '") + c
                          + "' is not in alphabet " + letters_);
    }
    return static_cast<std::size_t>(i);
  }

  bool Alphabet::contains(Word const& w) const noexcept {
    return std::all_of(
        w.begin(), w.end(), [this](char c) { return contains(c); });
  }

  void Alphabet::check(Word const& w) const {
    for (char c : w) {
      if (!contains(c)) {
        throw AlphabetError("word " + quoted(w) + " has letter '"
                            + std::string(1, c) + "' outside alphabet "
                            + letters_);
      }
    }
  }

  Word Alphabet::word(std::string_view letters) const {
    Word w{std::string(letters)};
    check(w);
    return w;
  }

  bool Alphabet::shortlex_less(Word const& u, Word const& v) const {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return index(u[i]) < index(v[i]);
      }
    }
    return false;
  }

  std::vector<Word> Alphabet::words_of_length(std::size_t len) const {
    std::vector<Word> result{Word()};
    for (std::size_t step = 0; step < len; ++step) {
      std::vector<Word> next;
      next.reserve(result.size() * letters_.size());
      for (auto const& w : result) {
        for (char c : letters_) {
          Word x = w;
          x += c;
          next.push_back(std::move(x));
        }
      }
      result = std::move(next);
    }
    return result;
  }

  std::vector<Word> Alphabet::words_up_to(std::size_t max_len) const {
    std::vector<Word> result;
    for (std::size_t len = 0; len <= max_len; ++len) {
      auto layer = words_of_length(len);
      result.insert(result.end(),
                    std::make_move_iterator(layer.begin()),
                    std::make_move_iterator(layer.end()));
    }
    return result;
  }

  Alphabet Alphabet::extended(std::string_view extra) const {
    std::string letters = letters_;
    for (char c : extra) {
      if (letters.find(c) == std::string::npos) {
        letters += c;
      }
    }
    return Alphabet(letters);
  }

  Word concat(Word const& u, Word const& v) {
    Word result = u;
    result += v;
    return result;
  }

  std::size_t count(Word const& u) noexcept {
    return u.size();
  }

  std::size_t count(Word const& u, char a) noexcept {
    return static_cast<std::size_t>(std::count(u.begin(), u.end(), a));
  }

  Word power(Word const& u, std::size_t n) {
    std::string s;
    s.reserve(u.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      s += u.str();
    }
    return Word(std::move(s));
  }

  bool has_prefix(Word const& u, Word const& p) noexcept {
    return u.str().starts_with(p.str());
  }

  std::vector<Word> split_on_letter(Word const& u, char a) {
    std::vector<Word> factors;
    std::string       current;
    for (char c : u) {
      if (c == a) {
        factors.emplace_back(std::move(current));
        current.clear();
      } else {
        current += c;
      }
    }
    factors.emplace_back(std::move(current));
    return factors;
  }

  Word join_on_letter(std::vector<Word> const& factors, char a) {
    Word result;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) {
        result += a;
      }
      result += factors[i];
    }
    return result;
  }

  std::string quoted(Word const& w) {
    return "\"" + w.str() + "\"";
  }

  std::string quoted(WordTuple const& ws) {
    std::string s = "(";
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (i > 0) {
        s += ", ";
      }
      s += quoted(ws[i]);
    }
    return s + ")";
  }

}  // namespace cpmonoid
