#pragma once

// Words over a finite alphabet and their basic combinatorics.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpmonoid {

  //! True iff \p c may be used as a letter: a printable, non-space ASCII
  //! character other than `"` and `\`.
  bool is_valid_letter(char c) noexcept;

  //! A word: a finite sequence of letters. The empty word is ε.
  //!
  //! Words do not carry their alphabet; membership is checked by the
  //! Alphabet-aware operations (morphism application, template evaluation,
  //! oracle queries) at the point where it matters.
  class Word {
   public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    explicit Word(char letter) : letters_(1, letter) {}

    [[nodiscard]] std::string const& str() const noexcept {
      return letters_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] char operator[](std::size_t i) const {
      return letters_[i];
    }
    [[nodiscard]] char front() const {
      return letters_.front();
    }
    [[nodiscard]] auto begin() const noexcept {
      return letters_.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return letters_.end();
    }

    Word& operator+=(Word const& other) {
      letters_ += other.letters_;
      return *this;
    }
    Word& operator+=(char letter) {
      letters_ += letter;
      return *this;
    }

    friend bool operator==(Word const&, Word const&) = default;
    // Plain character order; use Alphabet::shortlex_less for enumeration
    // order.
    friend std::strong_ordering operator<=>(Word const&, Word const&)
        = default;

   private:
    std::string letters_;
  };

  using WordTuple = std::vector<Word>;

  //! An ordered set of distinct letters.
  class Alphabet {
   public:
    //! Throws AlphabetError if \p letters is empty, has duplicates or
    //! contains an invalid letter.
    explicit Alphabet(std::string_view letters);

    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] char operator[](std::size_t i) const {
      return letters_[i];
    }
    [[nodiscard]] std::string const& letters() const noexcept {
      return letters_;
    }
    [[nodiscard]] bool contains(char c) const noexcept {
      return index_[static_cast<unsigned char>(c)] >= 0;
    }
    //! Position of \p c in the alphabet order; throws AlphabetError.
    [[nodiscard]] std::size_t index(char c) const;

    [[nodiscard]] bool contains(Word const& w) const noexcept;
    //! Throws AlphabetError naming the first foreign letter.
    void check(Word const& w) const;
    //! Checked construction of a word over this alphabet.
    [[nodiscard]] Word word(std::string_view letters) const;

    //! Shortlex order: shorter first, then lexicographic in alphabet order.
    [[nodiscard]] bool shortlex_less(Word const& u, Word const& v) const;

    //! All words of length at most \p max_len, in shortlex order.
    [[nodiscard]] std::vector<Word> words_up_to(std::size_t max_len) const;
    //! All words of length exactly \p len, in lexicographic order.
    [[nodiscard]] std::vector<Word> words_of_length(std::size_t len) const;

    //! Adds \p extra letters (those not already present) at the end.
    [[nodiscard]] Alphabet extended(std::string_view extra) const;

    friend bool operator==(Alphabet const& a, Alphabet const& b) noexcept {
      return a.letters_ == b.letters_;
    }

   private:
    std::string                  letters_;
    std::array<std::int16_t, 256> index_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Word operations
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] Word concat(Word const& u, Word const& v);
  //! |u|
  [[nodiscard]] std::size_t count(Word const& u) noexcept;
  //! |u|_a
  [[nodiscard]] std::size_t count(Word const& u, char a) noexcept;
  [[nodiscard]] Word        power(Word const& u, std::size_t n);
  //! u ∈ pΣ*
  [[nodiscard]] bool has_prefix(Word const& u, Word const& p) noexcept;

  //! The maximal a-free factors u_0, ..., u_m of u = u_0 a u_1 ... a u_m,
  //! where m = |u|_a. Factors may be empty.
  [[nodiscard]] std::vector<Word> split_on_letter(Word const& u, char a);

  //! Inverse of split_on_letter.
  [[nodiscard]] Word join_on_letter(std::vector<Word> const& factors, char a);

  //! Human-readable rendering with quotes, so that ε shows as "".
  [[nodiscard]] std::string quoted(Word const& w);
  [[nodiscard]] std::string quoted(WordTuple const& ws);

}  // namespace cpmonoid

template <>
struct std::hash<cpmonoid::Word> {
  std::size_t operator()(cpmonoid::Word const& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
