#pragma once

// Polynomial word functions x⃗ ↦ w_0 x_{i_1} w_1 ... x_{i_n} w_n.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cpmonoid/morphism.hpp"
#include "cpmonoid/word.hpp"

namespace cpmonoid {

  //! A template of arity k over an alphabet: constants w_0, ..., w_n
  //! interleaved with variable slots v_1, ..., v_n, each v_j a 0-based
  //! argument index below k. Powers x^p are represented as p consecutive
  //! slots separated by ε constants.
  class Template {
   public:
    //! Throws FormatError unless constants.size() == variables.size() + 1
    //! and every index is below \p arity; AlphabetError on foreign letters.
    Template(std::size_t              arity,
             Alphabet                 alphabet,
             std::vector<Word>        constants,
             std::vector<std::size_t> variables);

    //! The constant function with value \p w.
    [[nodiscard]] static Template constant(Alphabet    alphabet,
                                           std::size_t arity,
                                           Word        w = Word());
    //! x ↦ x.
    [[nodiscard]] static Template identity(Alphabet alphabet);

    [[nodiscard]] std::size_t arity() const noexcept {
      return arity_;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] std::vector<Word> const& constants() const noexcept {
      return constants_;
    }
    [[nodiscard]] std::vector<std::size_t> const& variables() const noexcept {
      return variables_;
    }
    //! Number of variable slots n.
    [[nodiscard]] std::size_t slots() const noexcept {
      return variables_.size();
    }

    //! Substitutes \p args; throws ArityError or AlphabetError.
    [[nodiscard]] Word eval(WordTuple const& args) const;
    //! As eval, but lets arguments use letters outside the alphabet.
    [[nodiscard]] Word eval_extended(WordTuple const& args) const;

    //! Structural equality.
    friend bool operator==(Template const&, Template const&) = default;

   private:
    std::size_t              arity_;
    Alphabet                 alphabet_;
    std::vector<Word>        constants_;
    std::vector<std::size_t> variables_;
  };

  //! Incremental construction, merging adjacent constants.
  class TemplateBuilder {
   public:
    TemplateBuilder(Alphabet alphabet, std::size_t arity);

    TemplateBuilder& append(Word const& w);
    TemplateBuilder& append(char letter);
    TemplateBuilder& append_variable(std::size_t index);
    //! Appends \p t with each variable index i replaced by map[i].
    TemplateBuilder& append(Template const&                 t,
                            std::vector<std::size_t> const& map);

    [[nodiscard]] Template build() const;

   private:
    Alphabet                 alphabet_;
    std::size_t              arity_;
    std::vector<Word>        constants_;
    std::vector<std::size_t> variables_;
  };

  //! The affine length law |f(x⃗)| = Σ p_i |x_i| + e, together with the
  //! per-letter offsets |f(ε⃗)|_a.
  struct LengthCoefficients {
    std::vector<std::size_t>      p;
    std::size_t                   e = 0;
    std::map<char, std::size_t>   per_letter_offset;

    [[nodiscard]] std::size_t total() const noexcept;
    //! Σ p_i |x_i| + e
    [[nodiscard]] std::size_t length(WordTuple const& args) const;
    //! Σ p_i |x_i|_a + per_letter_offset(a)
    [[nodiscard]] std::size_t length(WordTuple const& args, char a) const;

    friend bool operator==(LengthCoefficients const&,
                           LengthCoefficients const&) = default;
  };

  [[nodiscard]] LengthCoefficients coefficients(Template const& t);

  //! Each constant replaced by its image under \p phi; the source of \p phi
  //! must be the template's alphabet.
  [[nodiscard]] Template map_words(Template const& t, Morphism const& phi);

  //! True iff t1 and t2 agree on every argument tuple of words of length at
  //! most \p length_bound.
  [[nodiscard]] bool extensional_equal(Template const& t1,
                                       Template const& t2,
                                       std::size_t     length_bound);

  //! Every template with exactly the given coefficients and all constants of
  //! length at most \p max_constant_len, each exactly once. Order: variable
  //! sequences in lexicographic order, then compositions of e over the n+1
  //! constant slots (lexicographic, largest first slot first), then constant
  //! words in lexicographic alphabet order, earlier slots varying slowest.
  //! \p visit returns false to stop.
  void for_each_template(Alphabet const&                          alphabet,
                         std::size_t                              arity,
                         std::vector<std::size_t> const&          p,
                         std::size_t                              e,
                         std::size_t                              max_constant_len,
                         std::function<bool(Template const&)> const& visit);

  [[nodiscard]] std::vector<Template>
  enumerate_templates(Alphabet const&                 alphabet,
                      std::size_t                     arity,
                      std::vector<std::size_t> const& p,
                      std::size_t                     e,
                      std::size_t                     max_constant_len);

  // Text format:
  //   arity 2
  //   alphabet abc
  //   "ab" x2 "c" x1 ""
  [[nodiscard]] Template    parse_template(std::string_view text);
  [[nodiscard]] std::string to_string(Template const& t);
  //! Just the body line, without the trailing newline.
  [[nodiscard]] std::string body_string(Template const& t);
  [[nodiscard]] Template    read_template_file(std::string const& path);

}  // namespace cpmonoid
