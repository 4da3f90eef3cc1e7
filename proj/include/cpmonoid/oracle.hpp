#pragma once

// Black-box k-ary word functions (Σ*)^k → Σ*.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cpmonoid/template.hpp"
#include "cpmonoid/word.hpp"

namespace cpmonoid {

  struct QueryStats {
    //! Calls to evaluate, cached or not.
    std::size_t calls = 0;
    //! Calls that reached the backend (cache misses).
    std::size_t backend_queries = 0;
  };

  //! A deterministic k-ary word function behind a memoizing cache.
  //!
  //! Arguments are checked against the alphabet, except that an oracle
  //! that supports extension accepts any valid letter. Concrete backends
  //! override compute(); evaluate() is safe to call from several threads.
  class WordFunction {
   public:
    WordFunction(std::size_t arity, Alphabet alphabet, bool supports_extension);
    WordFunction(WordFunction const&)            = delete;
    WordFunction& operator=(WordFunction const&) = delete;
    virtual ~WordFunction()                      = default;

    [[nodiscard]] std::size_t arity() const noexcept {
      return arity_;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] bool supports_extension() const noexcept {
      return supports_extension_;
    }
    [[nodiscard]] virtual std::string describe() const = 0;

    //! Throws ArityError, AlphabetError, or whatever the backend throws
    //! (OracleError, ProtocolError, ...).
    [[nodiscard]] Word evaluate(WordTuple const& args) const;
    [[nodiscard]] Word operator()(WordTuple const& args) const {
      return evaluate(args);
    }

    [[nodiscard]] QueryStats stats() const;
    void                     reset_stats();
    //! Caching is on by default. Turning it off also clears the cache.
    void set_caching(bool enabled);

   protected:
    [[nodiscard]] virtual Word compute(WordTuple const& args) const = 0;

   private:
    struct TupleHash {
      std::size_t operator()(WordTuple const& t) const noexcept;
    };

    std::size_t                                          arity_;
    Alphabet                                             alphabet_;
    bool                                                 supports_extension_;
    mutable std::mutex                                   mutex_;
    mutable std::unordered_map<WordTuple, Word, TupleHash> cache_;
    mutable QueryStats                                   stats_;
    bool                                                 caching_ = true;
  };

  using WordFunctionPtr = std::shared_ptr<WordFunction const>;

  //! Backed by a template; supports extension.
  class TemplateFunction final : public WordFunction {
   public:
    explicit TemplateFunction(Template t);
    [[nodiscard]] Template const& get_template() const noexcept {
      return template_;
    }
    [[nodiscard]] std::string describe() const override;

   protected:
    [[nodiscard]] Word compute(WordTuple const& args) const override;

   private:
    Template template_;
  };

  //! A named function implemented in C++.
  class BuiltinFunction final : public WordFunction {
   public:
    using Body = std::function<Word(WordTuple const&)>;
    BuiltinFunction(std::string name,
                    std::size_t arity,
                    Alphabet    alphabet,
                    bool        supports_extension,
                    Body        body);
    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }
    [[nodiscard]] std::string describe() const override;

   protected:
    [[nodiscard]] Word compute(WordTuple const& args) const override;

   private:
    std::string name_;
    Body        body_;
  };

  //! A finite partial function; queries outside the table throw OracleError.
  class TableFunction final : public WordFunction {
   public:
    TableFunction(std::size_t arity,
                  Alphabet    alphabet,
                  std::map<WordTuple, Word> entries);
    [[nodiscard]] std::map<WordTuple, Word> const& entries() const noexcept {
      return entries_;
    }
    [[nodiscard]] std::string describe() const override;

   protected:
    [[nodiscard]] Word compute(WordTuple const& args) const override;

   private:
    std::map<WordTuple, Word> entries_;
  };

  //! f with some argument positions fixed. Arity is the base arity minus
  //! the number of frozen positions.
  class FrozenFunction final : public WordFunction {
   public:
    //! Keys of \p frozen are 0-based positions of \p base.
    FrozenFunction(WordFunctionPtr base, std::map<std::size_t, Word> frozen);
    [[nodiscard]] WordFunctionPtr const& base() const noexcept {
      return base_;
    }
    [[nodiscard]] std::map<std::size_t, Word> const& frozen() const noexcept {
      return frozen_;
    }
    //! Inserts the frozen values into \p rest.
    [[nodiscard]] WordTuple splice(WordTuple const& rest) const;
    [[nodiscard]] std::string describe() const override;

   protected:
    [[nodiscard]] Word compute(WordTuple const& args) const override;

   private:
    WordFunctionPtr             base_;
    std::map<std::size_t, Word> frozen_;
  };

  [[nodiscard]] WordFunctionPtr from_template(Template t);

  //! Fixes the 0-based \p position of \p f to \p value; throws ArityError
  //! if the position is invalid, AlphabetError if the value is not over the
  //! alphabet.
  [[nodiscard]] std::shared_ptr<FrozenFunction const>
  freeze(WordFunctionPtr f, std::size_t position, Word value);

  //! Names accepted by builtin(), in catalog order.
  [[nodiscard]] std::vector<std::string> builtin_names();

  //! Looks up a builtin by name over \p alphabet; throws FormatError for
  //! unknown names. `first_letter_or_ε` is accepted as an alias of
  //! `first_letter_or_epsilon`.
  //!
  //! The catalog is stated for the letters a, b: collapse_b_to_a maps the
  //! second alphabet letter onto the first, erase_a erases the first
  //! alphabet letter.
  [[nodiscard]] WordFunctionPtr builtin(std::string_view name,
                                        Alphabet const&  alphabet);

  //! Every builtin over \p alphabet.
  [[nodiscard]] std::vector<std::pair<std::string, WordFunctionPtr>>
  builtin_catalog(Alphabet const& alphabet);

  // Table text format: lines of k+1 TAB-separated fields, the k arguments
  // then the result; an empty field is ε. The alphabet is \p alphabet if
  // given, otherwise the letters used, in character order.
  [[nodiscard]] std::shared_ptr<TableFunction const>
  parse_table(std::string_view text,
              std::optional<Alphabet> const& alphabet = std::nullopt);
  [[nodiscard]] std::shared_ptr<TableFunction const>
  read_table_file(std::string const&             path,
                  std::optional<Alphabet> const& alphabet = std::nullopt);
  //! One line per entry, entries in the order given.
  [[nodiscard]] std::string
  format_table(std::vector<std::pair<WordTuple, Word>> const& entries);

}  // namespace cpmonoid
