#pragma once

// Recovering a template from a black-box word function.
//
// For |Σ| ≥ 3, every function preserving the kernels of all endomorphisms of
// Σ* (an RCP function) satisfies an affine length law and begins every
// output either with one fixed letter, or with one designated argument, or
// is constantly ε. Peeling that head off leaves an RCP function with total
// length coefficient one smaller, so repeating classify/peel reads off the
// template w_0 x_{i_1} w_1 ... x_{i_n} w_n. Non-RCP oracles are detected by
// inconsistent probes or by the final validation.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cpmonoid/error.hpp"
#include "cpmonoid/oracle.hpp"
#include "cpmonoid/template.hpp"

namespace cpmonoid {

  //! Which of the three head conditions a function satisfies.
  struct HeadCase {
    enum class Kind { const_letter, variable, const_empty };

    Kind        kind   = Kind::const_empty;
    char        letter = 0;  // const_letter
    std::size_t index  = 0;  // variable, 0-based

    [[nodiscard]] static HeadCase const_letter(char b) {
      return {Kind::const_letter, b, 0};
    }
    [[nodiscard]] static HeadCase variable(std::size_t i) {
      return {Kind::variable, 0, i};
    }
    [[nodiscard]] static HeadCase const_empty() {
      return {Kind::const_empty, 0, 0};
    }

    friend bool operator==(HeadCase const&, HeadCase const&) = default;
  };

  //! `const-letter a`, `variable x2` or `const-empty`.
  [[nodiscard]] std::string to_string(HeadCase const& head);

  //! One oracle query and its answer.
  struct Probe {
    WordTuple args;
    Word      output;
    friend bool operator==(Probe const&, Probe const&) = default;
  };

  //! Why an oracle is not (the restriction of) a template.
  struct Diagnosis {
    enum class Kind {
      ambiguous_head,
      peel_prefix_violation,
      step_budget_exceeded,
      validation_mismatch,
      length_law_violation,
      split_mismatch
    };

    Kind               kind;
    std::string        detail;
    std::vector<Probe> probes;
  };

  //! Kebab-case name, e.g. `peel-prefix-violation`.
  [[nodiscard]] std::string kind_name(Diagnosis::Kind kind);

  template <typename T>
  using OrDiagnosis = std::variant<T, Diagnosis>;

  struct Extracted {
    Template    result;
    //! Backend queries spent before validation.
    std::size_t queries = 0;
    std::size_t validation_queries = 0;
    //! Length bound actually used for validation, after the query cap.
    std::size_t validation_len = 0;
  };

  struct NotRCP {
    Diagnosis diagnosis;
  };

  using ExtractionOutcome = std::variant<Extracted, NotRCP>;

  //! Thrown by a peeled function whose base output does not start with the
  //! established head.
  class PeelViolation : public Error {
   public:
    PeelViolation(std::string const& what, HeadCase head, Probe probe)
        : Error(what), head_(head), probe_(std::move(probe)) {}
    [[nodiscard]] HeadCase const& head() const noexcept {
      return head_;
    }
    [[nodiscard]] Probe const& probe() const noexcept {
      return probe_;
    }

   private:
    HeadCase head_;
    Probe    probe_;
  };

  //! Thrown by a fresh-letter factor oracle when a split does not produce
  //! the expected number of factors.
  class SplitMismatch : public Error {
   public:
    SplitMismatch(std::string const& what, Probe probe)
        : Error(what), probe_(std::move(probe)) {}
    [[nodiscard]] Probe const& probe() const noexcept {
      return probe_;
    }

   private:
    Probe probe_;
  };

  //! Measures e = |f(ε⃗)|, p_i = |f(ε, ..., a, ..., ε)| − e and the offsets
  //! |f(ε⃗)|_c, then cross-checks them with a second letter and with a
  //! mixed-length probe. Requires |Σ| ≥ 2 (HypothesisError otherwise).
  [[nodiscard]] OrDiagnosis<LengthCoefficients>
  length_profile(WordFunction const& f);

  //! Decides the head condition from a small probe set. Unary: ε and up to
  //! four letters. k ≥ 2, with a, b, c the first three letters: probes
  //! (c, ..., c) and (c, ..., a at i, ..., c), confirmed with b in place of
  //! a. Inconsistent probes give Diagnosis::Kind::ambiguous_head. Requires
  //! |Σ| ≥ 3 (HypothesisError otherwise).
  [[nodiscard]] OrDiagnosis<HeadCase> classify_head(WordFunction const& f);

  //! g with f(x⃗) = b·g(x⃗) (const_letter b) or f(x⃗) = x_i·g(x⃗) (variable i).
  //! Evaluating g throws PeelViolation when f's output lacks that prefix.
  [[nodiscard]] WordFunctionPtr peel(WordFunctionPtr f, HeadCase head);

  struct ExtractOptions {
    //! Defaults to 3 for unary functions and 2 otherwise.
    std::optional<std::size_t> validation_len;
    //! The validation length is lowered until the validation set has at
    //! most this many tuples.
    std::size_t max_validation_queries = 100000;
    //! Re-profile after each peel and require the total length coefficient
    //! to drop by exactly one.
#ifdef NDEBUG
    bool check_conservation = false;
#else
    bool check_conservation = true;
#endif
  };

  //! Classify/peel extraction. Throws HypothesisError if |Σ| ≤ 2.
  [[nodiscard]] ExtractionOutcome extract(WordFunctionPtr const& f,
                                          ExtractOptions const& options = {});

  //! Extraction with letters outside the base alphabet: for unary f, the
  //! single query f(z) for a fresh letter z, split at z, is the template.
  //! For k ≥ 2, f(z, x_2, ..., x_k) = u_0 z u_1 ... z u_m and the factors
  //! u_j are extracted recursively as (k−1)-ary functions. Throws
  //! ExtensionUnsupported unless f.supports_extension().
  [[nodiscard]] ExtractionOutcome
  extract_fresh(WordFunctionPtr const& f, ExtractOptions const& options = {});

  //! Compares \p t with \p f on every tuple of words of length at most \p
  //! length_bound over f's alphabet; the first disagreement is returned.
  [[nodiscard]] std::optional<Diagnosis> validate(WordFunction const& f,
                                                  Template const&     t,
                                                  std::size_t length_bound);

  //! The validation length actually used for arity \p k: \p requested,
  //! lowered until at most \p max_queries tuples are needed.
  [[nodiscard]] std::size_t effective_validation_len(std::size_t alphabet_size,
                                                     std::size_t k,
                                                     std::size_t requested,
                                                     std::size_t max_queries);

}  // namespace cpmonoid
