#pragma once

// Searching for congruences that a word function fails to preserve, and the
// combined extract-or-refute verdict.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cpmonoid/congruence.hpp"
#include "cpmonoid/extraction.hpp"
#include "cpmonoid/oracle.hpp"

namespace cpmonoid {

  //! Componentwise congruent inputs whose outputs are not congruent.
  struct Witness {
    CongruenceSpec                          spec;
    std::pair<WordTuple, WordTuple>         inputs;
    std::pair<Word, Word>                   outputs;
    std::pair<CanonicalImage, CanonicalImage> images;
  };

  //! Re-evaluates \p f and \p w.spec from scratch: true iff the inputs are
  //! componentwise congruent, the outputs are what \p f returns and their
  //! images differ.
  [[nodiscard]] bool verify_witness(WordFunction const& f, Witness const& w);

  struct PreservationResult {
    std::optional<Witness> witness;
    //! Input pairs compared.
    std::size_t checks = 0;
    bool        budget_exhausted = false;
  };

  //! Compares output images over input pairs built from
  //! congruent_pairs(spec, length_bound). Unary: the pairs themselves. k ≥ 2:
  //! first every pair at one position with every context of words of
  //! length at most \p length_bound elsewhere (positions in order), then
  //! tuples that differ in at least two positions. Stops at the first
  //! witness or after \p budget comparisons.
  [[nodiscard]] PreservationResult
  check_preservation(WordFunction const&   f,
                     CongruenceSpec const& spec,
                     std::size_t           length_bound,
                     std::size_t           budget = 2'000'000);

  struct Family {
    enum class Kind { standard, finite_monoids, random };

    Kind          kind = Kind::standard;
    std::uint64_t seed = 1;
    std::size_t   count = 64;
    std::size_t   image_len = 2;

    [[nodiscard]] static Family standard() {
      return {};
    }
    [[nodiscard]] static Family finite_monoids() {
      return {Kind::finite_monoids};
    }
    [[nodiscard]] static Family random(std::uint64_t seed,
                                       std::size_t   count,
                                       std::size_t   image_len) {
      return {Kind::random, seed, count, image_len};
    }
  };

  //! `standard`, `finite_monoids` or `random(seed=1,count=64,image_len=2)`.
  [[nodiscard]] std::string to_string(Family const& family);

  //! Seeded endomorphisms with letter images of length at most \p image_len.
  //! Draws are reduced modulo the range so the sequence is the same on every
  //! platform for a given seed.
  [[nodiscard]] std::vector<Morphism> random_endomorphisms(Alphabet const& alphabet,
                                                           std::uint64_t   seed,
                                                           std::size_t     count,
                                                           std::size_t image_len);

  //! The congruences of \p family over \p alphabet, in audit order.
  [[nodiscard]] std::vector<CongruenceSpec> family_specs(Alphabet const& alphabet,
                                                         Family const&   family);

  struct AuditResult {
    std::optional<Witness> witness;
    std::size_t            congruences_checked = 0;
    std::size_t            checks = 0;
    bool                   budget_exhausted = false;
  };

  //! check_preservation over every congruence of \p family; \p budget caps
  //! the total number of comparisons.
  [[nodiscard]] AuditResult audit(WordFunction const& f,
                                  Family const&       family,
                                  std::size_t         length_bound,
                                  std::size_t         budget = 2'000'000);

  struct CertifiedCP {
    Template    result;
    std::size_t queries = 0;
  };

  struct RefutedCP {
    Witness                  witness;
    Family                   family;
    std::optional<Diagnosis> diagnosis;
  };

  struct Indeterminate {
    std::string              reason;
    std::optional<Diagnosis> diagnosis;
  };

  using Verdict = std::variant<CertifiedCP, RefutedCP, Indeterminate>;

  struct CheckBudgets {
    ExtractOptions extraction;
    std::size_t    length_bound = 3;
    //! Comparisons per audited family.
    std::size_t    audit_budget = 2'000'000;
    std::uint64_t  seed = 1;
    std::size_t    random_count = 64;
    std::size_t    max_image_len = 3;
  };

  //! The families theorem_check escalates through, in order: standard,
  //! finite_monoids, then random with image length 1, 2, ...,
  //! max_image_len.
  [[nodiscard]] std::vector<Family> escalation(CheckBudgets const& budgets);

  //! Extract (and extract_fresh if \p f supports extension); certify if
  //! every attempt succeeds, otherwise audit with escalating families.
  //! Throws HypothesisError if |Σ| ≤ 2.
  [[nodiscard]] Verdict theorem_check(WordFunctionPtr const& f,
                                      CheckBudgets const&    budgets = {});

}  // namespace cpmonoid
