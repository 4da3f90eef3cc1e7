#pragma once

// Bounded search for unary word-function tables that are consistent with a
// finite family of restricted congruences yet are not restrictions of any
// template. At |Σ| ≥ 3 none exist for total functions; at |Σ| = 2 the
// question is open, and tables found here are candidates, not
// counterexamples.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpmonoid/morphism.hpp"
#include "cpmonoid/template.hpp"

namespace cpmonoid {

  struct SearchConfig {
    enum class FamilyKind { endomorphisms, standard };

    Alphabet    alphabet{"ab"};
    //! The domain is every word of length at most domain_len.
    std::size_t domain_len = 1;
    std::size_t p = 1;
    std::size_t e = 0;
    FamilyKind  family = FamilyKind::endomorphisms;
    //! Image-length bound for the endomorphism family.
    std::size_t image_len = 2;
    std::size_t node_budget = 50'000'000;
    double      time_budget_seconds = 60.0;
  };

  //! f(x) for every domain word x, in shortlex order of x.
  using CandidateTable = std::vector<std::pair<Word, Word>>;

  //! The morphism family of \p config, one representative per kernel on
  //! words of length at most max(domain_len, p * domain_len + e), first
  //! representative in family order kept.
  [[nodiscard]] std::vector<Morphism> search_family(SearchConfig const& config);

  struct SearchStats {
    std::size_t family_size = 0;
    std::size_t distinct_kernels = 0;
    std::size_t nodes = 0;
    bool        complete = true;
  };

  //! Backtracking over domain words in shortlex order, candidate values in
  //! lexicographic order. f(x) has |f(x)|_a = p |x|_a + |f(ε)|_a for every
  //! letter a, and for each family morphism φ, φ(x) = φ(y) forces
  //! φ(f(x)) = φ(f(y)). \p visit returns false to stop.
  SearchStats enumerate_consistent(
      SearchConfig const&                               config,
      std::function<bool(CandidateTable const&)> const& visit);

  //! True iff \p table satisfies every constraint of search_family(config),
  //! checked pairwise without the search's shortcuts.
  [[nodiscard]] bool is_consistent(CandidateTable const& table,
                                   SearchConfig const&   config);

  //! First template of enumerate_templates(alphabet, 1, {p}, e, e) whose
  //! restriction to the domain equals \p table.
  [[nodiscard]] std::optional<Template>
  template_representable(CandidateTable const& table, SearchConfig const& config);

  struct ExploreReport {
    SearchConfig                config;
    SearchStats                 stats;
    std::size_t                 consistent = 0;
    std::size_t                 representable = 0;
    std::vector<CandidateTable> candidates;

    //! 0 all representable, 1 candidates found, 4 budget exhausted.
    [[nodiscard]] int exit_status() const noexcept;
  };

  [[nodiscard]] ExploreReport explore(SearchConfig const& config);

  //! Config echo, status, counts, then each candidate in the Table format.
  [[nodiscard]] std::string to_string(ExploreReport const& report);

}  // namespace cpmonoid
