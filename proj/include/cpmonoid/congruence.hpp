#pragma once

// Congruences on Σ* represented by canonical-image functions: kernels of
// endomorphisms (restricted congruences) and kernels of morphisms into
// finite monoids.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cpmonoid/morphism.hpp"
#include "cpmonoid/word.hpp"

namespace cpmonoid {

  //! Index of an element in a FiniteMonoid.
  struct MonoidElement {
    std::size_t index = 0;
    friend auto operator<=>(MonoidElement, MonoidElement) = default;
  };

  //! A monoid given by its full multiplication table.
  class FiniteMonoid {
   public:
    //! \p table is row-major: table[i * n + j] = i · j. Does not validate
    //! the monoid axioms; see monoid_validate.
    FiniteMonoid(std::vector<std::string> elements,
                 std::size_t              identity,
                 std::vector<std::size_t> table,
                 std::string              name = "");

    [[nodiscard]] std::size_t size() const noexcept {
      return elements_.size();
    }
    [[nodiscard]] MonoidElement identity() const noexcept {
      return {identity_};
    }
    [[nodiscard]] MonoidElement multiply(MonoidElement x,
                                         MonoidElement y) const noexcept {
      return {table_[x.index * elements_.size() + y.index]};
    }
    [[nodiscard]] std::string const& element_name(MonoidElement x) const {
      return elements_.at(x.index);
    }
    //! Throws FormatError for unknown names.
    [[nodiscard]] MonoidElement element(std::string_view name) const;
    [[nodiscard]] std::vector<std::string> const& elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }

   private:
    std::vector<std::string> elements_;
    std::size_t              identity_;
    std::vector<std::size_t> table_;
    std::string              name_;
  };

  //! First violated monoid axiom, if any.
  struct MonoidViolation {
    enum class Kind { left_identity, right_identity, associativity };
    Kind                       kind;
    std::vector<MonoidElement> elements;  // one element, or the triple
    std::string                message;
  };

  //! Checks both identity laws, then associativity over all triples.
  [[nodiscard]] std::optional<MonoidViolation>
  monoid_validate(FiniteMonoid const& m);

  // Text format:
  //   elements e0 e1 ... en
  //   identity e0
  //   <n+1 rows of n+1 element names, row-major>
  //! Parses and validates; throws FormatError, including on axiom failure.
  [[nodiscard]] FiniteMonoid parse_finite_monoid(std::string_view text,
                                                 std::string      name = "");
  [[nodiscard]] std::string  to_string(FiniteMonoid const& m);

  //! A morphism Σ* → M given by letter images.
  class MonoidMorphism {
   public:
    MonoidMorphism(Alphabet                   alphabet,
                   FiniteMonoid               monoid,
                   std::vector<MonoidElement> assignment);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] FiniteMonoid const& monoid() const noexcept {
      return monoid_;
    }
    [[nodiscard]] std::vector<MonoidElement> const&
    assignment() const noexcept {
      return assignment_;
    }
    //! Left fold of the letter images starting at the identity.
    [[nodiscard]] MonoidElement apply(Word const& u) const;

   private:
    Alphabet                   alphabet_;
    FiniteMonoid               monoid_;
    std::vector<MonoidElement> assignment_;
  };

  //! Lines `letter=element`; every alphabet letter must be assigned.
  [[nodiscard]] MonoidMorphism parse_monoid_morphism(std::string_view text,
                                                     Alphabet const&  alphabet,
                                                     FiniteMonoid const& m);
  [[nodiscard]] std::string to_string(MonoidMorphism const& mu);

  //! Canonical representative of a congruence class: a word for restricted
  //! congruences, a monoid element for finite kernels.
  using CanonicalImage = std::variant<Word, MonoidElement>;

  //! A congruence on Σ*, given intensionally as a kernel.
  class CongruenceSpec {
   public:
    //! Kernel of an endomorphism; throws AlphabetError otherwise.
    [[nodiscard]] static CongruenceSpec restricted(Morphism phi);
    [[nodiscard]] static CongruenceSpec finite_kernel(MonoidMorphism mu);

    [[nodiscard]] Alphabet const& alphabet() const noexcept;
    [[nodiscard]] bool            is_restricted() const noexcept {
      return std::holds_alternative<Morphism>(kernel_);
    }
    [[nodiscard]] Morphism const& morphism() const {
      return std::get<Morphism>(kernel_);
    }
    [[nodiscard]] MonoidMorphism const& monoid_morphism() const {
      return std::get<MonoidMorphism>(kernel_);
    }
    //! One-line summary, e.g. `restricted project(a)`.
    [[nodiscard]] std::string describe() const;

   private:
    explicit CongruenceSpec(std::variant<Morphism, MonoidMorphism> kernel)
        : kernel_(std::move(kernel)) {}
    std::variant<Morphism, MonoidMorphism> kernel_;
  };

  [[nodiscard]] CanonicalImage word_image(CongruenceSpec const& spec,
                                          Word const&           u);
  [[nodiscard]] bool           congruent(CongruenceSpec const& spec,
                                         Word const&           u,
                                         Word const&           v);
  [[nodiscard]] std::string    to_string(CongruenceSpec const& spec,
                                         CanonicalImage const& image);

  using WordPair = std::pair<Word, Word>;

  //! All unordered pairs u ≠ v of congruent words of length at most \p
  //! length_bound. Words are bucketed by canonical image in shortlex order;
  //! a pair (u, v) has u before v in shortlex order, and pairs are listed by
  //! the shortlex position of v, then of u.
  [[nodiscard]] std::vector<WordPair>
  congruent_pairs(CongruenceSpec const& spec, std::size_t length_bound);

  //! Streaming form of congruent_pairs: \p visit returns false to stop.
  //! Returns false iff stopped early.
  bool for_each_congruent_pair(
      CongruenceSpec const&                                spec,
      std::size_t                                          length_bound,
      std::function<bool(Word const&, Word const&)> const& visit);

  //! The shipped monoid catalog: ℤ/nℤ under + and × for 2 ≤ n ≤ 6, the full
  //! transformation monoid on 2 points and its submonoids {id, 0, 1} under
  //! both composition orders (the left-zero and right-zero semigroups on two
  //! elements with an identity adjoined).
  [[nodiscard]] std::vector<FiniteMonoid> monoid_catalog();
  [[nodiscard]] FiniteMonoid cyclic_additive(std::size_t n);
  [[nodiscard]] FiniteMonoid cyclic_multiplicative(std::size_t n);

  //! Every assignment of catalog elements to letters, for every catalog
  //! monoid, as finite-kernel congruences: the `finite_monoids` audit family.
  [[nodiscard]] std::vector<CongruenceSpec>
  finite_monoid_family(Alphabet const& alphabet);

}  // namespace cpmonoid
