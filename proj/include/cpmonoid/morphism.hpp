#pragma once

// Monoid morphisms between free monoids, given by their letter images.

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cpmonoid/word.hpp"

namespace cpmonoid {

  //! A morphism source* → target*, determined by the image of each source
  //! letter. Source and target may differ; use is_endomorphism() where the
  //! caller requires an endomorphism.
  class Morphism {
   public:
    //! \p images is indexed by source letter position. Throws AlphabetError
    //! if an image uses a letter outside \p target, FormatError if the
    //! number of images does not match the source alphabet.
    Morphism(Alphabet source,
             Alphabet target,
             std::vector<Word> images,
             std::string name = "custom");

    [[nodiscard]] Alphabet const& source() const noexcept {
      return source_;
    }
    [[nodiscard]] Alphabet const& target() const noexcept {
      return target_;
    }
    [[nodiscard]] bool is_endomorphism() const noexcept {
      return source_ == target_;
    }
    //! Short description such as `project(a)`, used in reports.
    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }

    [[nodiscard]] Word const& image(char letter) const;
    [[nodiscard]] std::vector<Word> const& images() const noexcept {
      return images_;
    }

    //! The homomorphic image of \p u; throws AlphabetError on a letter
    //! outside the source alphabet.
    [[nodiscard]] Word apply(Word const& u) const;
    [[nodiscard]] Word operator()(Word const& u) const {
      return apply(u);
    }

    //! Equality of the letter maps (names are ignored).
    friend bool operator==(Morphism const& a, Morphism const& b) {
      return a.source_ == b.source_ && a.target_ == b.target_
             && a.images_ == b.images_;
    }

   private:
    Alphabet          source_;
    Alphabet          target_;
    std::vector<Word> images_;
    std::string       name_;
  };

  [[nodiscard]] inline Word apply(Morphism const& phi, Word const& u) {
    return phi.apply(u);
  }

  //! phi ∘ psi: first psi, then phi. Requires psi.target() == phi.source().
  [[nodiscard]] Morphism compose(Morphism const& phi, Morphism const& psi);

  // The morphisms used throughout the characterization proofs.

  [[nodiscard]] Morphism identity_morphism(Alphabet const& alphabet);
  //! Every letter ↦ a. Its kernel is "same length".
  [[nodiscard]] Morphism collapse_to(Alphabet const& alphabet, char a);
  //! θ_c: c ↦ c, every other letter ↦ ε. Its kernel is "same number of c".
  [[nodiscard]] Morphism project(Alphabet const& alphabet, char c);
  //! ψ_c: c ↦ ε, every other letter fixed.
  [[nodiscard]] Morphism erase(Alphabet const& alphabet, char c);
  //! φ_{d,c}: d ↦ c, every other letter fixed.
  [[nodiscard]] Morphism identify(Alphabet const& alphabet, char d, char c);
  //! Explicit map; throws FormatError unless total on \p source.
  [[nodiscard]] Morphism custom_morphism(Alphabet const&                  source,
                                         Alphabet const&                  target,
                                         std::map<char, std::string> const& map);

  //! Every collapse_to, project, erase and identify morphism over \p
  //! alphabet, in that order, letters in alphabet order.
  [[nodiscard]] std::vector<Morphism>
  standard_morphisms(Alphabet const& alphabet);

  //! Every endomorphism whose letter images have length at most \p max_len,
  //! enumerated with images in shortlex order, first letter varying slowest.
  [[nodiscard]] std::vector<Morphism>
  all_endomorphisms(Alphabet const& alphabet, std::size_t max_len);

  // Text format:
  //   alphabet abc
  //   target xyz        (optional; defaults to the source alphabet)
  //   a=ab
  //   b=
  //   c=a
  [[nodiscard]] Morphism    parse_morphism(std::string_view text);
  [[nodiscard]] std::string to_string(Morphism const& phi);
  [[nodiscard]] Morphism    read_morphism_file(std::string const& path);

}  // namespace cpmonoid
