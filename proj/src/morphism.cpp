#include "cpmonoid/morphism.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "cpmonoid/error.hpp"
#include "text.hpp"

namespace cpmonoid {

  Morphism::Morphism(Alphabet          source,
                     Alphabet          target,
                     std::vector<Word> images,
                     std::string       name)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)),
        name_(std::move(name)) {
    if (images_.size() != source_.size()) {
      throw FormatError("morphism needs one image per source letter, got "
                        + std::to_string(images_.size()) + " for alphabet "
                        + source_.letters());
    }
    for (auto const& w : images_) {
      target_.check(w);
    }
  }

  Word const& Morphism::image(char letter) const {
    return images_[source_.index(letter)];
  }

  Word Morphism::apply(Word const& u) const {
    Word result;
    for (char c : u) {
      result += images_[source_.index(c)];
    }
    return result;
  }

  Morphism compose(Morphism const& phi, Morphism const& psi) {
    if (!(psi.target() == phi.source())) {
      throw AlphabetError("cannot compose: target " + psi.target().letters()
                          + " differs from source " + phi.source().letters());
    }
    std::vector<Word> images;
    images.reserve(psi.source().size());
    for (auto const& w : psi.images()) {
      images.push_back(phi.apply(w));
    }
    return Morphism(psi.source(),
                    phi.target(),
                    std::move(images),
                    phi.name() + " . " + psi.name());
  }

  namespace {
    // Throws AlphabetError unless c is a letter of the alphabet.
    void require(Alphabet const& alphabet, char c) {
      static_cast<void>(alphabet.index(c));
    }

    template <typename F>
    Morphism letterwise(Alphabet const& alphabet, std::string name, F&& f) {
      std::vector<Word> images;
      images.reserve(alphabet.size());
      for (char x : alphabet.letters()) {
        images.push_back(f(x));
      }
      return Morphism(alphabet, alphabet, std::move(images), std::move(name));
    }
  }  // namespace

  Morphism identity_morphism(Alphabet const& alphabet) {
    return letterwise(alphabet, "identity", [](char x) { return Word(x); });
  }

  Morphism collapse_to(Alphabet const& alphabet, char a) {
    require(alphabet, a);
    return letterwise(alphabet, std::string("collapse_to(") + a + ")",
                      [a](char) { return Word(a); });
  }

  Morphism project(Alphabet const& alphabet, char c) {
    require(alphabet, c);
    return letterwise(alphabet, std::string("project(") + c + ")",
                      [c](char x) { return x == c ? Word(c) : Word(); });
  }

  Morphism erase(Alphabet const& alphabet, char c) {
    require(alphabet, c);
    return letterwise(alphabet, std::string("erase(") + c + ")",
                      [c](char x) { return x == c ? Word() : Word(x); });
  }

  Morphism identify(Alphabet const& alphabet, char d, char c) {
    require(alphabet, d);
    require(alphabet, c);
    return letterwise(alphabet,
                      std::string("identify(") + d + "," + c + ")",
                      [d, c](char x) { return x == d ? Word(c) : Word(x); });
  }

  Morphism custom_morphism(Alphabet const&                    source,
                           Alphabet const&                    target,
                           std::map<char, std::string> const& map) {
    std::vector<Word> images;
    for (char x : source.letters()) {
      auto it = map.find(x);
      if (it == map.end()) {
        throw FormatError(std::string("custom morphism has no image for '")
                          + x + "'");
      }
      images.emplace_back(it->second);
    }
    for (auto const& [letter, image] : map) {
      if (!source.contains(letter)) {
        throw AlphabetError(std::string("custom morphism maps letter '")
                            + letter + "' outside source alphabet");
      }
    }
    return Morphism(source, target, std::move(images));
  }

  std::vector<Morphism> standard_morphisms(Alphabet const& alphabet) {
    std::vector<Morphism> family;
    for (char a : alphabet.letters()) {
      family.push_back(collapse_to(alphabet, a));
    }
    for (char c : alphabet.letters()) {
      family.push_back(project(alphabet, c));
    }
    for (char c : alphabet.letters()) {
      family.push_back(erase(alphabet, c));
    }
    for (char d : alphabet.letters()) {
      for (char c : alphabet.letters()) {
        if (c != d) {
          family.push_back(identify(alphabet, d, c));
        }
      }
    }
    return family;
  }

  std::vector<Morphism> all_endomorphisms(Alphabet const& alphabet,
                                          std::size_t     max_len) {
    auto const  words = alphabet.words_up_to(max_len);
    std::size_t n     = alphabet.size();
    std::vector<std::size_t> digits(n, 0);
    std::vector<Morphism>    family;
    while (true) {
      std::vector<Word> images;
      images.reserve(n);
      for (auto d : digits) {
        images.push_back(words[d]);
      }
      family.emplace_back(alphabet, alphabet, std::move(images), "endo");
      // odometer, last letter fastest
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++digits[i] < words.size()) {
          break;
        }
        digits[i] = 0;
        if (i == 0) {
          return family;
        }
      }
    }
  }

  Morphism parse_morphism(std::string_view text) {
    std::optional<Alphabet>     source;
    std::optional<Alphabet>     target;
    std::map<char, std::string> map;
    std::size_t                 line_no = 0;
    for (auto line : detail::lines(text)) {
      ++line_no;
      if (detail::blank(line)) {
        continue;
      }
      auto where = "morphism line " + std::to_string(line_no) + ": ";
      if (line.starts_with("alphabet ")) {
        source.emplace(detail::trim(line.substr(9)));
      } else if (line.starts_with("target ")) {
        target.emplace(detail::trim(line.substr(7)));
      } else if (line.size() >= 2 && line[1] == '=') {
        char letter = line[0];
        if (map.contains(letter)) {
          throw FormatError(where + "duplicate image for '" + letter + "'");
        }
        map[letter] = std::string(line.substr(2));
      } else {
        throw FormatError(where + "expected 'alphabet', 'target' or "
                                  "'letter=image', got '"
                          + std::string(line) + "'");
      }
    }
    if (!source) {
      throw FormatError("morphism: missing 'alphabet' header");
    }
    return custom_morphism(*source, target ? *target : *source, map);
  }

  std::string to_string(Morphism const& phi) {
    std::ostringstream out;
    out << "alphabet " << phi.source().letters() << '\n';
    if (!phi.is_endomorphism()) {
      out << "target " << phi.target().letters() << '\n';
    }
    for (std::size_t i = 0; i < phi.source().size(); ++i) {
      out << phi.source()[i] << '=' << phi.images()[i].str() << '\n';
    }
    return out.str();
  }

  Morphism read_morphism_file(std::string const& path) {
    return parse_morphism(detail::read_file(path));
  }

}  // namespace cpmonoid
