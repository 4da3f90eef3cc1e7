#pragma once

// Test-side reference implementations and seeded generators. The reference
// functions work on plain std::string and share no code with the library.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cpmonoid/morphism.hpp"
#include "cpmonoid/template.hpp"

namespace testing {

  using Strings = std::vector<std::string>;

  inline std::string ref_apply(std::map<char, std::string> const& images,
                               std::string const&                 u) {
    std::string out;
    for (char c : u) {
      out += images.at(c);
    }
    return out;
  }

  inline std::map<char, std::string> images_of(cpmonoid::Morphism const& phi) {
    std::map<char, std::string> m;
    for (std::size_t i = 0; i < phi.source().size(); ++i) {
      m[phi.source()[i]] = phi.images()[i].str();
    }
    return m;
  }

  //! w_0 x_{v_1} w_1 ... evaluated by hand.
  inline std::string ref_eval(Strings const&                  constants,
                              std::vector<std::size_t> const& variables,
                              Strings const&                  args) {
    std::string out = constants[0];
    for (std::size_t j = 0; j < variables.size(); ++j) {
      out += args[variables[j]];
      out += constants[j + 1];
    }
    return out;
  }

  inline Strings strings_of(cpmonoid::Template const& t) {
    Strings s;
    for (auto const& w : t.constants()) {
      s.push_back(w.str());
    }
    return s;
  }

  inline std::size_t ref_count(std::string const& u, char a) {
    std::size_t n = 0;
    for (char c : u) {
      n += c == a ? 1 : 0;
    }
    return n;
  }

  //! All strings over \p letters of length at most \p n, shortlex.
  inline Strings ref_words(std::string const& letters, std::size_t n) {
    Strings all{""};
    Strings layer{""};
    for (std::size_t len = 1; len <= n; ++len) {
      Strings next;
      for (auto const& w : layer) {
        for (char c : letters) {
          next.push_back(w + c);
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return all;
  }

  inline std::size_t draw(std::mt19937_64& gen, std::size_t n) {
    return static_cast<std::size_t>(gen() % n);
  }

  inline std::string random_word(std::mt19937_64&   gen,
                                 std::string const& letters,
                                 std::size_t        len) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) {
      s += letters[draw(gen, letters.size())];
    }
    return s;
  }

  //! Random template over \p letters with arity \p k and Σp + e = total:
  //! the number of slots is uniform in [0, total] (0 if k == 0), the
  //! constant letters are spread uniformly over the constant slots.
  inline cpmonoid::Template random_template(std::mt19937_64&   gen,
                                            std::string const& letters,
                                            std::size_t        k,
                                            std::size_t        total) {
    std::size_t slots = k == 0 ? 0 : draw(gen, total + 1);
    std::size_t e     = total - slots;
    std::vector<std::size_t> vars;
    for (std::size_t j = 0; j < slots; ++j) {
      vars.push_back(draw(gen, k));
    }
    std::vector<std::string> constants(slots + 1);
    for (std::size_t j = 0; j < e; ++j) {
      constants[draw(gen, slots + 1)] += letters[draw(gen, letters.size())];
    }
    std::vector<cpmonoid::Word> ws;
    for (auto& c : constants) {
      ws.emplace_back(std::move(c));
    }
    return cpmonoid::Template(k, cpmonoid::Alphabet(letters), std::move(ws),
                              std::move(vars));
  }

  inline cpmonoid::Morphism random_endomorphism(std::mt19937_64&   gen,
                                                std::string const& letters,
                                                std::size_t        max_len) {
    std::vector<cpmonoid::Word> images;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      images.emplace_back(random_word(gen, letters, draw(gen, max_len + 1)));
    }
    cpmonoid::Alphabet alphabet(letters);
    return cpmonoid::Morphism(alphabet, alphabet, std::move(images));
  }

  inline cpmonoid::WordTuple random_tuple(std::mt19937_64&   gen,
                                          std::string const& letters,
                                          std::size_t        k,
                                          std::size_t        max_len) {
    cpmonoid::WordTuple t;
    for (std::size_t i = 0; i < k; ++i) {
      t.emplace_back(random_word(gen, letters, draw(gen, max_len + 1)));
    }
    return t;
  }

  //! Every unary template over abc with p + e ≤ 3, as a reference list
  //! built independently of enumerate_templates.
  inline std::vector<cpmonoid::Template> unary_corpus() {
    std::string const               letters = "abc";
    std::vector<cpmonoid::Template> out;
    for (std::size_t total = 0; total <= 3; ++total) {
      for (std::size_t p = 0; p <= total; ++p) {
        std::size_t e = total - p;
        // Compositions of e into p + 1 parts, then all fillings.
        std::vector<std::vector<std::size_t>> comps;
        std::vector<std::size_t>              cur(p + 1, 0);
        std::function<void(std::size_t, std::size_t)> rec
            = [&](std::size_t slot, std::size_t left) {
                if (slot == p) {
                  cur[slot] = left;
                  comps.push_back(cur);
                  return;
                }
                for (std::size_t n = 0; n <= left; ++n) {
                  cur[slot] = n;
                  rec(slot + 1, left - n);
                }
              };
        rec(0, e);
        for (auto const& comp : comps) {
          std::vector<Strings> choices;
          for (auto len : comp) {
            Strings exact;
            for (auto const& w : ref_words(letters, len)) {
              if (w.size() == len) {
                exact.push_back(w);
              }
            }
            choices.push_back(exact);
          }
          std::vector<std::size_t> idx(p + 1, 0);
          while (true) {
            std::vector<cpmonoid::Word> ws;
            for (std::size_t j = 0; j <= p; ++j) {
              ws.emplace_back(choices[j][idx[j]]);
            }
            out.emplace_back(1, cpmonoid::Alphabet(letters), std::move(ws),
                             std::vector<std::size_t>(p, 0));
            std::size_t j = p + 1;
            while (j > 0 && ++idx[j - 1] == choices[j - 1].size()) {
              idx[j - 1] = 0;
              --j;
            }
            if (j == 0) {
              break;
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace testing
