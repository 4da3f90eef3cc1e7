#include "cpmonoid/template.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "cpmonoid/error.hpp"
#include "text.hpp"

namespace cpmonoid {

  Template::Template(std::size_t              arity,
                     Alphabet                 alphabet,
                     std::vector<Word>        constants,
                     std::vector<std::size_t> variables)
      : arity_(arity),
        alphabet_(std::move(alphabet)),
        constants_(std::move(constants)),
        variables_(std::move(variables)) {
    if (constants_.size() != variables_.size() + 1) {
      throw FormatError("template needs one more constant than variables");
    }
    for (auto v : variables_) {
      if (v >= arity_) {
        throw FormatError("template variable x" + std::to_string(v + 1)
                          + " exceeds arity " + std::to_string(arity_));
      }
    }
    for (auto const& w : constants_) {
      alphabet_.check(w);
    }
  }

  Template Template::constant(Alphabet alphabet, std::size_t arity, Word w) {
    return Template(arity, std::move(alphabet), {std::move(w)}, {});
  }

  Template Template::identity(Alphabet alphabet) {
    return Template(1, std::move(alphabet), {Word(), Word()}, {0});
  }

  Word Template::eval_extended(WordTuple const& args) const {
    if (args.size() != arity_) {
      throw ArityError("template of arity " + std::to_string(arity_)
                       + " applied to " + std::to_string(args.size())
                       + " arguments");
    }
    Word result = constants_[0];
    for (std::size_t j = 0; j < variables_.size(); ++j) {
      result += args[variables_[j]];
      result += constants_[j + 1];
    }
    return result;
  }

  Word Template::eval(WordTuple const& args) const {
    for (auto const& a : args) {
      alphabet_.check(a);
    }
    return eval_extended(args);
  }

  TemplateBuilder::TemplateBuilder(Alphabet alphabet, std::size_t arity)
      : alphabet_(std::move(alphabet)), arity_(arity), constants_(1) {}

  TemplateBuilder& TemplateBuilder::append(Word const& w) {
    constants_.back() += w;
    return *this;
  }

  TemplateBuilder& TemplateBuilder::append(char letter) {
    constants_.back() += letter;
    return *this;
  }

  TemplateBuilder& TemplateBuilder::append_variable(std::size_t index) {
    variables_.push_back(index);
    constants_.emplace_back();
    return *this;
  }

  TemplateBuilder& TemplateBuilder::append(Template const&                 t,
                                           std::vector<std::size_t> const& map) {
    append(t.constants()[0]);
    for (std::size_t j = 0; j < t.slots(); ++j) {
      append_variable(map.at(t.variables()[j]));
      append(t.constants()[j + 1]);
    }
    return *this;
  }

  Template TemplateBuilder::build() const {
    return Template(arity_, alphabet_, constants_, variables_);
  }

  std::size_t LengthCoefficients::total() const noexcept {
    return std::accumulate(p.begin(), p.end(), e);
  }

  std::size_t LengthCoefficients::length(WordTuple const& args) const {
    std::size_t n = e;
    for (std::size_t i = 0; i < p.size(); ++i) {
      n += p[i] * args.at(i).size();
    }
    return n;
  }

  std::size_t LengthCoefficients::length(WordTuple const& args,
                                         char             a) const {
    auto        it = per_letter_offset.find(a);
    std::size_t n  = it == per_letter_offset.end() ? 0 : it->second;
    for (std::size_t i = 0; i < p.size(); ++i) {
      n += p[i] * count(args.at(i), a);
    }
    return n;
  }

  LengthCoefficients coefficients(Template const& t) {
    LengthCoefficients c;
    c.p.assign(t.arity(), 0);
    for (auto v : t.variables()) {
      ++c.p[v];
    }
    for (char a : t.alphabet().letters()) {
      c.per_letter_offset[a] = 0;
    }
    for (auto const& w : t.constants()) {
      c.e += w.size();
      for (char a : w) {
        ++c.per_letter_offset[a];
      }
    }
    return c;
  }

  Template map_words(Template const& t, Morphism const& phi) {
    if (!(phi.source() == t.alphabet())) {
      throw AlphabetError("map_words: morphism source "
                          + phi.source().letters()
                          + " differs from template alphabet "
                          + t.alphabet().letters());
    }
    std::vector<Word> constants;
    constants.reserve(t.constants().size());
    for (auto const& w : t.constants()) {
      constants.push_back(phi.apply(w));
    }
    return Template(t.arity(), phi.target(), std::move(constants),
                    t.variables());
  }

  namespace {
    // Calls visit on every k-tuple over words, first component slowest.
    template <typename F>
    bool for_each_tuple(std::vector<Word> const& words,
                        std::size_t              k,
                        F&&                      visit) {
      std::vector<std::size_t> digits(k, 0);
      WordTuple                args(k, words.empty() ? Word() : words[0]);
      if (words.empty() && k > 0) {
        return true;
      }
      while (true) {
        for (std::size_t i = 0; i < k; ++i) {
          args[i] = words[digits[i]];
        }
        if (!visit(args)) {
          return false;
        }
        std::size_t i = k;
        while (true) {
          if (i == 0) {
            return true;
          }
          --i;
          if (++digits[i] < words.size()) {
            break;
          }
          digits[i] = 0;
        }
      }
    }
  }  // namespace

  bool extensional_equal(Template const& t1,
                         Template const& t2,
                         std::size_t     length_bound) {
    if (t1.arity() != t2.arity() || !(t1.alphabet() == t2.alphabet())) {
      throw ArityError("extensional_equal needs same arity and alphabet");
    }
    if (t1 == t2) {
      return true;
    }
    auto const words = t1.alphabet().words_up_to(length_bound);
    return for_each_tuple(words, t1.arity(), [&](WordTuple const& args) {
      return t1.eval_extended(args) == t2.eval_extended(args);
    });
  }

  namespace {
    // Compositions of total into parts slots, each at most cap, with larger
    // leading parts first.
    void compositions(std::size_t                                      total,
                      std::size_t                                      parts,
                      std::size_t                                      cap,
                      std::vector<std::size_t>&                        prefix,
                      std::vector<std::vector<std::size_t>>&           out) {
      if (parts == 1) {
        if (total <= cap) {
          prefix.push_back(total);
          out.push_back(prefix);
          prefix.pop_back();
        }
        return;
      }
      for (std::size_t first = std::min(total, cap) + 1; first-- > 0;) {
        prefix.push_back(first);
        compositions(total - first, parts - 1, cap, prefix, out);
        prefix.pop_back();
      }
    }
  }  // namespace

  void for_each_template(Alphabet const&                 alphabet,
                         std::size_t                     arity,
                         std::vector<std::size_t> const& p,
                         std::size_t                     e,
                         std::size_t                     max_constant_len,
                         std::function<bool(Template const&)> const& visit) {
    if (p.size() != arity) {
      throw ArityError("enumerate_templates: need one p_i per argument");
    }
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < arity; ++i) {
      vars.insert(vars.end(), p[i], i);
    }
    std::size_t const n = vars.size();
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t>              prefix;
    compositions(e, n + 1, max_constant_len, prefix, comps);

    std::vector<std::vector<Word>> by_length(max_constant_len + 1);
    for (std::size_t len = 0; len <= std::min(e, max_constant_len); ++len) {
      by_length[len] = alphabet.words_of_length(len);
    }
    // vars is sorted, so next_permutation visits every sequence once.
    do {
      for (auto const& comp : comps) {
        std::vector<std::vector<Word>> choices;
        for (auto len : comp) {
          choices.push_back(by_length[len]);
        }
        std::vector<std::size_t> digits(n + 1, 0);
        std::vector<Word>        constants(n + 1);
        while (true) {
          for (std::size_t j = 0; j <= n; ++j) {
            constants[j] = choices[j][digits[j]];
          }
          if (!visit(Template(arity, alphabet, constants, vars))) {
            return;
          }
          std::size_t j    = n + 1;
          bool        done = true;
          while (j > 0) {
            --j;
            if (++digits[j] < choices[j].size()) {
              done = false;
              break;
            }
            digits[j] = 0;
          }
          if (done) {
            break;
          }
        }
      }
    } while (std::next_permutation(vars.begin(), vars.end()));
  }

  std::vector<Template>
  enumerate_templates(Alphabet const&                 alphabet,
                      std::size_t                     arity,
                      std::vector<std::size_t> const& p,
                      std::size_t                     e,
                      std::size_t                     max_constant_len) {
    std::vector<Template> result;
    for_each_template(alphabet, arity, p, e, max_constant_len,
                      [&](Template const& t) {
                        result.push_back(t);
                        return true;
                      });
    return result;
  }

  Template parse_template(std::string_view text) {
    std::optional<std::size_t> arity;
    std::optional<Alphabet>    alphabet;
    std::optional<std::string> body;
    for (auto line : detail::lines(text)) {
      if (detail::blank(line)) {
        continue;
      }
      if (line.starts_with("arity ")) {
        auto s = detail::trim(line.substr(6));
        if (s.empty()
            || !std::all_of(s.begin(), s.end(),
                            [](char c) { return c >= '0' && c <= '9'; })) {
          throw FormatError("template: bad arity '" + std::string(s) + "'");
        }
        arity = std::stoul(std::string(s));
      } else if (line.starts_with("alphabet ")) {
        alphabet.emplace(detail::trim(line.substr(9)));
      } else if (!body) {
        body = std::string(line);
      } else {
        throw FormatError("template: unexpected line '" + std::string(line)
                          + "'");
      }
    }
    if (!arity || !alphabet || !body) {
      throw FormatError("template: need 'arity', 'alphabet' and body lines");
    }
    std::vector<Word>        constants;
    std::vector<std::size_t> variables;
    for (auto tok : detail::tokens(*body)) {
      bool want_constant = constants.size() == variables.size();
      if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') {
        if (!want_constant) {
          throw FormatError("template: expected a variable, got " +
                            std::string(tok));
        }
        constants.emplace_back(std::string(tok.substr(1, tok.size() - 2)));
      } else if (tok.size() >= 2 && tok[0] == 'x'
                 && std::all_of(tok.begin() + 1, tok.end(),
                                [](char c) { return c >= '0' && c <= '9'; })
                 && tok[1] != '0') {
        if (want_constant) {
          throw FormatError("template: expected a quoted constant, got "
                            + std::string(tok));
        }
        variables.push_back(std::stoul(std::string(tok.substr(1))) - 1);
      } else {
        throw FormatError("template: bad token '" + std::string(tok) + "'");
      }
    }
    if (constants.size() != variables.size() + 1) {
      throw FormatError(
          "template: body must start and end with a quoted constant");
    }
    return Template(*arity, *alphabet, std::move(constants),
                    std::move(variables));
  }

  std::string body_string(Template const& t) {
    std::string s = quoted(t.constants()[0]);
    for (std::size_t j = 0; j < t.slots(); ++j) {
      s += " x" + std::to_string(t.variables()[j] + 1) + " "
           + quoted(t.constants()[j + 1]);
    }
    return s;
  }

  std::string to_string(Template const& t) {
    return "arity " + std::to_string(t.arity()) + "\nalphabet "
           + t.alphabet().letters() + "\n" + body_string(t) + "\n";
  }

  Template read_template_file(std::string const& path) {
    return parse_template(detail::read_file(path));
  }

}  // namespace cpmonoid
