#include "cpmonoid/congruence.hpp"

#include <array>
#include <map>
#include <sstream>

#include "cpmonoid/error.hpp"
#include "text.hpp"

namespace cpmonoid {

  FiniteMonoid::FiniteMonoid(std::vector<std::string> elements,
                             std::size_t              identity,
                             std::vector<std::size_t> table,
                             std::string              name)
      : elements_(std::move(elements)),
        identity_(identity),
        table_(std::move(table)),
        name_(std::move(name)) {
    std::size_t n = elements_.size();
    if (n == 0) {
      throw FormatError("finite monoid must have at least one element");
    }
    if (identity_ >= n) {
      throw FormatError("finite monoid identity out of range");
    }
    if (table_.size() != n * n) {
      throw FormatError("finite monoid table must have "
                        + std::to_string(n * n) + " entries");
    }
    for (auto x : table_) {
      if (x >= n) {
        throw FormatError("finite monoid table entry out of range");
      }
    }
  }

  MonoidElement FiniteMonoid::element(std::string_view name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] == name) {
        return {i};
      }
    }
    throw FormatError("unknown monoid element '" + std::string(name) + "'");
  }

  std::optional<MonoidViolation> monoid_validate(FiniteMonoid const& m) {
    auto const e = m.identity();
    for (std::size_t i = 0; i < m.size(); ++i) {
      MonoidElement x{i};
      if (m.multiply(e, x) != x) {
        return MonoidViolation{MonoidViolation::Kind::left_identity,
                               {x},
                               "identity law fails: " + m.element_name(e)
                                   + "*" + m.element_name(x)
                                   + " != " + m.element_name(x)};
      }
      if (m.multiply(x, e) != x) {
        return MonoidViolation{MonoidViolation::Kind::right_identity,
                               {x},
                               "identity law fails: " + m.element_name(x)
                                   + "*" + m.element_name(e)
                                   + " != " + m.element_name(x)};
      }
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        for (std::size_t k = 0; k < m.size(); ++k) {
          MonoidElement x{i}, y{j}, z{k};
          if (m.multiply(m.multiply(x, y), z)
              != m.multiply(x, m.multiply(y, z))) {
            return MonoidViolation{
                MonoidViolation::Kind::associativity,
                {x, y, z},
                "associativity fails on (" + m.element_name(x) + ","
                    + m.element_name(y) + "," + m.element_name(z) + ")"};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteMonoid parse_finite_monoid(std::string_view text, std::string name) {
    std::vector<std::string>      elements;
    std::optional<std::string>    identity;
    std::vector<std::string_view> rows;
    for (auto line : detail::lines(text)) {
      if (detail::blank(line)) {
        continue;
      }
      auto toks = detail::tokens(line);
      if (toks.front() == "elements") {
        if (!elements.empty()) {
          throw FormatError("monoid: duplicate 'elements' line");
        }
        for (std::size_t i = 1; i < toks.size(); ++i) {
          elements.emplace_back(toks[i]);
        }
      } else if (toks.front() == "identity") {
        if (toks.size() != 2) {
          throw FormatError("monoid: 'identity' takes one element");
        }
        identity = std::string(toks[1]);
      } else {
        rows.push_back(line);
      }
    }
    if (elements.empty() || !identity) {
      throw FormatError("monoid: need 'elements' and 'identity' lines");
    }
    std::size_t n = elements.size();
    if (rows.size() != n) {
      throw FormatError("monoid: expected " + std::to_string(n)
                        + " table rows, got " + std::to_string(rows.size()));
    }
    std::map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(elements[i], i).second) {
        throw FormatError("monoid: duplicate element " + elements[i]);
      }
    }
    auto lookup = [&](std::string_view s) {
      auto it = index.find(s);
      if (it == index.end()) {
        throw FormatError("monoid: unknown element '" + std::string(s)
                          + "'");
      }
      return it->second;
    };
    std::vector<std::size_t> table;
    for (auto row : rows) {
      auto toks = detail::tokens(row);
      if (toks.size() != n) {
        throw FormatError("monoid: table row must have " + std::to_string(n)
                          + " entries: '" + std::string(row) + "'");
      }
      for (auto t : toks) {
        table.push_back(lookup(t));
      }
    }
    FiniteMonoid m(std::move(elements), lookup(*identity), std::move(table),
                   std::move(name));
    if (auto v = monoid_validate(m)) {
      throw FormatError("monoid: " + v->message);
    }
    return m;
  }

  std::string to_string(FiniteMonoid const& m) {
    std::ostringstream out;
    out << "elements";
    for (auto const& e : m.elements()) {
      out << ' ' << e;
    }
    out << "\nidentity " << m.element_name(m.identity()) << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        out << (j ? " " : "") << m.element_name(m.multiply({i}, {j}));
      }
      out << '\n';
    }
    return out.str();
  }

  MonoidMorphism::MonoidMorphism(Alphabet                   alphabet,
                                 FiniteMonoid               monoid,
                                 std::vector<MonoidElement> assignment)
      : alphabet_(std::move(alphabet)),
        monoid_(std::move(monoid)),
        assignment_(std::move(assignment)) {
    if (assignment_.size() != alphabet_.size()) {
      throw FormatError("monoid morphism must assign every letter");
    }
    for (auto x : assignment_) {
      if (x.index >= monoid_.size()) {
        throw FormatError("monoid morphism assigns an unknown element");
      }
    }
  }

  MonoidElement MonoidMorphism::apply(Word const& u) const {
    auto acc = monoid_.identity();
    for (char c : u) {
      acc = monoid_.multiply(acc, assignment_[alphabet_.index(c)]);
    }
    return acc;
  }

  MonoidMorphism parse_monoid_morphism(std::string_view    text,
                                       Alphabet const&     alphabet,
                                       FiniteMonoid const& m) {
    std::vector<std::optional<MonoidElement>> slots(alphabet.size());
    for (auto line : detail::lines(text)) {
      if (detail::blank(line)) {
        continue;
      }
      line = detail::trim(line);
      if (line.size() < 3 || line[1] != '=') {
        throw FormatError("monoid morphism: expected 'letter=element', got '"
                          + std::string(line) + "'");
      }
      auto i = alphabet.index(line[0]);
      if (slots[i]) {
        throw FormatError(std::string("monoid morphism: duplicate letter ")
                          + line[0]);
      }
      slots[i] = m.element(line.substr(2));
    }
    std::vector<MonoidElement> assignment;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!slots[i]) {
        throw FormatError(std::string("monoid morphism: letter ")
                          + alphabet[i] + " unassigned");
      }
      assignment.push_back(*slots[i]);
    }
    return MonoidMorphism(alphabet, m, std::move(assignment));
  }

  std::string to_string(MonoidMorphism const& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.alphabet().size(); ++i) {
      s += mu.alphabet()[i];
      s += '=';
      s += mu.monoid().element_name(mu.assignment()[i]);
      s += '\n';
    }
    return s;
  }

  CongruenceSpec CongruenceSpec::restricted(Morphism phi) {
    if (!phi.is_endomorphism()) {
      throw AlphabetError("restricted congruence needs an endomorphism, got "
                          + phi.source().letters() + " -> "
                          + phi.target().letters());
    }
    return CongruenceSpec(std::move(phi));
  }

  CongruenceSpec CongruenceSpec::finite_kernel(MonoidMorphism mu) {
    return CongruenceSpec(std::move(mu));
  }

  Alphabet const& CongruenceSpec::alphabet() const noexcept {
    if (auto phi = std::get_if<Morphism>(&kernel_)) {
      return phi->source();
    }
    return std::get<MonoidMorphism>(kernel_).alphabet();
  }

  std::string CongruenceSpec::describe() const {
    if (auto phi = std::get_if<Morphism>(&kernel_)) {
      return "restricted " + phi->name();
    }
    auto const& mu = std::get<MonoidMorphism>(kernel_);
    std::string s  = "finite-kernel " + mu.monoid().name() + " [";
    for (std::size_t i = 0; i < mu.alphabet().size(); ++i) {
      s += (i ? " " : "");
      s += mu.alphabet()[i];
      s += "=" + mu.monoid().element_name(mu.assignment()[i]);
    }
    return s + "]";
  }

  CanonicalImage word_image(CongruenceSpec const& spec, Word const& u) {
    if (spec.is_restricted()) {
      return spec.morphism().apply(u);
    }
    return spec.monoid_morphism().apply(u);
  }

  bool congruent(CongruenceSpec const& spec, Word const& u, Word const& v) {
    return word_image(spec, u) == word_image(spec, v);
  }

  std::string to_string(CongruenceSpec const& spec,
                        CanonicalImage const& image) {
    if (auto w = std::get_if<Word>(&image)) {
      return quoted(*w);
    }
    return spec.monoid_morphism().monoid().element_name(
        std::get<MonoidElement>(image));
  }

  bool for_each_congruent_pair(
      CongruenceSpec const&                                spec,
      std::size_t                                          length_bound,
      std::function<bool(Word const&, Word const&)> const& visit) {
    auto const words = spec.alphabet().words_up_to(length_bound);
    std::map<CanonicalImage, std::vector<std::size_t>> buckets;
    for (std::size_t j = 0; j < words.size(); ++j) {
      auto& bucket = buckets[word_image(spec, words[j])];
      for (auto i : bucket) {
        if (!visit(words[i], words[j])) {
          return false;
        }
      }
      bucket.push_back(j);
    }
    return true;
  }

  std::vector<WordPair> congruent_pairs(CongruenceSpec const& spec,
                                        std::size_t           length_bound) {
    std::vector<WordPair> pairs;
    for_each_congruent_pair(spec, length_bound,
                            [&](Word const& u, Word const& v) {
                              pairs.emplace_back(u, v);
                              return true;
                            });
    return pairs;
  }

  namespace {
    std::vector<std::string> numbered(std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return names;
    }

    FiniteMonoid from_function(std::vector<std::string> names,
                               std::size_t              identity,
                               std::string              name,
                               auto&&                   op) {
      std::size_t              n = names.size();
      std::vector<std::size_t> table;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          table.push_back(op(i, j));
        }
      }
      return FiniteMonoid(std::move(names), identity, std::move(table),
                          std::move(name));
    }
  }  // namespace

  FiniteMonoid cyclic_additive(std::size_t n) {
    return from_function(numbered(n), 0, "Z" + std::to_string(n) + "+",
                         [n](std::size_t i, std::size_t j) {
                           return (i + j) % n;
                         });
  }

  FiniteMonoid cyclic_multiplicative(std::size_t n) {
    return from_function(numbered(n), 1 % n, "Z" + std::to_string(n) + "*",
                         [n](std::size_t i, std::size_t j) {
                           return (i * j) % n;
                         });
  }

  std::vector<FiniteMonoid> monoid_catalog() {
    std::vector<FiniteMonoid> catalog;
    for (std::size_t n = 2; n <= 6; ++n) {
      catalog.push_back(cyclic_additive(n));
    }
    for (std::size_t n = 2; n <= 6; ++n) {
      catalog.push_back(cyclic_multiplicative(n));
    }
    // Maps {0,1} -> {0,1} as pairs (f(0), f(1)): id=(0,1), swap=(1,0),
    // c0=(0,0), c1=(1,1). x*y means "apply x, then y".
    std::vector<std::array<std::size_t, 2>> maps{
        {0, 1}, {1, 0}, {0, 0}, {1, 1}};
    catalog.push_back(from_function(
        {"id", "swap", "c0", "c1"}, 0, "T2",
        [&](std::size_t x, std::size_t y) {
          std::array<std::size_t, 2> r{maps[y][maps[x][0]],
                                       maps[y][maps[x][1]]};
          for (std::size_t k = 0; k < maps.size(); ++k) {
            if (maps[k] == r) {
              return k;
            }
          }
          return std::size_t{0};
        }));
    // {1, l, r}: xy = x for x, y in {l, r}
    catalog.push_back(from_function({"1", "l", "r"}, 0, "LZ2+1",
                                    [](std::size_t x, std::size_t y) {
                                      return x == 0 ? y : x;
                                    }));
    // {1, l, r}: xy = y for x, y in {l, r}
    catalog.push_back(from_function({"1", "l", "r"}, 0, "RZ2+1",
                                    [](std::size_t x, std::size_t y) {
                                      return y == 0 ? x : y;
                                    }));
    return catalog;
  }

  std::vector<CongruenceSpec> finite_monoid_family(Alphabet const& alphabet) {
    std::vector<CongruenceSpec> family;
    for (auto const& m : monoid_catalog()) {
      std::vector<std::size_t> digits(alphabet.size(), 0);
      while (true) {
        std::vector<MonoidElement> assignment;
        for (auto d : digits) {
          assignment.push_back({d});
        }
        family.push_back(CongruenceSpec::finite_kernel(
            MonoidMorphism(alphabet, m, std::move(assignment))));
        std::size_t i = digits.size();
        bool        done = true;
        while (i > 0) {
          --i;
          if (++digits[i] < m.size()) {
            done = false;
            break;
          }
          digits[i] = 0;
        }
        if (done) {
          break;
        }
      }
    }
    return family;
  }

}  // namespace cpmonoid
