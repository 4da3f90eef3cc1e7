#include "cpmonoid/oracle.hpp"

#include <algorithm>
#include <set>

#include "cpmonoid/error.hpp"
#include "text.hpp"

namespace cpmonoid {

  ////////////////////////////////////////////////////////////////////////
  // WordFunction
  ////////////////////////////////////////////////////////////////////////

  WordFunction::WordFunction(std::size_t arity,
                             Alphabet    alphabet,
                             bool        supports_extension)
      : arity_(arity),
        alphabet_(std::move(alphabet)),
        supports_extension_(supports_extension) {}

  std::size_t
  WordFunction::TupleHash::operator()(WordTuple const& t) const noexcept {
    std::size_t h = t.size();
    for (auto const& w : t) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  Word WordFunction::evaluate(WordTuple const& args) const {
    if (args.size() != arity_) {
      throw ArityError(describe() + " has arity " + std::to_string(arity_)
                       + ", got " + std::to_string(args.size())
                       + " arguments");
    }
    for (auto const& w : args) {
      if (supports_extension_) {
        for (char c : w) {
          if (!is_valid_letter(c)) {
            throw AlphabetError("argument " + quoted(w)
                                + " contains an invalid letter");
          }
        }
      } else {
        alphabet_.check(w);
      }
    }
    {
      std::lock_guard lock(mutex_);
      ++stats_.calls;
      if (caching_) {
        if (auto it = cache_.find(args); it != cache_.end()) {
          return it->second;
        }
      }
      ++stats_.backend_queries;
    }
    Word result = compute(args);
    std::lock_guard lock(mutex_);
    if (caching_) {
      cache_.emplace(args, result);
    }
    return result;
  }

  QueryStats WordFunction::stats() const {
    std::lock_guard lock(mutex_);
    return stats_;
  }

  void WordFunction::reset_stats() {
    std::lock_guard lock(mutex_);
    stats_ = {};
  }

  void WordFunction::set_caching(bool enabled) {
    std::lock_guard lock(mutex_);
    caching_ = enabled;
    if (!enabled) {
      cache_.clear();
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Backends
  ////////////////////////////////////////////////////////////////////////

  TemplateFunction::TemplateFunction(Template t)
      : WordFunction(t.arity(), t.alphabet(), true), template_(std::move(t)) {}

  std::string TemplateFunction::describe() const {
    return "template " + body_string(template_);
  }

  Word TemplateFunction::compute(WordTuple const& args) const {
    return template_.eval_extended(args);
  }

  BuiltinFunction::BuiltinFunction(std::string name,
                                   std::size_t arity,
                                   Alphabet    alphabet,
                                   bool        supports_extension,
                                   Body        body)
      : WordFunction(arity, std::move(alphabet), supports_extension),
        name_(std::move(name)),
        body_(std::move(body)) {}

  std::string BuiltinFunction::describe() const {
    return "builtin " + name_;
  }

  Word BuiltinFunction::compute(WordTuple const& args) const {
    return body_(args);
  }

  TableFunction::TableFunction(std::size_t               arity,
                               Alphabet                  alphabet,
                               std::map<WordTuple, Word> entries)
      : WordFunction(arity, std::move(alphabet), false),
        entries_(std::move(entries)) {
    for (auto const& [args, result] : entries_) {
      if (args.size() != arity) {
        throw FormatError("table entry with wrong number of arguments");
      }
      for (auto const& w : args) {
        this->alphabet().check(w);
      }
      this->alphabet().check(result);
    }
  }

  std::string TableFunction::describe() const {
    return "table (" + std::to_string(entries_.size()) + " entries)";
  }

  Word TableFunction::compute(WordTuple const& args) const {
    auto it = entries_.find(args);
    if (it == entries_.end()) {
      throw OracleError("table has no entry for " + quoted(args));
    }
    return it->second;
  }

  FrozenFunction::FrozenFunction(WordFunctionPtr             base,
                                 std::map<std::size_t, Word> frozen)
      : WordFunction(base->arity() - std::min(base->arity(), frozen.size()),
                     base->alphabet(),
                     base->supports_extension()),
        base_(std::move(base)),
        frozen_(std::move(frozen)) {
    for (auto const& [pos, value] : frozen_) {
      if (pos >= base_->arity()) {
        throw ArityError("cannot freeze position " + std::to_string(pos + 1)
                         + " of a function of arity "
                         + std::to_string(base_->arity()));
      }
      if (!base_->supports_extension()) {
        base_->alphabet().check(value);
      }
    }
  }

  WordTuple FrozenFunction::splice(WordTuple const& rest) const {
    WordTuple   full;
    std::size_t next = 0;
    full.reserve(base_->arity());
    for (std::size_t i = 0; i < base_->arity(); ++i) {
      if (auto it = frozen_.find(i); it != frozen_.end()) {
        full.push_back(it->second);
      } else {
        full.push_back(rest.at(next++));
      }
    }
    return full;
  }

  std::string FrozenFunction::describe() const {
    std::string s = base_->describe() + " frozen at";
    for (auto const& [pos, value] : frozen_) {
      s += " x" + std::to_string(pos + 1) + "=" + quoted(value);
    }
    return s;
  }

  Word FrozenFunction::compute(WordTuple const& args) const {
    return base_->evaluate(splice(args));
  }

  WordFunctionPtr from_template(Template t) {
    return std::make_shared<TemplateFunction>(std::move(t));
  }

  std::shared_ptr<FrozenFunction const>
  freeze(WordFunctionPtr f, std::size_t position, Word value) {
    if (position >= f->arity()) {
      throw ArityError("cannot freeze position " + std::to_string(position + 1)
                       + " of a function of arity "
                       + std::to_string(f->arity()));
    }
    return std::make_shared<FrozenFunction>(
        std::move(f), std::map<std::size_t, Word>{{position, std::move(value)}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Builtins
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct BuiltinDef {
      std::string name;
      std::size_t arity;
      bool        extension;
      std::function<BuiltinFunction::Body(Alphabet const&)> make;
    };

    std::vector<BuiltinDef> const& builtin_defs() {
      static std::vector<BuiltinDef> const defs{
          {"reverse", 1, true,
           [](Alphabet const&) {
             return [](WordTuple const& x) {
               std::string s = x[0].str();
               std::reverse(s.begin(), s.end());
               return Word(std::move(s));
             };
           }},
          {"sort_letters", 1, false,
           [](Alphabet const& alphabet) {
             return [alphabet](WordTuple const& x) {
               std::string s = x[0].str();
               std::stable_sort(s.begin(), s.end(), [&](char p, char q) {
                 return alphabet.index(p) < alphabet.index(q);
               });
               return Word(std::move(s));
             };
           }},
          {"square", 1, true,
           [](Alphabet const&) {
             return [](WordTuple const& x) { return concat(x[0], x[0]); };
           }},
          {"collapse_b_to_a", 1, true,
           [](Alphabet const& alphabet) {
             char a = alphabet[0];
             char b = alphabet.size() > 1 ? alphabet[1] : alphabet[0];
             return [a, b](WordTuple const& x) {
               std::string s = x[0].str();
               std::replace(s.begin(), s.end(), b, a);
               return Word(std::move(s));
             };
           }},
          {"erase_a", 1, true,
           [](Alphabet const& alphabet) {
             char a = alphabet[0];
             return [a](WordTuple const& x) {
               std::string s = x[0].str();
               s.erase(std::remove(s.begin(), s.end(), a), s.end());
               return Word(std::move(s));
             };
           }},
          {"first_letter_or_epsilon", 1, true,
           [](Alphabet const&) {
             return [](WordTuple const& x) {
               return x[0].empty() ? Word() : Word(x[0].front());
             };
           }},
          {"identity", 1, true,
           [](Alphabet const&) {
             return [](WordTuple const& x) { return x[0]; };
           }},
          {"concat", 2, true,
           [](Alphabet const&) {
             return [](WordTuple const& x) { return concat(x[0], x[1]); };
           }},
          {"swap_concat", 2, true,
           [](Alphabet const&) {
             return [](WordTuple const& x) { return concat(x[1], x[0]); };
           }},
      };
      return defs;
    }
  }  // namespace

  std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (auto const& d : builtin_defs()) {
      names.push_back(d.name);
    }
    return names;
  }

  WordFunctionPtr builtin(std::string_view name, Alphabet const& alphabet) {
    if (name == "first_letter_or_ε") {
      name = "first_letter_or_epsilon";
    }
    for (auto const& d : builtin_defs()) {
      if (d.name == name) {
        return std::make_shared<BuiltinFunction>(
            d.name, d.arity, alphabet, d.extension, d.make(alphabet));
      }
    }
    throw FormatError("unknown builtin '" + std::string(name) + "'");
  }

  std::vector<std::pair<std::string, WordFunctionPtr>>
  builtin_catalog(Alphabet const& alphabet) {
    std::vector<std::pair<std::string, WordFunctionPtr>> catalog;
    for (auto const& d : builtin_defs()) {
      catalog.emplace_back(d.name, builtin(d.name, alphabet));
    }
    return catalog;
  }

  ////////////////////////////////////////////////////////////////////////
  // Table files
  ////////////////////////////////////////////////////////////////////////

  std::shared_ptr<TableFunction const>
  parse_table(std::string_view text, std::optional<Alphabet> const& alphabet) {
    std::optional<std::size_t> arity;
    std::map<WordTuple, Word>  entries;
    std::set<char>             used;
    std::size_t                line_no = 0;
    for (auto line : detail::lines(text)) {
      ++line_no;
      if (line.empty()) {
        continue;
      }
      auto fields = detail::split(line, '\t');
      if (!arity) {
        arity = fields.size() - 1;
      } else if (fields.size() != *arity + 1) {
        throw FormatError("table line " + std::to_string(line_no)
                          + ": expected " + std::to_string(*arity + 1)
                          + " fields, got " + std::to_string(fields.size()));
      }
      WordTuple args;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        for (char c : fields[i]) {
          if (!is_valid_letter(c)) {
            throw FormatError("table line " + std::to_string(line_no)
                              + ": invalid letter");
          }
          used.insert(c);
        }
        if (i + 1 < fields.size()) {
          args.emplace_back(std::string(fields[i]));
        }
      }
      Word result{std::string(fields.back())};
      auto [it, inserted] = entries.emplace(std::move(args), result);
      if (!inserted && it->second != result) {
        throw FormatError("table line " + std::to_string(line_no)
                          + ": conflicting entry for " + quoted(it->first));
      }
    }
    if (!arity) {
      throw FormatError("table: no entries");
    }
    if (alphabet) {
      return std::make_shared<TableFunction>(*arity, *alphabet,
                                             std::move(entries));
    }
    if (used.empty()) {
      throw FormatError("table: cannot infer an alphabet from empty words");
    }
    return std::make_shared<TableFunction>(
        *arity, Alphabet(std::string(used.begin(), used.end())),
        std::move(entries));
  }

  std::shared_ptr<TableFunction const>
  read_table_file(std::string const&             path,
                  std::optional<Alphabet> const& alphabet) {
    return parse_table(detail::read_file(path), alphabet);
  }

  std::string
  format_table(std::vector<std::pair<WordTuple, Word>> const& entries) {
    std::string s;
    for (auto const& [args, result] : entries) {
      for (auto const& w : args) {
        s += w.str();
        s += '\t';
      }
      s += result.str();
      s += '\n';
    }
    return s;
  }

}  // namespace cpmonoid
