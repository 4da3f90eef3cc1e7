#include "cpmonoid/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "cpmonoid/oracle.hpp"

namespace cpmonoid {

  namespace {

    std::size_t kernel_bound(SearchConfig const& c) {
      return std::max(c.domain_len, c.p * c.domain_len + c.e);
    }

    std::vector<Morphism> full_family(SearchConfig const& c) {
      if (c.family == SearchConfig::FamilyKind::standard) {
        return standard_morphisms(c.alphabet);
      }
      return all_endomorphisms(c.alphabet, c.image_len);
    }

    // Class id of each word, ids numbered by first occurrence.
    std::vector<std::size_t> kernel_signature(Morphism const&          phi,
                                              std::vector<Word> const& words) {
      std::map<Word, std::size_t> ids;
      std::vector<std::size_t>    sig;
      sig.reserve(words.size());
      for (auto const& w : words) {
        sig.push_back(ids.emplace(phi.apply(w), ids.size()).first->second);
      }
      return sig;
    }

    // Distinct permutations of the word with the given letter counts, in
    // lexicographic alphabet order.
    std::vector<Word> arrangements(Alphabet const&                 alphabet,
                                   std::vector<std::size_t> const& counts) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        idx.insert(idx.end(), counts[i], i);
      }
      std::vector<Word> result;
      do {
        std::string s;
        for (auto i : idx) {
          s += alphabet[i];
        }
        result.emplace_back(std::move(s));
      } while (std::next_permutation(idx.begin(), idx.end()));
      return result;
    }

  }  // namespace

  std::vector<Morphism> search_family(SearchConfig const& config) {
    auto const words = config.alphabet.words_up_to(kernel_bound(config));
    std::set<std::vector<std::size_t>> seen;
    std::vector<Morphism>              result;
    for (auto& phi : full_family(config)) {
      if (seen.insert(kernel_signature(phi, words)).second) {
        result.push_back(std::move(phi));
      }
    }
    return result;
  }

  SearchStats enumerate_consistent(
      SearchConfig const&                               config,
      std::function<bool(CandidateTable const&)> const& visit) {
    using clock = std::chrono::steady_clock;
    auto const         start = clock::now();
    auto const&        sigma = config.alphabet;
    auto const         domain = sigma.words_up_to(config.domain_len);
    std::size_t const  d = domain.size();
    SearchStats        stats;
    stats.family_size = full_family(config).size();
    auto const family = search_family(config);
    stats.distinct_kernels = family.size();

    // For each domain word x, the constraints (morphism, earliest word of
    // x's class) with that word before x.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> constraints(d);
    for (std::size_t m = 0; m < family.size(); ++m) {
      auto sig = kernel_signature(family[m], domain);
      std::map<std::size_t, std::size_t> first;
      for (std::size_t x = 0; x < d; ++x) {
        auto [it, fresh] = first.emplace(sig[x], x);
        if (!fresh) {
          constraints[x].emplace_back(m, it->second);
        }
      }
    }

    std::vector<std::vector<Word>> candidates(d);
    candidates[0] = sigma.words_of_length(config.e);
    auto fill_candidates = [&](Word const& at_empty) {
      for (std::size_t x = 1; x < d; ++x) {
        std::vector<std::size_t> counts;
        for (char a : sigma.letters()) {
          counts.push_back(config.p * count(domain[x], a)
                           + count(at_empty, a));
        }
        candidates[x] = arrangements(sigma, counts);
      }
    };

    std::vector<std::vector<Word>> images(family.size(), std::vector<Word>(d));
    std::vector<std::size_t>       choice(d, 0);
    CandidateTable                 table(d);
    for (std::size_t x = 0; x < d; ++x) {
      table[x].first = domain[x];
    }

    auto fits = [&](std::size_t x, Word const& value) {
      for (auto const& [m, rep] : constraints[x]) {
        if (family[m].apply(value) != images[m][rep]) {
          return false;
        }
      }
      return true;
    };

    // choice[x] is the next candidate index to try at depth x.
    std::size_t depth = 0;
    while (true) {
      if (depth == d) {
        if (!visit(table)) {
          return stats;
        }
        --depth;
        continue;
      }
      bool placed = false;
      while (choice[depth] < candidates[depth].size()) {
        Word const& value = candidates[depth][choice[depth]++];
        ++stats.nodes;
        if (stats.nodes > config.node_budget
            || ((stats.nodes & 1023U) == 0
                && std::chrono::duration<double>(clock::now() - start).count()
                       > config.time_budget_seconds)) {
          stats.complete = false;
          return stats;
        }
        if (!fits(depth, value)) {
          continue;
        }
        table[depth].second = value;
        for (std::size_t m = 0; m < family.size(); ++m) {
          images[m][depth] = family[m].apply(value);
        }
        if (depth == 0) {
          fill_candidates(value);
        }
        placed = true;
        break;
      }
      if (placed) {
        ++depth;
        if (depth < d) {
          choice[depth] = 0;
        }
        continue;
      }
      if (depth == 0) {
        return stats;
      }
      --depth;
    }
  }

  bool is_consistent(CandidateTable const& table, SearchConfig const& config) {
    auto const& sigma = config.alphabet;
    if (table.empty() || !table.front().first.empty()) {
      return false;
    }
    Word const& at_empty = table.front().second;
    for (auto const& [x, fx] : table) {
      if (fx.size() != config.p * x.size() + config.e) {
        return false;
      }
      for (char a : sigma.letters()) {
        if (count(fx, a) != config.p * count(x, a) + count(at_empty, a)) {
          return false;
        }
      }
    }
    for (auto const& phi : full_family(config)) {
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
          if (phi.apply(table[i].first) == phi.apply(table[j].first)
              && phi.apply(table[i].second) != phi.apply(table[j].second)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<Template> template_representable(CandidateTable const& table,
                                                 SearchConfig const&   config) {
    std::optional<Template> found;
    for_each_template(config.alphabet, 1, {config.p}, config.e, config.e,
                      [&](Template const& t) {
                        for (auto const& [x, fx] : table) {
                          if (t.eval({x}) != fx) {
                            return true;
                          }
                        }
                        found = t;
                        return false;
                      });
    return found;
  }

  int ExploreReport::exit_status() const noexcept {
    if (!candidates.empty()) {
      return 1;
    }
    return stats.complete ? 0 : 4;
  }

  ExploreReport explore(SearchConfig const& config) {
    ExploreReport report;
    report.config = config;

    auto const domain = config.alphabet.words_up_to(config.domain_len);
    std::vector<std::vector<Word>> restrictions;
    for_each_template(config.alphabet, 1, {config.p}, config.e, config.e,
                      [&](Template const& t) {
                        std::vector<Word> values;
                        for (auto const& x : domain) {
                          values.push_back(t.eval({x}));
                        }
                        restrictions.push_back(std::move(values));
                        return true;
                      });
    std::set<std::vector<Word>> representable(restrictions.begin(),
                                              restrictions.end());

    report.stats = enumerate_consistent(config, [&](CandidateTable const& t) {
      ++report.consistent;
      std::vector<Word> values;
      for (auto const& [x, fx] : t) {
        values.push_back(fx);
      }
      if (representable.count(values) != 0) {
        ++report.representable;
      } else {
        report.candidates.push_back(t);
      }
      return true;
    });
    return report;
  }

  std::string to_string(ExploreReport const& report) {
    auto const& c = report.config;
    std::string s = "explore alphabet " + c.alphabet.letters() + " domain_len "
                    + std::to_string(c.domain_len) + " coeff "
                    + std::to_string(c.p) + "," + std::to_string(c.e)
                    + " family ";
    if (c.family == SearchConfig::FamilyKind::standard) {
      s += "standard\n";
    } else {
      s += "endomorphisms image_len " + std::to_string(c.image_len) + "\n";
    }
    s += "family_size " + std::to_string(report.stats.family_size)
         + " distinct_kernels " + std::to_string(report.stats.distinct_kernels)
         + "\n";
    s += std::string("status ")
         + (report.stats.complete ? "complete" : "budget-exhausted") + "\n";
    s += "nodes " + std::to_string(report.stats.nodes) + "\n";
    s += "consistent " + std::to_string(report.consistent) + "\n";
    s += "representable " + std::to_string(report.representable) + "\n";
    s += "non_representable " + std::to_string(report.candidates.size()) + "\n";
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
      s += "candidate " + std::to_string(i + 1) + "\n";
      std::vector<std::pair<WordTuple, Word>> entries;
      for (auto const& [x, fx] : report.candidates[i]) {
        entries.push_back({{x}, fx});
      }
      s += format_table(entries);
    }
    return s;
  }

}  // namespace cpmonoid
