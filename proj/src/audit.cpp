#include "cpmonoid/audit.hpp"

#include <functional>
#include <map>
#include <random>

#include "cpmonoid/error.hpp"

namespace cpmonoid {

  namespace {

    // Odometer over words^n, first position slowest; visit returns false to
    // stop. Returns false iff stopped.
    bool for_each_tuple(std::vector<Word> const&                    words,
                        std::size_t                                 n,
                        std::function<bool(WordTuple const&)> const& visit) {
      std::vector<std::size_t> idx(n, 0);
      WordTuple                t(n, words.front());
      while (true) {
        if (!visit(t)) {
          return false;
        }
        std::size_t i = n;
        while (true) {
          if (i == 0) {
            return true;
          }
          --i;
          if (++idx[i] < words.size()) {
            t[i] = words[idx[i]];
            break;
          }
          idx[i] = 0;
          t[i]   = words[0];
        }
      }
    }

    WordTuple inserted(WordTuple const& ctx, std::size_t i, Word const& w) {
      WordTuple t(ctx.begin(), ctx.end());
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), w);
      return t;
    }

  }  // namespace

  bool verify_witness(WordFunction const& f, Witness const& w) {
    auto const& [x, y] = w.inputs;
    if (x.size() != f.arity() || y.size() != f.arity()) {
      return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!congruent(w.spec, x[i], y[i])) {
        return false;
      }
    }
    Word fx = f.evaluate(x);
    Word fy = f.evaluate(y);
    if (fx != w.outputs.first || fy != w.outputs.second) {
      return false;
    }
    auto ix = word_image(w.spec, fx);
    auto iy = word_image(w.spec, fy);
    return ix == w.images.first && iy == w.images.second && ix != iy;
  }

  PreservationResult check_preservation(WordFunction const&   f,
                                        CongruenceSpec const& spec,
                                        std::size_t           length_bound,
                                        std::size_t           budget) {
    if (!(spec.alphabet() == f.alphabet())) {
      throw AlphabetError("congruence over " + spec.alphabet().letters()
                          + " but function over " + f.alphabet().letters());
    }
    PreservationResult          r;
    std::size_t const           k = f.arity();
    std::map<Word, CanonicalImage> images;
    auto image = [&](Word const& w) -> CanonicalImage const& {
      auto it = images.find(w);
      if (it == images.end()) {
        it = images.emplace(w, word_image(spec, w)).first;
      }
      return it->second;
    };

    // true = stop
    auto compare = [&](WordTuple const& x, WordTuple const& y) {
      if (r.checks >= budget) {
        r.budget_exhausted = true;
        return true;
      }
      ++r.checks;
      Word fx = f.evaluate(x);
      Word fy = f.evaluate(y);
      if (fx == fy) {
        return false;
      }
      auto const& ix = image(fx);
      auto const& iy = image(fy);
      if (ix != iy) {
        r.witness = Witness{spec, {x, y}, {fx, fy}, {ix, iy}};
        return true;
      }
      return false;
    };

    if (k == 0) {
      return r;
    }
    auto const pairs = congruent_pairs(spec, length_bound);
    if (k == 1) {
      for (auto const& [u, v] : pairs) {
        if (compare({u}, {v})) {
          return r;
        }
      }
      return r;
    }

    auto const words = f.alphabet().words_up_to(length_bound);
    for (std::size_t i = 0; i < k; ++i) {
      for (auto const& [u, v] : pairs) {
        bool go = for_each_tuple(words, k - 1, [&](WordTuple const& ctx) {
          return !compare(inserted(ctx, i, u), inserted(ctx, i, v));
        });
        if (!go) {
          return r;
        }
      }
    }

    // Mixed: each position is a diagonal word, a pair, or a reversed pair;
    // at least two positions differ and the first differing one is not
    // reversed.
    std::size_t const        w = words.size();
    std::size_t const        p = pairs.size();
    std::size_t const        options = w + 2 * p;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::size_t moving = 0;
      bool        first_reversed = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (idx[i] >= w) {
          if (moving == 0) {
            first_reversed = idx[i] >= w + p;
          }
          ++moving;
        }
      }
      if (moving >= 2 && !first_reversed) {
        WordTuple x(k);
        WordTuple y(k);
        for (std::size_t i = 0; i < k; ++i) {
          if (idx[i] < w) {
            x[i] = y[i] = words[idx[i]];
          } else if (idx[i] < w + p) {
            x[i] = pairs[idx[i] - w].first;
            y[i] = pairs[idx[i] - w].second;
          } else {
            x[i] = pairs[idx[i] - w - p].second;
            y[i] = pairs[idx[i] - w - p].first;
          }
        }
        if (compare(x, y)) {
          return r;
        }
      }
      std::size_t i = k;
      while (true) {
        if (i == 0) {
          return r;
        }
        --i;
        if (++idx[i] < options) {
          break;
        }
        idx[i] = 0;
      }
    }
  }

  std::string to_string(Family const& family) {
    switch (family.kind) {
      case Family::Kind::standard:
        return "standard";
      case Family::Kind::finite_monoids:
        return "finite_monoids";
      case Family::Kind::random:
        break;
    }
    return "random(seed=" + std::to_string(family.seed)
           + ",count=" + std::to_string(family.count)
           + ",image_len=" + std::to_string(family.image_len) + ")";
  }

  std::vector<Morphism> random_endomorphisms(Alphabet const& alphabet,
                                             std::uint64_t   seed,
                                             std::size_t     count,
                                             std::size_t     image_len) {
    std::mt19937_64       gen(seed);
    std::vector<Morphism> result;
    std::size_t const     n = alphabet.size();
    for (std::size_t m = 0; m < count; ++m) {
      std::vector<Word> images;
      std::string       name = "random[";
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t len = gen() % (image_len + 1);
        std::string s;
        for (std::size_t j = 0; j < len; ++j) {
          s += alphabet[gen() % n];
        }
        if (i > 0) {
          name += ' ';
        }
        name += alphabet[i];
        name += '=';
        name += s;
        images.emplace_back(std::move(s));
      }
      result.emplace_back(alphabet, alphabet, std::move(images), name + "]");
    }
    return result;
  }

  std::vector<CongruenceSpec> family_specs(Alphabet const& alphabet,
                                           Family const&   family) {
    std::vector<CongruenceSpec> specs;
    switch (family.kind) {
      case Family::Kind::standard:
        for (auto& phi : standard_morphisms(alphabet)) {
          specs.push_back(CongruenceSpec::restricted(std::move(phi)));
        }
        break;
      case Family::Kind::finite_monoids:
        specs = finite_monoid_family(alphabet);
        break;
      case Family::Kind::random:
        for (auto& phi : random_endomorphisms(alphabet, family.seed,
                                              family.count, family.image_len)) {
          specs.push_back(CongruenceSpec::restricted(std::move(phi)));
        }
        break;
    }
    return specs;
  }

  AuditResult audit(WordFunction const& f,
                    Family const&       family,
                    std::size_t         length_bound,
                    std::size_t         budget) {
    AuditResult r;
    for (auto const& spec : family_specs(f.alphabet(), family)) {
      auto pr = check_preservation(f, spec, length_bound, budget - r.checks);
      ++r.congruences_checked;
      r.checks += pr.checks;
      if (pr.witness) {
        r.witness = std::move(pr.witness);
        return r;
      }
      if (pr.budget_exhausted) {
        r.budget_exhausted = true;
        return r;
      }
    }
    return r;
  }

  std::vector<Family> escalation(CheckBudgets const& budgets) {
    std::vector<Family> families{Family::standard(), Family::finite_monoids()};
    for (std::size_t len = 1; len <= budgets.max_image_len; ++len) {
      families.push_back(
          Family::random(budgets.seed, budgets.random_count, len));
    }
    return families;
  }

  Verdict theorem_check(WordFunctionPtr const& f, CheckBudgets const& budgets) {
    if (f->alphabet().size() < 3) {
      throw HypothesisError("theorem hypothesis |Σ| ≥ 3 not met");
    }
    std::optional<Diagnosis> diagnosis;
    std::optional<Extracted> extracted;

    auto outcome = extract(f, budgets.extraction);
    if (auto const* e = std::get_if<Extracted>(&outcome)) {
      extracted = *e;
    } else {
      diagnosis = std::get<NotRCP>(outcome).diagnosis;
    }
    if (f->supports_extension()) {
      auto fresh = extract_fresh(f, budgets.extraction);
      if (auto const* n = std::get_if<NotRCP>(&fresh); n && !diagnosis) {
        diagnosis = n->diagnosis;
      }
    }
    if (!diagnosis) {
      return CertifiedCP{extracted->result, extracted->queries};
    }

    bool exhausted = false;
    for (auto const& family : escalation(budgets)) {
      auto r = audit(*f, family, budgets.length_bound, budgets.audit_budget);
      if (r.witness) {
        return RefutedCP{std::move(*r.witness), family, diagnosis};
      }
      exhausted = exhausted || r.budget_exhausted;
    }
    return Indeterminate{exhausted ? "audit budget exhausted without a witness"
                                   : "no witness in any audited family",
                         diagnosis};
  }

}  // namespace cpmonoid
