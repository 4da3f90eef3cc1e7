#include "cpmonoid/extraction.hpp"

#include <memory>
#include <set>

namespace cpmonoid {

  std::string to_string(HeadCase const& head) {
    switch (head.kind) {
      case HeadCase::Kind::const_letter:
        return std::string("const-letter ") + head.letter;
      case HeadCase::Kind::variable:
        return "variable x" + std::to_string(head.index + 1);
      case HeadCase::Kind::const_empty:
        break;
    }
    return "const-empty";
  }

  std::string kind_name(Diagnosis::Kind kind) {
    switch (kind) {
      case Diagnosis::Kind::ambiguous_head:
        return "ambiguous-head";
      case Diagnosis::Kind::peel_prefix_violation:
        return "peel-prefix-violation";
      case Diagnosis::Kind::step_budget_exceeded:
        return "step-budget-exceeded";
      case Diagnosis::Kind::validation_mismatch:
        return "validation-mismatch";
      case Diagnosis::Kind::length_law_violation:
        return "length-law-violation";
      case Diagnosis::Kind::split_mismatch:
        break;
    }
    return "split-mismatch";
  }

  namespace {

    using Kind = Diagnosis::Kind;

    Probe probe(WordFunction const& f, WordTuple args) {
      Word out = f.evaluate(args);
      return {std::move(args), std::move(out)};
    }

    WordTuple constant_tuple(std::size_t k, Word const& w) {
      return WordTuple(k, w);
    }

    WordTuple with_at(WordTuple t, std::size_t i, Word const& w) {
      t[i] = w;
      return t;
    }

    Diagnosis diagnosis(Kind kind, std::string detail, std::vector<Probe> probes) {
      return {kind, std::move(detail), std::move(probes)};
    }

    ////////////////////////////////////////////////////////////////////////
    // Peeling
    ////////////////////////////////////////////////////////////////////////

    class PeeledFunction final : public WordFunction {
     public:
      PeeledFunction(WordFunctionPtr base, HeadCase head)
          : WordFunction(base->arity(), base->alphabet(),
                         base->supports_extension()),
            base_(std::move(base)),
            head_(head) {}

      [[nodiscard]] std::string describe() const override {
        return base_->describe() + " peeled " + to_string(head_);
      }

     protected:
      [[nodiscard]] Word compute(WordTuple const& args) const override {
        Word out = base_->evaluate(args);
        Word prefix = head_.kind == HeadCase::Kind::const_letter
                          ? Word(head_.letter)
                          : args[head_.index];
        if (!has_prefix(out, prefix)) {
          throw PeelViolation("output " + quoted(out) + " on " + quoted(args)
                                  + " does not start with " + quoted(prefix),
                              head_, Probe{args, out});
        }
        return Word(out.str().substr(prefix.size()));
      }

     private:
      WordFunctionPtr base_;
      HeadCase        head_;
    };

    ////////////////////////////////////////////////////////////////////////
    // Head classification
    ////////////////////////////////////////////////////////////////////////

    OrDiagnosis<HeadCase> ambiguous(std::string detail, std::vector<Probe> probes) {
      return diagnosis(Kind::ambiguous_head, std::move(detail), std::move(probes));
    }

    OrDiagnosis<HeadCase> classify_nullary(WordFunction const& f) {
      Probe p = probe(f, {});
      if (p.output.empty()) {
        return HeadCase::const_empty();
      }
      return HeadCase::const_letter(p.output.front());
    }

    OrDiagnosis<HeadCase> classify_unary(WordFunction const& f) {
      auto const&        sigma = f.alphabet();
      std::vector<Probe> probes{probe(f, {Word()})};
      for (std::size_t i = 0; i < std::min<std::size_t>(sigma.size(), 4); ++i) {
        probes.push_back(probe(f, {Word(sigma[i])}));
      }

      bool some_empty = false;
      for (std::size_t i = 1; i < probes.size(); ++i) {
        some_empty = some_empty || probes[i].output.empty();
      }
      if (some_empty) {
        for (auto const& p : probes) {
          if (!p.output.empty()) {
            return ambiguous("a letter maps to ε but " + quoted(p.args)
                                 + " does not",
                             probes);
          }
        }
        return HeadCase::const_empty();
      }

      for (std::size_t i = 1; i < probes.size(); ++i) {
        char alpha = probes[i].args[0].front();
        char beta  = probes[i].output.front();
        if (beta == alpha) {
          continue;
        }
        for (auto const& p : probes) {
          if (p.output.empty() || p.output.front() != beta) {
            return ambiguous(std::string("the image of ") + alpha
                                 + " starts with " + beta + " but the image of "
                                 + quoted(p.args) + " does not",
                             probes);
          }
        }
        return HeadCase::const_letter(beta);
      }
      return HeadCase::variable(0);
    }

    OrDiagnosis<HeadCase> classify_kary(WordFunction const& f) {
      auto const& sigma = f.alphabet();
      std::size_t k     = f.arity();
      Word        a(sigma[0]);
      Word        b(sigma[1]);
      Word        c(sigma[2]);

      WordTuple          t0 = constant_tuple(k, c);
      std::vector<Probe> probes{probe(f, t0)};
      std::vector<Probe> with_a;
      std::vector<Probe> with_b;
      for (std::size_t i = 0; i < k; ++i) {
        with_a.push_back(probe(f, with_at(t0, i, a)));
      }
      for (std::size_t i = 0; i < k; ++i) {
        with_b.push_back(probe(f, with_at(t0, i, b)));
      }
      probes.insert(probes.end(), with_a.begin(), with_a.end());
      probes.insert(probes.end(), with_b.begin(), with_b.end());

      auto starts = [](Probe const& p, Word const& w) {
        return !p.output.empty() && p.output.front() == w.front();
      };

      Word const& out0 = probes[0].output;
      if (out0.empty()) {
        for (auto const& p : probes) {
          if (!p.output.empty()) {
            return ambiguous("image of " + quoted(t0) + " is ε but image of "
                                 + quoted(p.args) + " is not",
                             probes);
          }
        }
        return HeadCase::const_empty();
      }

      char beta = out0.front();
      auto confirm_letter = [&]() -> OrDiagnosis<HeadCase> {
        for (auto const& p : probes) {
          if (!starts(p, Word(beta))) {
            return ambiguous(std::string("image of ") + quoted(t0)
                                 + " starts with " + beta
                                 + " but image of " + quoted(p.args)
                                 + " does not",
                             probes);
          }
        }
        return HeadCase::const_letter(beta);
      };
      if (beta != c.front()) {
        return confirm_letter();
      }

      std::vector<std::size_t> hits;
      for (std::size_t i = 0; i < k; ++i) {
        if (starts(with_a[i], a)) {
          hits.push_back(i);
        } else if (!starts(with_a[i], c)) {
          return ambiguous("image of " + quoted(with_a[i].args)
                               + " starts with neither " + quoted(a)
                               + " nor " + quoted(c),
                           probes);
        }
      }
      if (hits.empty()) {
        return confirm_letter();
      }
      if (hits.size() > 1) {
        return ambiguous("more than one argument position leads the output",
                         probes);
      }
      std::size_t i = hits.front();
      for (std::size_t j = 0; j < k; ++j) {
        Word const& expect = j == i ? b : c;
        if (!starts(with_b[j], expect)) {
          return ambiguous("confirmation with " + quoted(b) + " at x"
                               + std::to_string(j + 1) + " disagrees",
                           probes);
        }
      }
      return HeadCase::variable(i);
    }

    ////////////////////////////////////////////////////////////////////////
    // Fresh letters
    ////////////////////////////////////////////////////////////////////////

    // Γ: letters that may occur in constants of the oracle.
    class FreshContext {
     public:
      explicit FreshContext(Alphabet const& base)
          : gamma_(base.letters().begin(), base.letters().end()) {}

      char draw() {
        for (char c : pool()) {
          if (gamma_.insert(c).second) {
            return c;
          }
        }
        throw ExtensionUnsupported("no fresh letter left");
      }

      void observe(Word const& w) {
        gamma_.insert(w.begin(), w.end());
      }

     private:
      static std::string const& pool() {
        static std::string const letters = [] {
          std::string s = "0123456789";
          for (int c = 0x21; c <= 0x7e; ++c) {
            if (is_valid_letter(static_cast<char>(c))
                && s.find(static_cast<char>(c)) == std::string::npos) {
              s += static_cast<char>(c);
            }
          }
          return s;
        }();
        return letters;
      }

      std::set<char> gamma_;
    };

    // x⃗ ↦ j-th factor of split_on_letter(f(z, x⃗), z).
    class SplitFactor final : public WordFunction {
     public:
      SplitFactor(WordFunctionPtr               base,
                  char                          z,
                  std::size_t                   j,
                  std::size_t                   m,
                  std::shared_ptr<FreshContext> ctx)
          : WordFunction(base->arity() - 1, base->alphabet(), true),
            base_(std::move(base)),
            z_(z),
            j_(j),
            m_(m),
            ctx_(std::move(ctx)) {}

      [[nodiscard]] std::string describe() const override {
        return "factor " + std::to_string(j_) + " of " + base_->describe()
               + " split at " + z_;
      }

     protected:
      [[nodiscard]] Word compute(WordTuple const& args) const override {
        WordTuple full{Word(z_)};
        full.insert(full.end(), args.begin(), args.end());
        Word out = base_->evaluate(full);
        ctx_->observe(out);
        auto factors = split_on_letter(out, z_);
        if (factors.size() != m_ + 1) {
          throw SplitMismatch("splitting " + quoted(out) + " at " + z_
                                  + " gives " + std::to_string(factors.size())
                                  + " factors, expected "
                                  + std::to_string(m_ + 1),
                              Probe{full, out});
        }
        return factors[j_];
      }

     private:
      WordFunctionPtr               base_;
      char                          z_;
      std::size_t                   j_;
      std::size_t                   m_;
      std::shared_ptr<FreshContext> ctx_;
    };

    OrDiagnosis<Template> fresh_template(WordFunctionPtr const&               f,
                                         std::shared_ptr<FreshContext> const& ctx) {
      auto const& sigma = f->alphabet();
      std::size_t k     = f->arity();
      if (k == 0) {
        Probe p = probe(*f, {});
        ctx->observe(p.output);
        if (!sigma.contains(p.output)) {
          return diagnosis(Kind::split_mismatch,
                           "constant " + quoted(p.output)
                               + " leaves the base alphabet",
                           {p});
        }
        return Template::constant(sigma, 0, p.output);
      }

      if (k == 1) {
        char  z = ctx->draw();
        Probe p = probe(*f, {Word(z)});
        ctx->observe(p.output);
        auto factors = split_on_letter(p.output, z);
        for (auto const& w : factors) {
          if (!sigma.contains(w)) {
            return diagnosis(Kind::split_mismatch,
                             "factor " + quoted(w) + " of " + quoted(p.output)
                                 + " leaves the base alphabet",
                             {p});
          }
        }
        std::vector<std::size_t> vars(factors.size() - 1, 0);
        return Template(1, sigma, std::move(factors), std::move(vars));
      }

      auto profile = length_profile(*f);
      if (auto const* d = std::get_if<Diagnosis>(&profile)) {
        return *d;
      }
      std::size_t m = std::get<LengthCoefficients>(profile).p[0];
      char        z = ctx->draw();

      std::vector<std::size_t> shift(k - 1);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        shift[i] = i + 1;
      }
      TemplateBuilder builder(sigma, k);
      for (std::size_t j = 0; j <= m; ++j) {
        auto u     = std::make_shared<SplitFactor>(f, z, j, m, ctx);
        auto inner = fresh_template(u, ctx);
        if (auto const* d = std::get_if<Diagnosis>(&inner)) {
          return *d;
        }
        if (j > 0) {
          builder.append_variable(0);
        }
        builder.append(std::get<Template>(inner), shift);
      }
      return builder.build();
    }

    // The residual must also vanish on two-letter arguments; a peeled
    // wrapper throws PeelViolation here if an earlier head was wrong.
    std::optional<Probe> residual_nonempty(WordFunction const& g) {
      auto const&            sigma = g.alphabet();
      Word                   ab(std::string{sigma[0], sigma[1]});
      WordTuple              base = constant_tuple(g.arity(), Word());
      std::vector<WordTuple> tuples;
      for (std::size_t i = 0; i < g.arity(); ++i) {
        tuples.push_back(with_at(base, i, ab));
      }
      tuples.push_back(constant_tuple(g.arity(), ab));
      for (auto& t : tuples) {
        Probe p = probe(g, std::move(t));
        if (!p.output.empty()) {
          return p;
        }
      }
      return std::nullopt;
    }

    ExtractionOutcome finish(WordFunction const&   f,
                             Template              t,
                             std::size_t           queries_before,
                             ExtractOptions const& options) {
      std::size_t requested
          = options.validation_len.value_or(f.arity() == 1 ? 3 : 2);
      std::size_t len = effective_validation_len(
          f.alphabet().size(), f.arity(), requested,
          options.max_validation_queries);
      std::size_t spent = f.stats().backend_queries - queries_before;
      if (auto d = validate(f, t, len)) {
        return NotRCP{*d};
      }
      std::size_t validation = f.stats().backend_queries - queries_before - spent;
      return Extracted{std::move(t), spent, validation, len};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Length profile
  ////////////////////////////////////////////////////////////////////////

  OrDiagnosis<LengthCoefficients> length_profile(WordFunction const& f) {
    auto const& sigma = f.alphabet();
    if (sigma.size() < 2) {
      throw HypothesisError("length profiling needs at least two letters");
    }
    std::size_t k = f.arity();
    Word        a(sigma[0]);
    Word        b(sigma[1]);

    LengthCoefficients lc;
    Probe              base = probe(f, constant_tuple(k, Word()));
    lc.e                    = base.output.size();
    for (char c : sigma.letters()) {
      lc.per_letter_offset[c] = count(base.output, c);
    }

    auto violation = [](std::string detail, Probe const& p, Probe const& q) {
      return diagnosis(Kind::length_law_violation, std::move(detail), {p, q});
    };

    for (std::size_t i = 0; i < k; ++i) {
      Probe pa = probe(f, with_at(base.args, i, a));
      if (pa.output.size() < lc.e) {
        return violation("negative length coefficient for x"
                             + std::to_string(i + 1),
                         base, pa);
      }
      std::size_t p_i = pa.output.size() - lc.e;
      lc.p.push_back(p_i);

      Probe pb = probe(f, with_at(base.args, i, b));
      if (pb.output.size() != pa.output.size()) {
        return violation("length of the image depends on the letter at x"
                             + std::to_string(i + 1),
                         pa, pb);
      }
      for (auto const* q : {&pa, &pb}) {
        char letter = q->args[i].front();
        for (char c : sigma.letters()) {
          std::size_t expect
              = lc.per_letter_offset[c] + (c == letter ? p_i : 0);
          if (count(q->output, c) != expect) {
            return violation(std::string("count of ") + c + " in the image of "
                                 + quoted(q->args) + " breaks the per-letter law",
                             base, *q);
          }
        }
      }
    }

    // x_i of length i + 2, letters cycling through the alphabet.
    WordTuple mixed;
    for (std::size_t i = 0; i < k; ++i) {
      std::string s;
      for (std::size_t j = 0; j < i + 2; ++j) {
        s += sigma[(i + j) % sigma.size()];
      }
      mixed.emplace_back(std::move(s));
    }
    if (k > 0) {
      Probe pm = probe(f, mixed);
      if (pm.output.size() != lc.length(mixed)) {
        return violation("length of the image of " + quoted(mixed)
                             + " is not affine in the argument lengths",
                         base, pm);
      }
      for (char c : sigma.letters()) {
        if (count(pm.output, c) != lc.length(mixed, c)) {
          return violation(std::string("count of ") + c + " in the image of "
                               + quoted(mixed) + " breaks the per-letter law",
                           base, pm);
        }
      }
    }
    return lc;
  }

  OrDiagnosis<HeadCase> classify_head(WordFunction const& f) {
    if (f.alphabet().size() < 3) {
      throw HypothesisError("theorem hypothesis |Σ| ≥ 3 not met");
    }
    switch (f.arity()) {
      case 0:
        return classify_nullary(f);
      case 1:
        return classify_unary(f);
      default:
        return classify_kary(f);
    }
  }

  WordFunctionPtr peel(WordFunctionPtr f, HeadCase head) {
    if (head.kind == HeadCase::Kind::const_empty) {
      throw Error("cannot peel a const-empty head");
    }
    if (head.kind == HeadCase::Kind::variable && head.index >= f->arity()) {
      throw ArityError("cannot peel x" + std::to_string(head.index + 1)
                       + " of a function of arity "
                       + std::to_string(f->arity()));
    }
    return std::make_shared<PeeledFunction>(std::move(f), head);
  }

  ////////////////////////////////////////////////////////////////////////
  // Extraction
  ////////////////////////////////////////////////////////////////////////

  ExtractionOutcome extract(WordFunctionPtr const& f,
                            ExtractOptions const&  options) {
    auto const& sigma = f->alphabet();
    if (sigma.size() < 3) {
      throw HypothesisError("theorem hypothesis |Σ| ≥ 3 not met");
    }
    std::size_t before = f->stats().backend_queries;

    auto profile = length_profile(*f);
    if (auto const* d = std::get_if<Diagnosis>(&profile)) {
      return NotRCP{*d};
    }
    std::size_t const budget = std::get<LengthCoefficients>(profile).total();
    std::size_t       measure = budget;

    TemplateBuilder builder(sigma, f->arity());
    WordFunctionPtr current = f;
    try {
      for (std::size_t step = 0;; ++step) {
        if (step == budget) {
          // The measure is spent: the residual must be constant ε.
          Probe empty = probe(*current, constant_tuple(f->arity(), Word()));
          std::optional<Probe> p
              = empty.output.empty() ? residual_nonempty(*current) : empty;
          if (p) {
            return NotRCP{diagnosis(
                Kind::step_budget_exceeded,
                "residual is not constant ε after " + std::to_string(budget)
                    + " peels",
                {*p})};
          }
          break;
        }
        auto head = classify_head(*current);
        if (auto const* d = std::get_if<Diagnosis>(&head)) {
          return NotRCP{*d};
        }
        auto const& h = std::get<HeadCase>(head);
        if (h.kind == HeadCase::Kind::const_empty) {
          if (auto p = residual_nonempty(*current)) {
            return NotRCP{diagnosis(Kind::ambiguous_head,
                                    "residual classified const-empty but not "
                                    "constant",
                                    {*p})};
          }
          break;
        }
        if (h.kind == HeadCase::Kind::const_letter) {
          builder.append(h.letter);
        } else {
          builder.append_variable(h.index);
        }
        current = peel(current, h);
        if (options.check_conservation) {
          auto next = length_profile(*current);
          if (auto const* d = std::get_if<Diagnosis>(&next)) {
            return NotRCP{*d};
          }
          std::size_t t = std::get<LengthCoefficients>(next).total();
          if (t + 1 != measure) {
            WordTuple args = constant_tuple(f->arity(), Word());
            return NotRCP{diagnosis(
                Kind::length_law_violation,
                "peeling " + to_string(h) + " changed the length measure from "
                    + std::to_string(measure) + " to " + std::to_string(t),
                {probe(*f, args), probe(*current, args)})};
          }
          measure = t;
        }
      }
    } catch (PeelViolation const& v) {
      return NotRCP{diagnosis(Kind::peel_prefix_violation,
                              std::string("head ") + to_string(v.head())
                                  + ": " + v.what(),
                              {v.probe()})};
    }
    return finish(*f, builder.build(), before, options);
  }

  ExtractionOutcome extract_fresh(WordFunctionPtr const& f,
                                  ExtractOptions const&  options) {
    if (!f->supports_extension()) {
      throw ExtensionUnsupported(f->describe()
                                 + " does not accept letters outside "
                                   "its alphabet");
    }
    std::size_t before = f->stats().backend_queries;
    auto        ctx    = std::make_shared<FreshContext>(f->alphabet());
    try {
      auto t = fresh_template(f, ctx);
      if (auto const* d = std::get_if<Diagnosis>(&t)) {
        return NotRCP{*d};
      }
      return finish(*f, std::get<Template>(std::move(t)), before, options);
    } catch (SplitMismatch const& s) {
      return NotRCP{diagnosis(Kind::split_mismatch, s.what(), {s.probe()})};
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  std::size_t effective_validation_len(std::size_t alphabet_size,
                                       std::size_t k,
                                       std::size_t requested,
                                       std::size_t max_queries) {
    auto tuples = [&](std::size_t len) {
      double words = 0;
      double power = 1;
      for (std::size_t l = 0; l <= len; ++l) {
        words += power;
        power *= static_cast<double>(alphabet_size);
      }
      double n = 1;
      for (std::size_t i = 0; i < k; ++i) {
        n *= words;
      }
      return n;
    };
    std::size_t len = requested;
    while (len > 0 && tuples(len) > static_cast<double>(max_queries)) {
      --len;
    }
    return len;
  }

  std::optional<Diagnosis> validate(WordFunction const& f,
                                    Template const&     t,
                                    std::size_t         length_bound) {
    auto const  words = f.alphabet().words_up_to(length_bound);
    std::size_t k     = f.arity();
    std::vector<std::size_t> idx(k, 0);
    WordTuple                args(k, words.front());
    while (true) {
      Word want = t.eval(args);
      Word got  = f.evaluate(args);
      if (want != got) {
        return diagnosis(Kind::validation_mismatch,
                         "template " + body_string(t) + " gives "
                             + quoted(want),
                         {Probe{args, got}});
      }
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++idx[i] < words.size()) {
          args[i] = words[idx[i]];
          break;
        }
        idx[i]  = 0;
        args[i] = words[0];
        if (i == 0) {
          return std::nullopt;
        }
      }
      if (k == 0) {
        return std::nullopt;
      }
    }
  }

}  // namespace cpmonoid
