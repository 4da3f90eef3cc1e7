#include "cpmonoid/report.hpp"

namespace cpmonoid {

  std::string to_string(LengthCoefficients const& lc, Alphabet const& alphabet) {
    std::string s = "p";
    for (auto p : lc.p) {
      s += " " + std::to_string(p);
    }
    s += "\ne " + std::to_string(lc.e) + "\n";
    for (char a : alphabet.letters()) {
      auto it = lc.per_letter_offset.find(a);
      s += std::string("offset ") + a + " "
           + std::to_string(it == lc.per_letter_offset.end() ? 0 : it->second)
           + "\n";
    }
    return s;
  }

  std::string to_string(Diagnosis const& d) {
    std::string s = "not-rcp\nkind " + kind_name(d.kind) + "\ndetail "
                    + d.detail + "\n";
    for (auto const& p : d.probes) {
      s += "query " + quoted(p.args) + " => " + quoted(p.output) + "\n";
    }
    return s;
  }

  std::string to_string(ExtractionOutcome const& outcome) {
    if (auto const* e = std::get_if<Extracted>(&outcome)) {
      return to_string(e->result);
    }
    return to_string(std::get<NotRCP>(outcome).diagnosis);
  }

  std::string to_string(Witness const& w) {
    return "witness\ncongruence " + w.spec.describe() + "\ninputs "
           + quoted(w.inputs.first) + " ~ " + quoted(w.inputs.second)
           + "\noutputs " + quoted(w.outputs.first) + " vs "
           + quoted(w.outputs.second) + "\nimages "
           + to_string(w.spec, w.images.first) + " vs "
           + to_string(w.spec, w.images.second) + "\n";
  }

  std::string to_string(AuditResult const& r,
                        Family const&      family,
                        std::size_t        length_bound) {
    std::string s = "audit family " + to_string(family) + " bound "
                    + std::to_string(length_bound) + "\ncongruences_checked "
                    + std::to_string(r.congruences_checked) + "\nchecks "
                    + std::to_string(r.checks) + "\nstatus ";
    if (r.witness) {
      return s + "witness\n" + to_string(*r.witness);
    }
    return s + (r.budget_exhausted ? "budget-exhausted\n" : "ok\n");
  }

  std::string to_string(Verdict const& v) {
    if (auto const* c = std::get_if<CertifiedCP>(&v)) {
      return "verdict certified-cp\nqueries " + std::to_string(c->queries)
             + "\n" + to_string(c->result);
    }
    if (auto const* r = std::get_if<RefutedCP>(&v)) {
      std::string s = "verdict refuted-cp\nfamily " + to_string(r->family) + "\n";
      if (r->diagnosis) {
        s += "extraction " + kind_name(r->diagnosis->kind) + "\n";
      }
      return s + to_string(r->witness);
    }
    auto const& i = std::get<Indeterminate>(v);
    std::string s = "verdict indeterminate\nreason " + i.reason + "\n";
    if (i.diagnosis) {
      s += to_string(*i.diagnosis);
    }
    return s;
  }

}  // namespace cpmonoid
