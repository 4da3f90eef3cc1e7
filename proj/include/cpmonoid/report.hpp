#pragma once

// Plain-text reports. Every block ends with a newline; words are printed
// double-quoted, tuples as ("u", "v").

#include <string>

#include "cpmonoid/audit.hpp"
#include "cpmonoid/extraction.hpp"
#include "cpmonoid/template.hpp"

namespace cpmonoid {

  //!   p 1 2
  //!   e 3
  //!   offset a 1
  [[nodiscard]] std::string to_string(LengthCoefficients const& lc,
                                      Alphabet const&           alphabet);

  //!   not-rcp
  //!   kind peel-prefix-violation
  //!   detail ...
  //!   query ("ab") => "ba"
  [[nodiscard]] std::string to_string(Diagnosis const& d);

  //! The template text, or the diagnosis.
  [[nodiscard]] std::string to_string(ExtractionOutcome const& outcome);

  //!   witness
  //!   congruence restricted project(a)
  //!   inputs ("") ~ ("b")
  //!   outputs "" vs "a"
  //!   images "" vs "a"
  [[nodiscard]] std::string to_string(Witness const& w);

  [[nodiscard]] std::string to_string(AuditResult const& r,
                                      Family const&      family,
                                      std::size_t        length_bound);

  [[nodiscard]] std::string to_string(Verdict const& v);

}  // namespace cpmonoid
