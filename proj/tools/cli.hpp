#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpmonoid::cli {

  // Exit statuses.
  inline constexpr int ok        = 0;
  inline constexpr int found     = 1;  // witness, NotRCP or candidates
  inline constexpr int usage     = 2;  // usage or format error
  inline constexpr int protocol  = 3;  // oracle failure
  inline constexpr int exhausted = 4;  // budget exhausted

  //! Runs one command; \p args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace cpmonoid::cli
