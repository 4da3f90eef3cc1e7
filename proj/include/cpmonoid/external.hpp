#pragma once

// Word functions answered by an external process over a line protocol:
//
//   -> HELLO <k> <alphabet>
//   <- OK | OK EXT
//   -> <k TAB-separated fields>     (one line per query, empty field = ε)
//   <- <result word>                (empty line = ε)
//   -> BYE

#include <sys/types.h>

#include <cstdio>
#include <mutex>
#include <string>

#include "cpmonoid/oracle.hpp"

namespace cpmonoid {

  class ExternalFunction final : public WordFunction {
   public:
    //! Starts `/bin/sh -c command` and performs the handshake; throws
    //! ProtocolError if the process cannot be started or replies with
    //! anything but `OK` or `OK EXT`.
    ExternalFunction(std::string command, std::size_t arity, Alphabet alphabet);
    ~ExternalFunction() override;

    [[nodiscard]] std::string describe() const override;
    [[nodiscard]] std::string const& command() const noexcept {
      return command_;
    }

   protected:
    //! Throws ProtocolError on a missing reply, a reply with TAB characters
    //! or letters outside the negotiated alphabet.
    [[nodiscard]] Word compute(WordTuple const& args) const override;

   private:
    struct Process {
      pid_t pid     = -1;
      FILE* to      = nullptr;
      FILE* from    = nullptr;
      bool  ext     = false;
    };
    static Process start(std::string const& command,
                         std::size_t        arity,
                         Alphabet const&    alphabet);

    ExternalFunction(std::string command,
                     std::size_t arity,
                     Alphabet    alphabet,
                     Process     process);

    std::string        command_;
    mutable Process    process_;
    mutable std::mutex pipe_;
  };

  [[nodiscard]] std::shared_ptr<ExternalFunction const>
  external(std::string command, std::size_t arity, Alphabet alphabet);

}  // namespace cpmonoid
