#pragma once

#include <stdexcept>
#include <string>

namespace cpmonoid {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A letter or word outside the alphabet it was used with.
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed text input (morphism, monoid, template or table files).
  class FormatError : public Error {
   public:
    using Error::Error;
  };

  //! Wrong number of arguments for a function of fixed arity.
  class ArityError : public Error {
   public:
    using Error::Error;
  };

  //! A query an oracle cannot answer, e.g. a missing table entry.
  class OracleError : public Error {
   public:
    using Error::Error;
  };

  //! Handshake or reply failure of an external oracle process.
  class ProtocolError : public OracleError {
   public:
    using OracleError::OracleError;
  };

  //! Extraction requested on an alphabet with fewer than three letters.
  class HypothesisError : public Error {
   public:
    using Error::Error;
  };

  //! Fresh-letter extraction requested on an oracle that cannot accept
  //! letters outside its base alphabet.
  class ExtensionUnsupported : public Error {
   public:
    using Error::Error;
  };

}  // namespace cpmonoid
