#include "cpmonoid/external.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <csignal>
#include <cstdlib>

#include "cpmonoid/error.hpp"

namespace cpmonoid {

  namespace {
    // One line without its terminator; nullopt at end of stream.
    std::optional<std::string> read_line(FILE* in) {
      std::string line;
      int         c;
      while ((c = std::fgetc(in)) != EOF) {
        if (c == '\n') {
          if (!line.empty() && line.back() == '\r') {
            line.pop_back();
          }
          return line;
        }
        line += static_cast<char>(c);
      }
      if (line.empty()) {
        return std::nullopt;
      }
      return line;
    }

    void write_line(FILE* out, std::string const& line) {
      if (std::fputs(line.c_str(), out) < 0 || std::fputc('\n', out) == EOF
          || std::fflush(out) != 0) {
        throw ProtocolError("external oracle: write failed (process exited?)");
      }
    }
  }  // namespace

  ExternalFunction::Process
  ExternalFunction::start(std::string const& command,
                          std::size_t        arity,
                          Alphabet const&    alphabet) {
    // A dead oracle must surface as a write error, not kill the tool.
    std::signal(SIGPIPE, SIG_IGN);
    int to_child[2];
    int from_child[2];
    if (pipe2(to_child, O_CLOEXEC) != 0) {
      throw ProtocolError("external oracle: pipe() failed");
    }
    if (pipe2(from_child, O_CLOEXEC) != 0) {
      close(to_child[0]);
      close(to_child[1]);
      throw ProtocolError("external oracle: pipe() failed");
    }
    pid_t pid = fork();
    if (pid < 0) {
      throw ProtocolError("external oracle: fork() failed");
    }
    if (pid == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    Process p;
    p.pid  = pid;
    p.to   = fdopen(to_child[1], "w");
    p.from = fdopen(from_child[0], "r");

    auto fail = [&](std::string const& why) {
      std::fclose(p.to);
      std::fclose(p.from);
      int status = 0;
      waitpid(p.pid, &status, 0);
      throw ProtocolError("external oracle '" + command + "': " + why);
    };
    try {
      write_line(p.to, "HELLO " + std::to_string(arity) + " "
                           + alphabet.letters());
    } catch (ProtocolError const&) {
      fail("handshake write failed");
    }
    auto reply = read_line(p.from);
    if (!reply) {
      fail("no handshake reply");
    } else if (*reply == "OK") {
      p.ext = false;
    } else if (*reply == "OK EXT") {
      p.ext = true;
    } else {
      fail("bad handshake reply '" + *reply + "'");
    }
    return p;
  }

  ExternalFunction::ExternalFunction(std::string command,
                                     std::size_t arity,
                                     Alphabet    alphabet)
      : ExternalFunction(command, arity, alphabet,
                         start(command, arity, alphabet)) {}

  ExternalFunction::ExternalFunction(std::string command,
                                     std::size_t arity,
                                     Alphabet    alphabet,
                                     Process     process)
      : WordFunction(arity, std::move(alphabet), process.ext),
        command_(std::move(command)),
        process_(process) {}

  ExternalFunction::~ExternalFunction() {
    if (process_.to != nullptr) {
      std::fputs("BYE\n", process_.to);
      std::fflush(process_.to);
      std::fclose(process_.to);
    }
    if (process_.from != nullptr) {
      std::fclose(process_.from);
    }
    if (process_.pid > 0) {
      int status = 0;
      waitpid(process_.pid, &status, 0);
    }
  }

  std::string ExternalFunction::describe() const {
    return "exec " + command_;
  }

  Word ExternalFunction::compute(WordTuple const& args) const {
    std::string line;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) {
        line += '\t';
      }
      line += args[i].str();
    }
    std::lock_guard lock(pipe_);
    write_line(process_.to, line);
    auto reply = read_line(process_.from);
    if (!reply) {
      throw ProtocolError("external oracle: no reply to query "
                          + quoted(args));
    }
    for (char c : *reply) {
      if (c == '\t') {
        throw ProtocolError("external oracle: reply to " + quoted(args)
                            + " has more than one field");
      }
      bool ok = process_.ext ? is_valid_letter(c) : alphabet().contains(c);
      if (!ok) {
        throw ProtocolError("external oracle: reply '" + *reply + "' to "
                            + quoted(args)
                            + " has a letter outside the negotiated alphabet");
      }
    }
    return Word(std::move(*reply));
  }

  std::shared_ptr<ExternalFunction const>
  external(std::string command, std::size_t arity, Alphabet alphabet) {
    return std::make_shared<ExternalFunction>(std::move(command), arity,
                                              std::move(alphabet));
  }

}  // namespace cpmonoid
