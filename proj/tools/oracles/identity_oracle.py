#!/usr/bin/env python3
"""External oracle for the identity function x -> x (arity 1).

With --log FILE, every line received and sent is appended to FILE,
prefixed by "> " (received) or "< " (sent).
"""
import argparse
import sys


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--log")
    opts = parser.parse_args()
    log = open(opts.log, "a") if opts.log else None

    def recv(line):
        if log:
            log.write("> " + line + "\n")
            log.flush()

    def send(line):
        if log:
            log.write("< " + line + "\n")
            log.flush()
        print(line, flush=True)

    hello = sys.stdin.readline().rstrip("\n")
    recv(hello)
    parts = hello.split(" ")
    if len(parts) != 3 or parts[0] != "HELLO":
        return 1
    if parts[1] != "1":
        send("ERR arity")
        return 1
    send("OK EXT")
    for line in sys.stdin:
        line = line.rstrip("\n")
        recv(line)
        if line == "BYE":
            break
        send(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
