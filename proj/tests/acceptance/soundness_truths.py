#!/usr/bin/env python3
"""Brute-force truth values for soundness_sentences.txt.

Quantifiers range over 0..RANGE-1. The corpus is chosen so that this range
settles every quantifier, which makes the result the true value in N.

  soundness_truths.py            write soundness_truths.txt
  soundness_truths.py --check    fail if the committed file differs
"""

import pathlib
import re
import sys

RANGE = 24
HERE = pathlib.Path(__file__).resolve().parent
SENTENCES = HERE / "soundness_sentences.txt"
TRUTHS = HERE / "soundness_truths.txt"

TOKEN = re.compile(r"\s*(<->|->|x\d*|[0SAE~&|()=+*])")


def tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad input at {pos}: {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class Parser:
    def __init__(self, tokens):
        self.t, self.i = tokens, 0

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else None

    def take(self, tok=None):
        cur = self.peek()
        if tok is not None and cur != tok:
            raise ValueError(f"expected {tok}, got {cur}")
        self.i += 1
        return cur

    def formula(self):
        f = self.imp()
        while self.peek() == "<->":
            self.take()
            f = ("iff", f, self.imp())
        return f

    def imp(self):
        f = self.disj()
        if self.peek() == "->":
            self.take()
            return ("imp", f, self.imp())
        return f

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = ("or", f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = ("and", f, self.unary())
        return f

    def unary(self):
        tok = self.peek()
        if tok == "~":
            self.take()
            return ("not", self.unary())
        if tok in ("A", "E"):
            self.take()
            var = self.take()
            return ("forall" if tok == "A" else "exists", var, self.unary())
        if tok == "(":
            save = self.i
            try:
                self.take("(")
                f = self.formula()
                self.take(")")
                return f
            except ValueError:
                self.i = save
        lhs = self.term()
        self.take("=")
        return ("eq", lhs, self.term())

    def term(self):
        t = self.product()
        while self.peek() == "+":
            self.take()
            t = ("add", t, self.product())
        return t

    def product(self):
        t = self.atom()
        while self.peek() == "*":
            self.take()
            t = ("mul", t, self.atom())
        return t

    def atom(self):
        tok = self.take()
        if tok == "0":
            return ("zero",)
        if tok == "S":
            self.take("(")
            t = self.term()
            self.take(")")
            return ("succ", t)
        if tok is not None and tok.startswith("x"):
            return ("var", tok)
        if tok == "(":
            t = self.term()
            self.take(")")
            return t
        raise ValueError(f"expected a term, got {tok}")


def value(t, env):
    kind = t[0]
    if kind == "zero":
        return 0
    if kind == "var":
        return env[t[1]]
    if kind == "succ":
        return value(t[1], env) + 1
    a, b = value(t[1], env), value(t[2], env)
    return a + b if kind == "add" else a * b


def holds(f, env):
    kind = f[0]
    if kind == "eq":
        return value(f[1], env) == value(f[2], env)
    if kind == "not":
        return not holds(f[1], env)
    if kind in ("forall", "exists"):
        results = (holds(f[2], {**env, f[1]: n}) for n in range(RANGE))
        return all(results) if kind == "forall" else any(results)
    a = holds(f[1], env)
    b = holds(f[2], env)
    return {"and": a and b, "or": a or b, "imp": (not a) or b, "iff": a == b}[kind]


def render():
    lines = []
    for line in SENTENCES.read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        p = Parser(tokenize(line))
        f = p.formula()
        if p.peek() is not None:
            raise ValueError(f"trailing input in {line!r}")
        lines.append(f"{'TRUE' if holds(f, {}) else 'FALSE'}\t{line}")
    return "\n".join(lines) + "\n"


def main():
    text = render()
    if "--check" in sys.argv[1:]:
        if TRUTHS.read_text() != text:
            print("soundness_truths.txt is stale; rerun soundness_truths.py")
            return 1
        print(f"{text.count(chr(10))} truths match")
        return 0
    TRUTHS.write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
