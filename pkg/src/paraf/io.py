"""Text formats: TGF and APX frameworks, and the rule language for programs."""

from __future__ import annotations

import re
from enum import Enum
from pathlib import Path

from .af import NAME_RE, Framework
from .errors import InputError, ParseError
from .lp import Program, Rule, decode_atom


class InputFormat(Enum):
    TGF = "tgf"
    APX = "apx"
    LP = "lp"

    @classmethod
    def detect(cls, path: str | Path, explicit: str | None = None) -> InputFormat:
        if explicit:
            try:
                return cls(explicit.lower())
            except ValueError:
                raise InputError(f"unknown format {explicit!r}") from None
        suffix = Path(path).suffix.lower().lstrip(".")
        try:
            return cls(suffix)
        except ValueError:
            raise InputError(f"cannot infer format of {str(path)!r}; pass --format") from None


def _lineno(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


# -- TGF ---------------------------------------------------------------------


def parse_tgf(text: str) -> Framework:
    """Argument names (one per line), a ``#`` line, then ``src tgt`` lines."""
    args: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    in_attacks = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if in_attacks:
                raise ParseError("second '#' separator", lineno)
            in_attacks = True
            continue
        parts = line.split()
        if not in_attacks:
            name = parts[0]
            if not NAME_RE.match(name):
                raise ParseError(f"invalid argument name {name!r}", lineno)
            if name in declared:
                raise ParseError(f"duplicate argument {name!r}", lineno)
            declared.add(name)
            args.append(name)
        else:
            if len(parts) < 2:
                raise ParseError(f"attack line needs two arguments, got {line!r}", lineno)
            src, tgt = parts[0], parts[1]
            for end in (src, tgt):
                if end not in declared:
                    raise ParseError(f"unknown argument {end!r}", lineno)
            attacks.append((src, tgt))
    if not in_attacks:
        raise ParseError("missing '#' separator between arguments and attacks")
    return Framework.from_edges(args, attacks)


def render_tgf(framework: Framework) -> str:
    lines = list(framework.args) + ["#"]
    lines += [f"{framework.args[a]} {framework.args[b]}" for a, b in sorted(framework.attacks)]
    return "\n".join(lines) + "\n"


# -- APX ---------------------------------------------------------------------

_APX_STMT = re.compile(r"\s*(arg|att)\s*\(([^()]*)\)\s*\.")


def parse_apx(text: str) -> Framework:
    """``arg(x).`` and ``att(x,y).`` facts in any order; ``%`` comments.

    Every attack endpoint must be declared by some ``arg`` fact.
    """
    stripped = re.sub(r"%[^\n]*", "", text)
    args: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, tuple[str, str]]] = []
    pos = 0
    while True:
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
        if pos >= len(stripped):
            break
        m = _APX_STMT.match(stripped, pos)
        if not m:
            snippet = stripped[pos:pos + 20].split("\n")[0]
            raise ParseError(f"malformed statement near {snippet!r}", _lineno(stripped, pos))
        kind, inner = m.group(1), [t.strip() for t in m.group(2).split(",")]
        line = _lineno(stripped, m.start(1))
        if any(not NAME_RE.match(t) for t in inner):
            raise ParseError(f"malformed term in {m.group(0).strip()!r}", line)
        if kind == "arg":
            if len(inner) != 1:
                raise ParseError("arg/1 takes one term", line)
            if inner[0] in declared:
                raise ParseError(f"duplicate argument {inner[0]!r}", line)
            declared.add(inner[0])
            args.append(inner[0])
        else:
            if len(inner) != 2:
                raise ParseError("att/2 takes two terms", line)
            attacks.append((line, (inner[0], inner[1])))
        pos = m.end()
    for line, (src, tgt) in attacks:
        for end in (src, tgt):
            if end not in declared:
                raise ParseError(f"attack mentions undeclared argument {end!r}", line)
    return Framework.from_edges(args, [a for _, a in attacks])


def render_apx(framework: Framework) -> str:
    lines = [f"arg({a})." for a in framework.args]
    lines += [f"att({framework.args[a]},{framework.args[b]})." for a, b in sorted(framework.attacks)]
    return "\n".join(lines) + "\n"


# -- programs ----------------------------------------------------------------


def _split_terms(text: str) -> list[str]:
    return [t.strip() for t in text.split(",")] if text.strip() else []


def parse_program(text: str) -> Program:
    """Rules ``h1 | h2 :- b, not c.``; facts ``a.``; constraints ``:- a, b.``"""
    rules: list[Rule] = []
    stripped = re.sub(r"%[^\n]*", "", text)
    pos = 0
    for m in re.finditer(r"[^.]*\.", stripped):
        chunk = m.group(0)
        line = _lineno(stripped, m.start() + len(chunk) - len(chunk.lstrip()))
        pos = m.end()
        body_text = chunk[:-1].strip()
        if not body_text:
            raise ParseError("empty rule", line)
        if ":-" in body_text:
            head_text, body = body_text.split(":-", 1)
            if not body.strip():
                raise ParseError("':-' with an empty body", line)
        else:
            head_text, body = body_text, ""
        head = [decode_atom(t.strip(), line) for t in head_text.split("|")] if head_text.strip() else []
        pos_atoms, neg_atoms = [], []
        for term in _split_terms(body):
            if term.startswith("not "):
                neg_atoms.append(decode_atom(term[4:].strip(), line))
            else:
                pos_atoms.append(decode_atom(term, line))
        rules.append(Rule(frozenset(head), frozenset(pos_atoms), frozenset(neg_atoms)))
    if stripped[pos:].strip():
        raise ParseError("trailing text without a terminating '.'", _lineno(stripped, pos))
    return Program(tuple(rules))


def render_program(program: Program) -> str:
    return "".join(f"{r}\n" for r in program)


def read_framework(path: str | Path, fmt: str | None = None) -> Framework:
    kind = InputFormat.detect(path, fmt)
    text = Path(path).read_text()
    if kind is InputFormat.TGF:
        return parse_tgf(text)
    if kind is InputFormat.APX:
        return parse_apx(text)
    raise InputError(f"{path}: expected a framework (.tgf or .apx), got a program")


def render_framework(framework: Framework, fmt: str = "apx") -> str:
    if fmt == "tgf":
        return render_tgf(framework)
    if fmt == "apx":
        return render_apx(framework)
    raise InputError(f"cannot render a framework as {fmt!r}")
