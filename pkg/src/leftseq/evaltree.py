"""Evaluation trees and the semantic maps from terms to trees.

An evaluation tree records a left-to-right evaluation: each internal node
carries the atom evaluated at that point, the left branch is taken when the
atom yields true, the right branch when it yields false, and the leaf gives
the yield of the whole term.  Two terms of the same language are considered
semantically equal exactly when their trees are structurally identical.

Trees may additionally carry hole leaves ``[]``, ``[1]``, ``[2]``; these act
as placeholders when composing or decomposing trees.  A proper evaluation
tree is a hole-free tree.

Subtrees are shared aggressively (the evaluators substitute the same
subtree object at many leaves), so traversals here memoize on object
identity and ``Node`` caches its hash at construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .terms import (Atom, AndFull, AndSC, Cond, FalseConst, Not, OrFull,
                    OrSC, ParseError, Term, TrueConst)

LEAF_LABELS = ("T", "F", "[]", "[1]", "[2]")


@dataclass(frozen=True)
class Leaf:
    label: str

    def __post_init__(self) -> None:
        if self.label not in LEAF_LABELS:
            raise ValueError(f"invalid leaf label: {self.label!r}")


@dataclass(frozen=True, eq=False, repr=False)
class Node:
    atom: str
    left: "Tree"
    right: "Tree"

    def __post_init__(self) -> None:
        object.__setattr__(self, "_h", hash((self.atom, self.left, self.right)))

    def __hash__(self) -> int:
        return self._h  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Node):
            return NotImplemented
        if self._h != other._h:  # type: ignore[attr-defined]
            return False
        return (self.atom == other.atom and self.left == other.left
                and self.right == other.right)

    def __repr__(self) -> str:
        return f"Node({self.atom!r}, {self.left!r}, {self.right!r})"


Tree = Union[Leaf, Node]

TRUE = Leaf("T")
FALSE = Leaf("F")
HOLE = Leaf("[]")
HOLE1 = Leaf("[1]")
HOLE2 = Leaf("[2]")


def replace(x: Tree, subst: Mapping[str, Tree]) -> Tree:
    """Simultaneous leaf replacement.

    ``subst`` maps leaf labels (``T``, ``F``, ``[]``, ``[1]``, ``[2]``) to
    trees; labels not listed are left in place.  All listed leaves are
    replaced in one pass, so the images are never rewritten again.
    """
    for label in subst:
        if label not in LEAF_LABELS:
            raise ValueError(f"invalid leaf label: {label!r}")
    if not subst:
        return x
    memo: dict[int, Tree] = {}

    def go(t: Tree) -> Tree:
        if isinstance(t, Leaf):
            return subst.get(t.label, t)
        cached = memo.get(id(t))
        if cached is None:
            left, right = go(t.left), go(t.right)
            cached = t if left is t.left and right is t.right else Node(t.atom, left, right)
            memo[id(t)] = cached
        return cached

    return go(x)


# ---------------------------------------------------------------------------
# Semantics


def fe(t: Term) -> Tree:
    """Full evaluation: every atom occurrence is evaluated.

    Only defined for FT-terms; the image is always a perfect tree whose
    depth equals the number of atom occurrences.
    """
    if isinstance(t, Atom):
        return Node(t.name, TRUE, FALSE)
    if isinstance(t, TrueConst):
        return TRUE
    if isinstance(t, FalseConst):
        return FALSE
    if isinstance(t, Not):
        return replace(fe(t.operand), {"T": FALSE, "F": TRUE})
    if isinstance(t, AndFull):
        q = fe(t.right)
        return replace(fe(t.left), {"T": q, "F": replace(q, {"T": FALSE})})
    if isinstance(t, OrFull):
        q = fe(t.right)
        return replace(fe(t.left), {"T": replace(q, {"F": TRUE}), "F": q})
    raise ValueError(f"full evaluation rejects {type(t).__name__}: not an FT-term")


def se(t: Term) -> Tree:
    """Short-circuit evaluation: evaluation stops once the yield is fixed.

    Only defined for ST-terms.
    """
    if isinstance(t, Atom):
        return Node(t.name, TRUE, FALSE)
    if isinstance(t, TrueConst):
        return TRUE
    if isinstance(t, FalseConst):
        return FALSE
    if isinstance(t, Not):
        return replace(se(t.operand), {"T": FALSE, "F": TRUE})
    if isinstance(t, AndSC):
        return replace(se(t.left), {"T": se(t.right)})
    if isinstance(t, OrSC):
        return replace(se(t.left), {"F": se(t.right)})
    raise ValueError(f"short-circuit evaluation rejects {type(t).__name__}: not an ST-term")


def ce(t: Term) -> Tree:
    """Unified evaluator for the mixed language.

    Conditionals branch on the test's tree; short-circuit connectives follow
    the ``se`` clauses and full connectives the ``fe`` clauses, so ``ce``
    agrees with ``se`` on ST-terms and with ``fe`` on FT-terms.
    """
    if isinstance(t, Atom):
        return Node(t.name, TRUE, FALSE)
    if isinstance(t, TrueConst):
        return TRUE
    if isinstance(t, FalseConst):
        return FALSE
    if isinstance(t, Not):
        return replace(ce(t.operand), {"T": FALSE, "F": TRUE})
    if isinstance(t, AndSC):
        return replace(ce(t.left), {"T": ce(t.right)})
    if isinstance(t, OrSC):
        return replace(ce(t.left), {"F": ce(t.right)})
    if isinstance(t, AndFull):
        q = ce(t.right)
        return replace(ce(t.left), {"T": q, "F": replace(q, {"T": FALSE})})
    if isinstance(t, OrFull):
        q = ce(t.right)
        return replace(ce(t.left), {"T": replace(q, {"F": TRUE}), "F": q})
    if isinstance(t, Cond):
        return replace(ce(t.test), {"T": ce(t.then), "F": ce(t.orelse)})
    raise ValueError(f"cannot evaluate {type(t).__name__}")


# ---------------------------------------------------------------------------
# Traces


@dataclass(frozen=True)
class Trace:
    """One root-to-leaf path: the atoms evaluated with their yields, and the
    overall outcome at the leaf."""

    steps: tuple[tuple[str, bool], ...]
    outcome: bool

    def __str__(self) -> str:
        path = " ".join(f"{a}{'T' if v else 'F'}" for a, v in self.steps)
        tail = "T" if self.outcome else "F"
        return f"{path} -> {tail}" if path else f"-> {tail}"


def traces(x: Tree) -> set[Trace]:
    """The annotated root-to-leaf paths of a hole-free tree, one per leaf."""
    out: set[Trace] = set()
    prefix: list[tuple[str, bool]] = []

    def go(t: Tree) -> None:
        if isinstance(t, Leaf):
            if t.label not in ("T", "F"):
                raise ValueError("traces are defined on hole-free trees only")
            out.add(Trace(tuple(prefix), t.label == "T"))
            return
        prefix.append((t.atom, True))
        go(t.left)
        prefix[-1] = (t.atom, False)
        go(t.right)
        prefix.pop()

    go(x)
    return out


def tree_from_traces(ts: set[Trace]) -> Tree:
    """Rebuild the tree from its trace set; inverse of ``traces``.

    Raises ``ValueError`` when the set is not the trace set of any tree.
    """
    items = list(ts)
    if not items:
        raise ValueError("empty trace set")
    if any(not t.steps for t in items):
        if len(items) != 1:
            raise ValueError("inconsistent trace set: leaf trace mixed with longer traces")
        return TRUE if items[0].outcome else FALSE
    atom = items[0].steps[0][0]
    if any(t.steps[0][0] != atom for t in items):
        raise ValueError("inconsistent trace set: diverging root atoms")
    lefts = {Trace(t.steps[1:], t.outcome) for t in items if t.steps[0][1]}
    rights = {Trace(t.steps[1:], t.outcome) for t in items if not t.steps[0][1]}
    if not lefts or not rights:
        raise ValueError("incomplete trace set: missing a branch")
    return Node(atom, tree_from_traces(lefts), tree_from_traces(rights))


def replay(trace: Trace, x: Tree) -> bool:
    """True iff ``trace`` is a trace of ``x`` (path consistent, outcome matching)."""
    t = x
    for atom, value in trace.steps:
        if not isinstance(t, Node) or t.atom != atom:
            return False
        t = t.left if value else t.right
    return isinstance(t, Leaf) and t.label in ("T", "F") and (t.label == "T") == trace.outcome


def sorted_traces(x: Tree) -> list[Trace]:
    """Traces in a stable order: leftmost (true-branch-first) paths first."""
    return sorted(traces(x), key=lambda t: tuple((a, not v) for a, v in t.steps))


# ---------------------------------------------------------------------------
# Tree transforms and measures


def memorize(x: Tree) -> Tree:
    """Rewrite the tree as if every atom remembers its first yield.

    Walking top-down, an atom below the left branch of an earlier occurrence
    of itself is pinned to true (its node gets the left subtree on both
    sides); below a right branch it is pinned to false.  Idempotent.
    """

    def go(t: Tree, held: dict[str, bool]) -> Tree:
        if isinstance(t, Leaf):
            return t
        pinned = held.get(t.atom)
        if pinned is not None:
            sub = go(t.left if pinned else t.right, held)
            return Node(t.atom, sub, sub)
        left = go(t.left, {**held, t.atom: True})
        right = go(t.right, {**held, t.atom: False})
        return Node(t.atom, left, right)

    return go(x, {})


def depth(x: Tree) -> int:
    """Longest root-to-leaf path length."""
    memo: dict[int, int] = {}

    def go(t: Tree) -> int:
        if isinstance(t, Leaf):
            return 0
        d = memo.get(id(t))
        if d is None:
            d = 1 + max(go(t.left), go(t.right))
            memo[id(t)] = d
        return d

    return go(x)


def is_perfect(x: Tree) -> bool:
    """True iff all root-to-leaf paths have equal length."""
    memo: dict[int, int | None] = {}

    def go(t: Tree) -> int | None:
        if isinstance(t, Leaf):
            return 0
        if id(t) in memo:
            return memo[id(t)]
        l, r = go(t.left), go(t.right)
        d = l + 1 if l is not None and l == r else None
        memo[id(t)] = d
        return d

    return go(x) is not None


def contains_leaf(x: Tree, label: str) -> bool:
    if label not in LEAF_LABELS:
        raise ValueError(f"invalid leaf label: {label!r}")
    memo: dict[int, bool] = {}

    def go(t: Tree) -> bool:
        if isinstance(t, Leaf):
            return t.label == label
        b = memo.get(id(t))
        if b is None:
            b = go(t.left) or go(t.right)
            memo[id(t)] = b
        return b

    return go(x)


def leaf_count(x: Tree) -> int:
    """Number of leaves, counting shared subtrees once per logical position."""
    memo: dict[int, int] = {}

    def go(t: Tree) -> int:
        if isinstance(t, Leaf):
            return 1
        n = memo.get(id(t))
        if n is None:
            n = go(t.left) + go(t.right)
            memo[id(t)] = n
        return n

    return go(x)


def is_hole_free(x: Tree) -> bool:
    return not any(contains_leaf(x, h) for h in ("[]", "[1]", "[2]"))


# ---------------------------------------------------------------------------
# Text format and DOT output


def format_tree(x: Tree) -> str:
    """Bit-exact text format: leaves are their labels, nodes ``(L <| a |> R)``."""
    if isinstance(x, Leaf):
        return x.label
    return f"({format_tree(x.left)} <| {x.atom} |> {format_tree(x.right)})"


_TREE_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<lnode><\|) | (?P<rnode>\|>)
      | (?P<lparen>\() | (?P<rparen>\))
      | (?P<hole1>\[1\]) | (?P<hole2>\[2\]) | (?P<hole>\[\])
      | (?P<name>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def _tree_tokens(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        m = _TREE_TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unknown character {text[i]!r}", len(text[:i].encode()))
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), len(text[:i].encode())))
        i = m.end()
    tokens.append(("eof", "", len(text.encode())))
    return tokens


def parse_tree(text: str) -> Tree:
    """Parse the text format produced by ``format_tree``."""
    if not text.strip():
        raise ParseError("empty input", 0, ("tree",))
    tokens = _tree_tokens(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expect(kind: str, what: str):
        tok = peek()
        if tok[0] != kind:
            raise ParseError(f"unexpected {tok[1]!r}" if tok[0] != "eof" else "unexpected end of input",
                             tok[2], (what,))
        return take()

    def tree() -> Tree:
        tok = peek()
        if tok[0] == "hole":
            take()
            return HOLE
        if tok[0] == "hole1":
            take()
            return HOLE1
        if tok[0] == "hole2":
            take()
            return HOLE2
        if tok[0] == "name":
            take()
            if tok[1] == "T":
                return TRUE
            if tok[1] == "F":
                return FALSE
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], ("'T'", "'F'", "'('"))
        if tok[0] == "lparen":
            take()
            left = tree()
            expect("lnode", "'<|'")
            atom = expect("name", "atom")[1]
            if not atom[0].islower():
                raise ParseError(f"invalid atom {atom!r}", tok[2], ("atom",))
            expect("rnode", "'|>'")
            right = tree()
            expect("rparen", "')'")
            return Node(atom, left, right)
        raise ParseError(f"unexpected {tok[1]!r}" if tok[0] != "eof" else "unexpected end of input",
                         tok[2], ("leaf", "'('"))

    result = tree()
    tok = peek()
    if tok[0] != "eof":
        raise ParseError(f"unexpected {tok[1]!r}", tok[2], ("end of input",))
    return result


def to_dot(x: Tree) -> str:
    """GraphViz rendering with one graph node per tree position."""
    lines = ["digraph evaltree {", "  node [shape=none];"]
    counter = 0

    def go(t: Tree) -> str:
        nonlocal counter
        name = f"n{counter}"
        counter += 1
        label = t.label if isinstance(t, Leaf) else t.atom
        lines.append(f'  {name} [label="{label}"];')
        if isinstance(t, Node):
            left = go(t.left)
            right = go(t.right)
            lines.append(f'  {name} -> {left} [label="T"];')
            lines.append(f'  {name} -> {right} [label="F"];')
        return name

    go(x)
    lines.append("}")
    return "\n".join(lines)


def subtree_iter(x: Tree) -> Iterator[Tree]:
    """Distinct subtrees in first-encounter depth-first order."""
    seen: set[Tree] = set()

    def go(t: Tree) -> Iterator[Tree]:
        if t in seen:
            return
        seen.add(t)
        yield t
        if isinstance(t, Node):
            yield from go(t.left)
            yield from go(t.right)

    return go(x)
