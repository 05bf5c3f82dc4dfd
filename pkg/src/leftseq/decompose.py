"""Tree decompositions and the inverse maps from trees back to normal forms.

A decomposition splits an evaluation tree into a hole context and a core so
that re-substituting the core restores the original tree.  Three kinds exist
per logic:

* conjunction decomposition (cd): recovers the operands of the top-level
  conjunction of a *-term image;
* disjunction decomposition (dd): likewise for disjunctions;
* T-*-decomposition (tsd): splits a T-*-term image into the image of its
  always-true prefix and the image of its *-term.

On full-evaluation images a conjunction duplicates its second operand into
both branches (once as-is, once with true yields flushed to false), so the
FEL contexts carry two hole labels.  Short-circuit contexts use a single
hole: the core appears only where the prefix yields true (cd) or false (dd).

The inverse maps ``fel_g``/``scl_g`` rebuild the unique normal form whose
image a tree is.  They verify the result by re-evaluating it, so feeding a
tree outside the image of a normal form raises ``InversionError`` rather
than returning a wrong term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .evaltree import (FALSE, HOLE, HOLE1, HOLE2, Leaf, Node, TRUE, Tree,
                       contains_leaf, depth, fe, format_tree, replace, se,
                       subtree_iter)
from .terms import AndFull, AndSC, Atom, FalseConst, Not, OrFull, OrSC, Term, TrueConst

KINDS = ("fel-cd", "fel-dd", "fel-tsd", "scl-cd", "scl-dd", "scl-tsd")


class InversionError(ValueError):
    """A tree is not the image of any normal-form term."""


@dataclass(frozen=True)
class Decomposition:
    context: Tree
    core: Tree
    kind: str

    def recompose(self) -> Tree:
        """Substitute the core back into the context."""
        if self.kind == "fel-cd":
            return replace(self.context,
                           {"[1]": self.core, "[2]": replace(self.core, {"T": FALSE})})
        if self.kind == "fel-dd":
            return replace(self.context,
                           {"[1]": replace(self.core, {"F": TRUE}), "[2]": self.core})
        return replace(self.context, {"[]": self.core})


def _checked(d: Decomposition, original: Tree) -> Decomposition:
    if d.recompose() != original:
        raise RuntimeError(f"internal error: {d.kind} recomposition mismatch")
    return d


def _core_candidates(x: Tree) -> list[Tree]:
    """Distinct subtrees containing both leaf values, smallest depth first.

    Equal depths are ordered by the serialized tree so the scan order is
    deterministic; on images of normal forms the theorems make the choice
    unique anyway.
    """
    cands = [t for t in subtree_iter(x)
             if contains_leaf(t, "T") and contains_leaf(t, "F")]
    cands.sort(key=depth)
    ordered: list[Tree] = []
    for _, group in itertools.groupby(cands, key=depth):
        block = list(group)
        if len(block) > 1:
            block.sort(key=format_tree)
        ordered.extend(block)
    return ordered


# ---------------------------------------------------------------------------
# FEL decompositions (two-hole contexts)


def _fel_context(x: Tree, core: Tree, flushed: Tree, first: Tree, second: Tree) -> Tree | None:
    """Replace occurrences of ``core``/``flushed`` by hole leaves.

    Every value leaf must end up inside an occurrence; otherwise the
    candidate core does not produce a valid context and ``None`` is returned.
    """
    memo: dict[int, Tree | None] = {}

    def go(t: Tree) -> Tree | None:
        if t == core:
            return first
        if t == flushed:
            return second
        if isinstance(t, Leaf):
            return None
        if id(t) in memo:
            return memo[id(t)]
        left, right = go(t.left), go(t.right)
        result = None if left is None or right is None else Node(t.atom, left, right)
        memo[id(t)] = result
        return result

    return go(x)


def fel_cd(x: Tree) -> Decomposition | None:
    """Conjunction decomposition of a full-evaluation image, if any.

    The context holds ``[1]`` where the core appears as-is and ``[2]`` where
    it appears with its true leaves flushed to false; the core is the
    smallest such subtree containing both leaf values.
    """
    for core in _core_candidates(x):
        flushed = replace(core, {"T": FALSE})
        context = _fel_context(x, core, flushed, HOLE1, HOLE2)
        if (context is not None and contains_leaf(context, "[1]")
                and contains_leaf(context, "[2]")):
            return _checked(Decomposition(context, core, "fel-cd"), x)
    return None


def fel_dd(x: Tree) -> Decomposition | None:
    """Disjunction decomposition: dual of ``fel_cd`` with false leaves
    flushed to true at the ``[1]`` positions."""
    for core in _core_candidates(x):
        flushed = replace(core, {"F": TRUE})
        context = _fel_context(x, core, flushed, HOLE2, HOLE1)
        if (context is not None and contains_leaf(context, "[1]")
                and contains_leaf(context, "[2]")):
            return _checked(Decomposition(context, core, "fel-dd"), x)
    return None


# ---------------------------------------------------------------------------
# SCL decompositions (single-hole contexts)


def _scl_context(x: Tree, core: Tree, blocked: str) -> Tree | None:
    """Replace every occurrence of ``core`` by ``[]``.

    A ``blocked`` leaf surviving outside all occurrences invalidates the
    candidate (the context may not contain that value).
    """
    memo: dict[int, Tree | None] = {}

    def go(t: Tree) -> Tree | None:
        if t == core:
            return HOLE
        if isinstance(t, Leaf):
            return None if t.label == blocked else t
        if id(t) in memo:
            return memo[id(t)]
        left, right = go(t.left), go(t.right)
        result = None if left is None or right is None else Node(t.atom, left, right)
        memo[id(t)] = result
        return result

    return go(x)


def scl_cd(x: Tree) -> Decomposition | None:
    """Conjunction decomposition of a short-circuit image: the core hangs at
    every position where the prefix yields true, so the context keeps its
    false leaves but may not contain true ones."""
    for core in _core_candidates(x):
        context = _scl_context(x, core, blocked="T")
        if (context is not None and contains_leaf(context, "[]")
                and contains_leaf(context, "F")):
            return _checked(Decomposition(context, core, "scl-cd"), x)
    return None


def scl_dd(x: Tree) -> Decomposition | None:
    for core in _core_candidates(x):
        context = _scl_context(x, core, blocked="F")
        if (context is not None and contains_leaf(context, "[]")
                and contains_leaf(context, "T")):
            return _checked(Decomposition(context, core, "scl-dd"), x)
    return None


# ---------------------------------------------------------------------------
# T-*-decompositions


def _frontier_candidates(x: Tree) -> set[Tree]:
    """Possible cores of uniform frontier cuts.

    ``z`` qualifies when the tree equals a context whose leaves are all
    holes with ``z`` substituted, i.e. the same subtree hangs at every
    frontier position.
    """
    memo: dict[int, set[Tree]] = {}

    def go(t: Tree) -> set[Tree]:
        if isinstance(t, Leaf):
            return {t}
        cached = memo.get(id(t))
        if cached is None:
            cached = (go(t.left) & go(t.right)) | {t}
            memo[id(t)] = cached
        return cached

    return go(x)


def _cut(x: Tree, core: Tree) -> Tree:
    if x == core:
        return HOLE
    if isinstance(x, Leaf):
        raise RuntimeError("internal error: frontier cut missed a leaf")
    return Node(x.atom, _cut(x.left, core), _cut(x.right, core))


def _tsd(x: Tree, kind: str) -> Decomposition | None:
    cands = [z for z in _frontier_candidates(x)
             if contains_leaf(z, "T") and contains_leaf(z, "F")]
    if not cands:
        return None
    best_depth = min(depth(z) for z in cands)
    best = min((z for z in cands if depth(z) == best_depth), key=format_tree)
    return _checked(Decomposition(_cut(x, best), best, kind), x)


def fel_tsd(x: Tree) -> Decomposition | None:
    """T-*-decomposition: cut below the all-hole context with the shallowest
    core that still contains both leaf values.  Trees with only one leaf
    value have no such core and yield ``None``."""
    return _tsd(x, "fel-tsd")


def scl_tsd(x: Tree) -> Decomposition | None:
    return _tsd(x, "scl-tsd")


# ---------------------------------------------------------------------------
# Inversion, FEL side


def _only(x: Tree, label: str) -> bool:
    other = "F" if label == "T" else "T"
    return contains_leaf(x, label) and not contains_leaf(x, other)


def _fel_g_tterm(x: Tree) -> Term:
    if x == TRUE:
        return TrueConst()
    if isinstance(x, Node):
        return OrFull(Atom(x.atom), _fel_g_tterm(x.left))
    raise InversionError("not the image of an always-true term")


def _fel_g_fterm(x: Tree) -> Term:
    if x == FALSE:
        return FalseConst()
    if isinstance(x, Node):
        return AndFull(Atom(x.atom), _fel_g_fterm(x.right))
    raise InversionError("not the image of an always-false term")


def _fel_g_lterm(x: Tree) -> Term:
    if isinstance(x, Node):
        if _only(x.left, "T"):
            return AndFull(Atom(x.atom), _fel_g_tterm(x.left))
        if _only(x.right, "T"):
            return AndFull(Not(Atom(x.atom)), _fel_g_tterm(x.right))
    raise InversionError("no decomposition applies and the tree is not an l-term image")


def _fel_g_star(x: Tree) -> Term:
    d = fel_cd(x)
    if d is not None:
        recovered = replace(d.context, {"[1]": TRUE, "[2]": FALSE})
        return AndFull(_fel_g_star(recovered), _fel_g_star(d.core))
    d = fel_dd(x)
    if d is not None:
        recovered = replace(d.context, {"[1]": TRUE, "[2]": FALSE})
        return OrFull(_fel_g_star(recovered), _fel_g_star(d.core))
    return _fel_g_lterm(x)


def fel_g(x: Tree) -> Term:
    """Invert full evaluation on normal-form images.

    Returns the unique normal-form term whose tree is ``x``; the result is
    re-evaluated before returning, so inversion never silently returns a
    wrong term.
    """
    if _only(x, "T"):
        result: Term = _fel_g_tterm(x)
    elif _only(x, "F"):
        result = _fel_g_fterm(x)
    else:
        d = fel_tsd(x)
        if d is None:
            raise InversionError("tree admits no prefix/core split")
        result = AndFull(_fel_g_tterm(replace(d.context, {"[]": TRUE})),
                         _fel_g_star(d.core))
    if fe(result) != x:
        raise InversionError(f"tree is not a full-evaluation image of a normal form "
                             f"(round-trip produced {result})")
    return result


# ---------------------------------------------------------------------------
# Inversion, SCL side


def _scl_g_tterm(x: Tree) -> Term:
    if x == TRUE:
        return TrueConst()
    if isinstance(x, Node):
        return OrSC(AndSC(Atom(x.atom), _scl_g_tterm(x.left)), _scl_g_tterm(x.right))
    raise InversionError("not the image of an always-true term")


def _scl_g_fterm(x: Tree) -> Term:
    if x == FALSE:
        return FalseConst()
    if isinstance(x, Node):
        return AndSC(OrSC(Atom(x.atom), _scl_g_fterm(x.right)), _scl_g_fterm(x.left))
    raise InversionError("not the image of an always-false term")


def _scl_g_lterm(x: Tree) -> Term:
    if isinstance(x, Node):
        if _only(x.left, "T"):
            return OrSC(AndSC(Atom(x.atom), _scl_g_tterm(x.left)), _scl_g_fterm(x.right))
        if _only(x.right, "T"):
            return OrSC(AndSC(Not(Atom(x.atom)), _scl_g_tterm(x.right)), _scl_g_fterm(x.left))
    raise InversionError("no decomposition applies and the tree is not an l-term image")


def _scl_g_star(x: Tree) -> Term:
    d = scl_cd(x)
    if d is not None:
        return AndSC(_scl_g_star(replace(d.context, {"[]": TRUE})), _scl_g_star(d.core))
    d = scl_dd(x)
    if d is not None:
        return OrSC(_scl_g_star(replace(d.context, {"[]": FALSE})), _scl_g_star(d.core))
    return _scl_g_lterm(x)


def scl_g(x: Tree) -> Term:
    """Invert short-circuit evaluation on normal-form images."""
    if _only(x, "T"):
        result: Term = _scl_g_tterm(x)
    elif _only(x, "F"):
        result = _scl_g_fterm(x)
    else:
        d = scl_tsd(x)
        if d is None:
            raise InversionError("tree admits no prefix/core split")
        result = AndSC(_scl_g_tterm(replace(d.context, {"[]": TRUE})),
                       _scl_g_star(d.core))
    if se(result) != x:
        raise InversionError(f"tree is not a short-circuit image of a normal form "
                             f"(round-trip produced {result})")
    return result
