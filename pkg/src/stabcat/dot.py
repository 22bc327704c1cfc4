"""Graphviz DOT text for objects and canonical sequences.

Pipe the output to ``dot -Tpng`` to render it.
"""
from __future__ import annotations

from .category import FiniteObj
from .endo import EndoObj
from .preord import PreordObj
from .pretorsion import CanonicalSequence


def hasse_edges(X: PreordObj) -> list[tuple[int, int]]:
    """Covering pairs between distinct equivalence classes, drawn between class representatives."""
    rep = {}
    for i in range(X.n):
        rep.setdefault(i, next(j for j in range(X.n) if X.le(i, j) and X.le(j, i)))
    reps = sorted(set(rep.values()))
    below = {(a, b) for a in reps for b in reps if a != b and X.le(a, b) and not X.le(b, a)}
    return sorted((a, b) for a, b in below
                  if not any((a, c) in below and (c, b) in below for c in reps))


def _body(X: FiniteObj, prefix: str, indent: str) -> list[str]:
    lines = []
    node = lambda i: f"{prefix}{i}"
    if isinstance(X, EndoObj):
        cycles = X.cycles()
        on_cycle = {x for c in cycles for x in c}
        for k, cyc in enumerate(cycles):
            lines.append(f"{indent}subgraph cluster_{prefix}cycle{k} {{")
            lines.append(f"{indent}  style=dashed;")
            lines += [f'{indent}  {node(x)} [label="{x}"];' for x in cyc]
            lines.append(f"{indent}}}")
        lines += [f'{indent}{node(x)} [label="{x}"];' for x in range(X.n) if x not in on_cycle]
        lines += [f"{indent}{node(x)} -> {node(y)};" for x, y in enumerate(X.f)]
    else:
        lines += [f'{indent}{node(x)} [label="{x}"];' for x in range(X.n)]
        for a in range(X.n):
            for b in range(a + 1, X.n):
                if X.le(a, b) and X.le(b, a):
                    lines.append(f"{indent}{node(a)} -> {node(b)} [dir=both style=dashed];")
        lines += [f"{indent}{node(a)} -> {node(b)};" for a, b in hasse_edges(X)]
    return lines


def object_dot(X: FiniteObj, name: str = "X") -> str:
    """Functional graph of an endomap, or Hasse diagram of a preorder (equivalent elements joined)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;" if isinstance(X, PreordObj) else "  rankdir=LR;"]
    lines += _body(X, "n", "  ")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sequence_dot(seq: CanonicalSequence) -> str:
    """The three objects of ``T(X) -> X -> F(X)`` as clusters, with the counit and unit as edges."""
    lines = ["digraph sequence {", "  rankdir=LR;", "  compound=true;"]
    for tag, obj, label in (("t", seq.torsion, "T(X)"), ("x", seq.object, "X"), ("f", seq.free, "F(X)")):
        lines.append(f"  subgraph cluster_{tag} {{")
        lines.append(f'    label="{label}";')
        lines += _body(obj, tag, "    ")
        lines.append("  }")
    for i, v in enumerate(seq.counit.table):
        lines.append(f'  t{i} -> x{v} [style=dotted color=blue label="eps"];')
    for i, v in enumerate(seq.unit.table):
        lines.append(f'  x{i} -> f{v} [style=dotted color=red label="eta"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
