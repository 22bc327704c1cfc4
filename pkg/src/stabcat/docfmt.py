"""Line-oriented text documents: a ``stabcat/1 <kind>`` header, then ``key = value`` lines.

Integer lists are space separated; preorder relations are written as
``i<j`` tokens meaning ``i <= j``.  Keys that may repeat (``open``, ``mor``,
``comp`` ...) are collected in order.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .category import ComplementedSub, FiniteObj, Mor
from .endo import EndoObj
from .errors import ParseError, StabcatError
from .preord import PreordObj, closure, from_finite_top
from .stable import PartialMor
from .universality import FiniteTTCategory, FunctorTable

HEADER = "stabcat/1"
KINDS = ("preord", "endo", "top", "morphism", "partial", "functor-table", "tt-category")
REPEATED = {"open", "obj", "mor", "comp", "coproduct", "sequence"}


@dataclass(frozen=True)
class TopSpace:
    """A finite topology given by its open sets."""

    n: int
    opens: tuple[tuple[int, ...], ...]

    def preorder(self) -> PreordObj:
        return from_finite_top(self.n, self.opens)


@dataclass(frozen=True)
class Document:
    kind: str
    payload: object


class _Lines:
    """``key = value`` entries remembering where each came from."""

    def __init__(self, text: str):
        self.entries: dict[str, list[tuple[str, int, int]]] = {}
        lines = text.splitlines()
        first = next((i for i, l in enumerate(lines) if l.strip() and not l.lstrip().startswith("#")), None)
        if first is None:
            raise ParseError("empty document", 1, 1)
        head = lines[first].split()
        if len(head) != 2 or head[0] != HEADER:
            raise ParseError(f"expected '{HEADER} <kind>' header", first + 1, 1)
        if head[1] not in KINDS:
            raise ParseError(f"unknown kind {head[1]!r}", first + 1, lines[first].index(head[1]) + 1)
        self.kind = head[1]
        for i in range(first + 1, len(lines)):
            raw = lines[i]
            body = raw.split("#", 1)[0]
            if not body.strip():
                continue
            if "=" not in body:
                raise ParseError("expected 'key = value'", i + 1, len(raw) - len(raw.lstrip()) + 1)
            key, value = body.split("=", 1)
            col = body.index("=") + 2 + (len(value) - len(value.lstrip()))
            key = key.strip()
            if key in self.entries and key.split(".")[-1] not in REPEATED:
                raise ParseError(f"duplicate key {key!r}", i + 1, raw.index(key) + 1)
            self.entries.setdefault(key, []).append((value.strip(), i + 1, col))
        self.used: set[str] = set()

    def get(self, key: str, default=None):
        if key not in self.entries:
            if default is not None:
                return default
            raise ParseError(f"missing key {key!r}", 1, 1)
        self.used.add(key)
        return self.entries[key][0]

    def all(self, key: str):
        self.used.add(key)
        return self.entries.get(key, [])

    def ints(self, key: str, default=None) -> list[int]:
        entry = self.get(key, default)
        return _ints(*entry)

    def finish(self):
        extra = [k for k in self.entries if k not in self.used]
        if extra:
            _, line, col = self.entries[extra[0]][0]
            raise ParseError(f"unexpected key {extra[0]!r}", line, 1)


def _ints(value: str, line: int, col: int) -> list[int]:
    out, pos = [], 0
    for tok in value.split():
        pos = value.index(tok, pos)
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", line, col + pos) from None
        pos += len(tok)
    return out


def _pairs(value: str, line: int, col: int) -> list[tuple[int, int]]:
    out, pos = [], 0
    for tok in value.split():
        pos = value.index(tok, pos)
        a, sep, b = tok.partition("<")
        if not sep or not a.isdigit() or not b.isdigit():
            raise ParseError(f"expected 'i<j', got {tok!r}", line, col + pos)
        out.append((int(a), int(b)))
        pos += len(tok)
    return out


def _wrap(fn, entry):
    """Run a constructor, turning its errors into a located parse error."""
    try:
        return fn()
    except ParseError:
        raise
    except (StabcatError, ValueError, IndexError) as exc:
        _, line, col = entry
        raise ParseError(str(exc), line, col) from None


# -- objects -----------------------------------------------------------------

def _read_obj(L: _Lines, category: str, prefix: str = "") -> FiniteObj:
    n_entry = L.get(prefix + "n")
    n = _ints(*n_entry)
    if len(n) != 1 or n[0] < 0:
        raise ParseError("n must be one non-negative integer", n_entry[1], n_entry[2])
    n = n[0]
    if category == "preord":
        entry = L.get(prefix + "le", ("", n_entry[1], n_entry[2]))
        pairs = _pairs(*entry)
        return _wrap(lambda: closure(n, pairs), entry)
    if category == "endo":
        entry = L.get(prefix + "f", ("", n_entry[1], n_entry[2]))
        table = _ints(*entry)
        return _wrap(lambda: EndoObj(n, tuple(table)), entry)
    raise ParseError(f"unknown category {category!r}", 1, 1)


def _write_obj(X: FiniteObj, prefix: str = "") -> list[str]:
    lines = [f"{prefix}n = {X.n}"]
    if isinstance(X, PreordObj):
        lines.append(f"{prefix}le = " + " ".join(f"{i}<{j}" for i, j in X.pairs() if i != j))
    else:
        lines.append(f"{prefix}f = " + " ".join(map(str, X.f)))
    return [l.rstrip() for l in lines]


def _category_of(X: FiniteObj) -> str:
    return "preord" if isinstance(X, PreordObj) else "endo"


# -- parse / print -------------------------------------------------------------

def parse(text: str) -> Document:
    L = _Lines(text)
    kind = L.kind
    if kind in ("preord", "endo"):
        payload = _read_obj(L, kind)
    elif kind == "top":
        n = L.ints("n")[0]
        opens = []
        for entry in L.all("open"):
            opens.append(tuple(sorted(_ints(*entry))))
        space = TopSpace(n, tuple(sorted(set(opens), key=lambda o: (len(o), o))))
        entry = L.entries.get("open", [("", 1, 1)])[0]
        _wrap(space.preorder, entry)
        payload = space
    elif kind == "morphism":
        cat = L.get("category")[0]
        X, Y = _read_obj(L, cat, "dom."), _read_obj(L, cat, "cod.")
        entry = L.get("table")
        table = _ints(*entry)
        payload = _wrap(lambda: Mor(X, Y, table), entry)
    elif kind == "partial":
        cat = L.get("category")[0]
        X, Y = _read_obj(L, cat, "src."), _read_obj(L, cat, "dst.")
        s_entry, m_entry = L.get("support", ("", 1, 1)), L.get("map", ("", 1, 1))
        support, values = _ints(*s_entry), _ints(*m_entry)
        if len(support) != len(values):
            raise ParseError("support and map have different lengths", m_entry[1], m_entry[2])
        sub = _wrap(lambda: ComplementedSub.of(X, support), s_entry)
        f = _wrap(lambda: Mor(sub.obj, Y, values), m_entry)
        payload = PartialMor(X, Y, sub, f)
    elif kind == "functor-table":
        objs = {a: b for a, b in (_pair_line(e) for e in L.all("obj"))}
        mors = {a: b for a, b in (_pair_line(e) for e in L.all("mor"))}
        payload = FunctorTable(objs, mors)
    else:
        payload = _read_tt(L)
    L.finish()
    return Document(kind, payload)


def _pair_line(entry) -> tuple[int, int]:
    vals = _ints(*entry)
    if len(vals) != 2:
        raise ParseError("expected two integers", entry[1], entry[2])
    return vals[0], vals[1]


def _read_tt(L: _Lines) -> FiniteTTCategory:
    n = L.ints("objects")[0]
    dom, cod = [], []
    for entry in L.all("mor"):
        a, b = _pair_line(entry)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError("object index out of range", entry[1], entry[2])
        dom.append(a)
        cod.append(b)
    comp = {}
    for entry in L.all("comp"):
        vals = _ints(*entry)
        if len(vals) != 3:
            raise ParseError("expected 'g f g.f'", entry[1], entry[2])
        comp[(vals[0], vals[1])] = vals[2]
    coproducts = {}
    for entry in L.all("coproduct"):
        vals = _ints(*entry)
        if len(vals) != 5:
            raise ParseError("expected 'a b sum inl inr'", entry[1], entry[2])
        coproducts[(vals[0], vals[1])] = tuple(vals[2:])
    sequences = {}
    for entry in L.all("sequence"):
        vals = _ints(*entry)
        if len(vals) != 3:
            raise ParseError("expected 'object k q'", entry[1], entry[2])
        sequences[vals[0]] = (vals[1], vals[2])
    return FiniteTTCategory(
        list(range(n)), dom, cod, comp, L.ints("ident"), L.ints("zero")[0],
        frozenset(L.ints("torsion", ("", 1, 1))), frozenset(L.ints("torsionfree", ("", 1, 1))),
        coproducts, sequences, [])


def render(doc: Document) -> str:
    kind, p = doc.kind, doc.payload
    lines = [f"{HEADER} {kind}"]
    if kind in ("preord", "endo"):
        lines += _write_obj(p)
    elif kind == "top":
        lines.append(f"n = {p.n}")
        lines += [("open = " + " ".join(map(str, o))).rstrip() for o in p.opens]
    elif kind == "morphism":
        lines.append(f"category = {_category_of(p.dom)}")
        lines += _write_obj(p.dom, "dom.") + _write_obj(p.cod, "cod.")
        lines.append(("table = " + " ".join(map(str, p.table))).rstrip())
    elif kind == "partial":
        lines.append(f"category = {_category_of(p.src)}")
        lines += _write_obj(p.src, "src.") + _write_obj(p.dst, "dst.")
        lines.append(("support = " + " ".join(map(str, p.support.members))).rstrip())
        lines.append(("map = " + " ".join(map(str, p.map.table))).rstrip())
    elif kind == "functor-table":
        lines += [f"obj = {a} {b}" for a, b in sorted(p.object_map.items())]
        lines += [f"mor = {a} {b}" for a, b in sorted(p.morphism_map.items())]
    else:
        lines.append(f"objects = {p.n_objects}")
        lines.append(f"zero = {p.zero_object}")
        lines.append(("torsion = " + " ".join(map(str, sorted(p.torsion)))).rstrip())
        lines.append(("torsionfree = " + " ".join(map(str, sorted(p.torsionfree)))).rstrip())
        lines.append(("ident = " + " ".join(map(str, p.ident))).rstrip())
        lines += [f"mor = {a} {b}" for a, b in zip(p.dom, p.cod)]
        lines += [f"comp = {g} {f} {gf}" for (g, f), gf in sorted(p.comp.items())]
        lines += [f"coproduct = {a} {b} {s} {l} {r}" for (a, b), (s, l, r) in sorted(p.coproducts.items())]
        lines += [f"sequence = {a} {k} {q}" for a, (k, q) in sorted(p.sequences.items())]
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> Document:
    return parse(Path(path).read_text())


def dump(doc: Document, path: str | Path) -> None:
    Path(path).write_text(render(doc))


def as_document(obj) -> Document:
    """Wrap a payload in the document kind it prints as."""
    if isinstance(obj, PreordObj):
        return Document("preord", obj)
    if isinstance(obj, EndoObj):
        return Document("endo", obj)
    if isinstance(obj, TopSpace):
        return Document("top", obj)
    if isinstance(obj, Mor):
        return Document("morphism", obj)
    if isinstance(obj, PartialMor):
        return Document("partial", obj)
    if isinstance(obj, FunctorTable):
        return Document("functor-table", obj)
    if isinstance(obj, FiniteTTCategory):
        return Document("tt-category", obj)
    raise TypeError(f"no document kind for {type(obj).__name__}")
