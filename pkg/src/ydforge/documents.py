"""JSON input documents: parsing with JSON-pointer errors, normalization and serialization.

Layout (``schema_version`` 1)::

    {
      "schema_version": 1,
      "field": "rationals" | {"prime_field": p},
      "algebras":            {name: {dim, mult, unit}},
      "hopf_algebras":       {name: {dim, mult, unit, comult, counit, antipode?}},
      "automorphisms":       {name: {hopf, matrix}},
      "bicomodule_algebras": {name: {twist: {hopf, left?, right?}}
                                  | {algebra, left_over, right_over, left_coaction, right_coaction}},
      "bimodule_coalgebras": {name: {twist: {hopf, left?, right?}}
                                  | {coalgebra, left_over, right_over, left_action, right_action}},
      "yd_data":             {name: {H, K, A, C}},
      "yd_modules":          {name: {datum, dim, action, coaction}},
      "half_braids":         {name: {datum, dim, action, component}}
    }

Scalars are strings ("3/2", "-7"); integers are accepted on input.  Matrices
are row-major nested arrays mapping column coordinates to row coordinates;
``unit`` is a flat column and ``counit`` a flat row.  Tensor bases are
left-factor-major: ``e_i (x) f_j`` has index ``i * dim(F) + j``.

In ``yd_data`` the names ``"regular"`` for ``A`` or ``C`` stand for the regular
structures of ``H`` (which then must equal ``K``).  A ``coalgebra`` or
``algebra`` field may name a Hopf algebra, whose underlying structure is used;
a coalgebra may also be given inline as ``{dim, comult, counit}``.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field as dc_field

from .hopf import Algebra, Bialgebra, Coalgebra, HopfAlgebra, compute_antipode
from .linalg import Field, Matrix
from .reps import BicomoduleAlgebra, BimoduleCoalgebra, regular_bicomodule_algebra, regular_bimodule_coalgebra, twist_regular
from .report import StructureError
from .yd import GenYDModule, HalfBraid, YDDatum

SCHEMA_VERSION = 1
SECTIONS = (
    "algebras",
    "hopf_algebras",
    "automorphisms",
    "bicomodule_algebras",
    "bimodule_coalgebras",
    "yd_data",
    "yd_modules",
    "half_braids",
)


class InputError(ValueError):
    """Malformed input; ``pointer`` is a JSON pointer to the offending value."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


def _ptr(*parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


@dataclass(eq=False)
class InputDocument:
    """A validated document: the normalized JSON plus the structures it names."""

    raw: dict
    field: Field
    algebras: dict = dc_field(default_factory=dict)
    hopf_algebras: dict = dc_field(default_factory=dict)
    automorphisms: dict = dc_field(default_factory=dict)  # name -> (hopf name, Matrix)
    bicomodule_algebras: dict = dc_field(default_factory=dict)
    bimodule_coalgebras: dict = dc_field(default_factory=dict)
    yd_data: dict = dc_field(default_factory=dict)
    yd_modules: dict = dc_field(default_factory=dict)
    half_braids: dict = dc_field(default_factory=dict)
    source: str = ""
    antipode_supplied: dict = dc_field(default_factory=dict)  # hopf name -> stored antipode or None

    def __eq__(self, other) -> bool:
        return isinstance(other, InputDocument) and self.raw == other.raw


# scalars and matrices


def _parse_field(value, pointer: str) -> Field:
    if value == "rationals":
        return Field.rationals()
    if isinstance(value, dict) and set(value) == {"prime_field"}:
        p = value["prime_field"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise InputError(pointer + "/prime_field", "modulus must be an integer")
        try:
            return Field.gf(p)
        except ValueError as exc:
            raise InputError(pointer + "/prime_field", str(exc)) from None
    raise InputError(pointer, 'field must be "rationals" or {"prime_field": p}')


def _scalar(field: Field, value, pointer: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(pointer, f"scalar must be a string or an integer, got {type(value).__name__}")
    try:
        return field.scalar(value)
    except (ValueError, ZeroDivisionError):
        raise InputError(pointer, f"not an exact scalar: {value!r}") from None


def _matrix(field: Field, value, pointer: str, shape: tuple[int, int]) -> Matrix:
    rows, cols = shape
    if not isinstance(value, list) or len(value) != rows:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise InputError(pointer, f"expected {rows} rows, got {got}")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise InputError(f"{pointer}/{i}", f"expected {cols} entries, got {got}")
        out.append([_scalar(field, x, f"{pointer}/{i}/{j}") for j, x in enumerate(row)])
    if rows == 0:
        return Matrix.zeros(field, 0, cols)
    return Matrix.from_rows(field, out)


def _column(field: Field, value, pointer: str, n: int) -> Matrix:
    if not isinstance(value, list) or len(value) != n:
        raise InputError(pointer, f"expected a list of {n} scalars")
    return Matrix.column(field, [_scalar(field, x, f"{pointer}/{i}") for i, x in enumerate(value)]) if n else Matrix.zeros(field, 0, 1)


def _row(field: Field, value, pointer: str, n: int) -> Matrix:
    return _column(field, value, pointer, n).T


def matrix_json(m: Matrix) -> list[list[str]]:
    return m.to_strings()


def column_json(m: Matrix) -> list[str]:
    return [str(v) for v in m.column_values(0)]


def row_json(m: Matrix) -> list[str]:
    return [str(m[0, j]) for j in range(m.cols)]


# parsing


def _obj(value, pointer: str, keys: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(value, dict):
        raise InputError(pointer, "expected an object")
    for k in keys:
        if k not in value:
            raise InputError(_join(pointer, k), "missing required key")
    extra = set(value) - keys - set(optional)
    if extra:
        raise InputError(_join(pointer, sorted(extra)[0]), "unknown key")
    return value


def _join(pointer: str, key) -> str:
    return pointer + _ptr(key)


def _dim(value, pointer: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InputError(pointer, "dimension must be a nonnegative integer")
    return value


def _ref(table: dict, name, pointer: str, what: str):
    if not isinstance(name, str):
        raise InputError(pointer, f"expected the name of {what}")
    if name not in table:
        raise InputError(pointer, f"unresolved reference to {what} {name!r}")
    return table[name]


def parse_input(data: bytes | str, source: str = "") -> InputDocument:
    """Validate a document: references resolve and every dimension fits.

    Axioms are not checked here; that is the job of the commands.
    """
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    except UnicodeDecodeError as exc:
        raise InputError("", f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("", f"JSON syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_document(doc, source)


def parse_document(doc, source: str = "") -> InputDocument:
    if not isinstance(doc, dict):
        raise InputError("", "document must be a JSON object")
    allowed = {"schema_version", "field", "description", *SECTIONS}
    for k in doc:
        if k not in allowed:
            raise InputError(_ptr(k), "unknown top-level key")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise InputError("/schema_version", f"expected schema_version {SCHEMA_VERSION}")
    if "field" not in doc:
        raise InputError("/field", "missing required key")
    F = _parse_field(doc["field"], "/field")
    out = InputDocument(raw={}, field=F, source=source)
    raw: dict = {"schema_version": SCHEMA_VERSION, "field": doc["field"] if doc["field"] == "rationals" else {"prime_field": F.prime}}
    if "description" in doc:
        if not isinstance(doc["description"], str):
            raise InputError("/description", "expected a string")
        raw["description"] = doc["description"]
    sections = {}
    for s in SECTIONS:
        v = doc.get(s, {})
        if not isinstance(v, dict):
            raise InputError(_ptr(s), "section must be an object keyed by name")
        sections[s] = v
        raw[s] = {}

    for name, spec in sections["algebras"].items():
        p = _ptr("algebras", name)
        _obj(spec, p, {"dim", "mult", "unit"})
        d = _dim(spec["dim"], p + "/dim")
        mult = _matrix(F, spec["mult"], p + "/mult", (d, d * d))
        unit = _column(F, spec["unit"], p + "/unit", d)
        out.algebras[name] = Algebra(mult, unit)
        raw["algebras"][name] = {"dim": d, "mult": matrix_json(mult), "unit": column_json(unit)}

    for name, spec in sections["hopf_algebras"].items():
        p = _ptr("hopf_algebras", name)
        _obj(spec, p, {"dim", "mult", "unit", "comult", "counit"}, {"antipode"})
        d = _dim(spec["dim"], p + "/dim")
        mult = _matrix(F, spec["mult"], p + "/mult", (d, d * d))
        unit = _column(F, spec["unit"], p + "/unit", d)
        comult = _matrix(F, spec["comult"], p + "/comult", (d * d, d))
        counit = _row(F, spec["counit"], p + "/counit", d)
        b = Bialgebra(Algebra(mult, unit), Coalgebra(comult, counit), name)
        entry = {"dim": d, "mult": matrix_json(mult), "unit": column_json(unit), "comult": matrix_json(comult), "counit": row_json(counit)}
        stored = None
        if "antipode" in spec:
            stored = _matrix(F, spec["antipode"], p + "/antipode", (d, d))
            entry["antipode"] = matrix_json(stored)
        out.antipode_supplied[name] = stored
        S = stored
        if S is None:
            try:
                found = compute_antipode(b)
            except ValueError:
                found = None
            S = None if found is None else found[0]
        out.hopf_algebras[name] = HopfAlgebra(b.alg, b.coalg, name, S) if S is not None else b
        raw["hopf_algebras"][name] = entry

    for name, spec in sections["automorphisms"].items():
        p = _ptr("automorphisms", name)
        _obj(spec, p, {"hopf", "matrix"})
        h = _ref(out.hopf_algebras, spec["hopf"], p + "/hopf", "a Hopf algebra")
        m = _matrix(F, spec["matrix"], p + "/matrix", (h.dim, h.dim))
        out.automorphisms[name] = (spec["hopf"], m)
        raw["automorphisms"][name] = {"hopf": spec["hopf"], "matrix": matrix_json(m)}

    def twist(spec, p: str):
        t = _obj(spec["twist"], p + "/twist", {"hopf"}, {"left", "right"})
        hname = t["hopf"]
        h = _ref(out.hopf_algebras, hname, p + "/twist/hopf", "a Hopf algebra")
        if not isinstance(h, HopfAlgebra):
            raise InputError(p + "/twist/hopf", f"{hname!r} has no antipode")
        maps, norm = [], {"hopf": hname}
        for side in ("left", "right"):
            a = t.get(side)
            if a is None:
                maps.append(None)
                continue
            hn, m = _ref(out.automorphisms, a, f"{p}/twist/{side}", "an automorphism")
            if hn != hname:
                raise InputError(f"{p}/twist/{side}", f"automorphism {a!r} belongs to {hn!r}, not {hname!r}")
            maps.append(m)
            norm[side] = a
        return h, maps, {"twist": norm}

    for name, spec in sections["bicomodule_algebras"].items():
        p = _ptr("bicomodule_algebras", name)
        if isinstance(spec, dict) and "twist" in spec:
            _obj(spec, p, {"twist"})
            h, (left, right), norm = twist(spec, p)
            A = twist_regular(h, left, right, "comodule_algebra", check=False)
            A.name = name
            out.bicomodule_algebras[name] = A
            raw["bicomodule_algebras"][name] = norm
            continue
        _obj(spec, p, {"algebra", "left_over", "right_over", "left_coaction", "right_coaction"})
        an = spec["algebra"]
        if isinstance(an, str) and an in out.algebras:
            alg = out.algebras[an]
        else:
            alg = _ref(out.hopf_algebras, an, p + "/algebra", "an algebra or Hopf algebra").alg
        H = _ref(out.hopf_algebras, spec["left_over"], p + "/left_over", "a Hopf algebra")
        K = _ref(out.hopf_algebras, spec["right_over"], p + "/right_over", "a Hopf algebra")
        d = alg.dim
        lc = _matrix(F, spec["left_coaction"], p + "/left_coaction", (H.dim * d, d))
        rc = _matrix(F, spec["right_coaction"], p + "/right_coaction", (d * K.dim, d))
        out.bicomodule_algebras[name] = BicomoduleAlgebra(alg, lc, rc, H, K, name)
        raw["bicomodule_algebras"][name] = {
            "algebra": an,
            "left_over": spec["left_over"],
            "right_over": spec["right_over"],
            "left_coaction": matrix_json(lc),
            "right_coaction": matrix_json(rc),
        }

    for name, spec in sections["bimodule_coalgebras"].items():
        p = _ptr("bimodule_coalgebras", name)
        if isinstance(spec, dict) and "twist" in spec:
            _obj(spec, p, {"twist"})
            h, (left, right), norm = twist(spec, p)
            C = twist_regular(h, left, right, "module_coalgebra", check=False)
            C.name = name
            out.bimodule_coalgebras[name] = C
            raw["bimodule_coalgebras"][name] = norm
            continue
        _obj(spec, p, {"coalgebra", "left_over", "right_over", "left_action", "right_action"})
        cn = spec["coalgebra"]
        if isinstance(cn, dict):
            _obj(cn, p + "/coalgebra", {"dim", "comult", "counit"})
            d = _dim(cn["dim"], p + "/coalgebra/dim")
            coalg = Coalgebra(_matrix(F, cn["comult"], p + "/coalgebra/comult", (d * d, d)), _row(F, cn["counit"], p + "/coalgebra/counit", d))
            cjson = {"dim": d, "comult": matrix_json(coalg.comult), "counit": row_json(coalg.counit)}
        else:
            coalg = _ref(out.hopf_algebras, cn, p + "/coalgebra", "a Hopf algebra").coalg
            cjson = cn
        K = _ref(out.hopf_algebras, spec["left_over"], p + "/left_over", "a Hopf algebra")
        H = _ref(out.hopf_algebras, spec["right_over"], p + "/right_over", "a Hopf algebra")
        d = coalg.dim
        la = _matrix(F, spec["left_action"], p + "/left_action", (d, K.dim * d))
        ra = _matrix(F, spec["right_action"], p + "/right_action", (d, d * H.dim))
        out.bimodule_coalgebras[name] = BimoduleCoalgebra(coalg, la, ra, K, H, name)
        raw["bimodule_coalgebras"][name] = {
            "coalgebra": cjson,
            "left_over": spec["left_over"],
            "right_over": spec["right_over"],
            "left_action": matrix_json(la),
            "right_action": matrix_json(ra),
        }

    for name, spec in sections["yd_data"].items():
        p = _ptr("yd_data", name)
        _obj(spec, p, {"H", "K", "A", "C"})
        H = _ref(out.hopf_algebras, spec["H"], p + "/H", "a Hopf algebra")
        K = _ref(out.hopf_algebras, spec["K"], p + "/K", "a Hopf algebra")
        meta: dict = {}
        twists = []
        for key, table, regular, what, sect in (
            ("A", out.bicomodule_algebras, regular_bicomodule_algebra, "a bicomodule algebra", "bicomodule_algebras"),
            ("C", out.bimodule_coalgebras, regular_bimodule_coalgebra, "a bimodule coalgebra", "bimodule_coalgebras"),
        ):
            ref = spec[key]
            if ref == "regular":
                if spec["H"] != spec["K"] or not isinstance(H, HopfAlgebra):
                    raise InputError(_join(p, key), "regular structures need H = K Hopf")
                twists.append((H.id(), H.id()))
                continue
            _ref(table, ref, _join(p, key), what)
            tw = raw[sect][ref].get("twist") if isinstance(raw[sect][ref], dict) else None
            if tw is not None and tw["hopf"] == spec["H"] == spec["K"]:
                left = out.automorphisms[tw["left"]][1] if "left" in tw else H.id()
                right = out.automorphisms[tw["right"]][1] if "right" in tw else H.id()
                twists.append((left, right))
            else:
                twists.append(None)
        A = regular_bicomodule_algebra(H) if spec["A"] == "regular" else out.bicomodule_algebras[spec["A"]]
        C = regular_bimodule_coalgebra(H) if spec["C"] == "regular" else out.bimodule_coalgebras[spec["C"]]
        if all(t is not None for t in twists):
            meta = {"alpha": twists[0][0], "beta": twists[0][1], "gamma": twists[1][0], "delta": twists[1][1]}
        try:
            out.yd_data[name] = YDDatum(H, K, A, C, name, meta)
        except StructureError as exc:
            raise InputError(p, str(exc)) from None
        raw["yd_data"][name] = {k: spec[k] for k in ("H", "K", "A", "C")}

    for name, spec in sections["yd_modules"].items():
        p = _ptr("yd_modules", name)
        _obj(spec, p, {"datum", "dim", "action", "coaction"})
        d = _ref(out.yd_data, spec["datum"], p + "/datum", "a YD datum")
        n = _dim(spec["dim"], p + "/dim")
        act = _matrix(F, spec["action"], p + "/action", (n, d.A.dim * n))
        co = _matrix(F, spec["coaction"], p + "/coaction", (n * d.C.dim, n))
        out.yd_modules[name] = GenYDModule(d, n, act, co, name)
        raw["yd_modules"][name] = {"datum": spec["datum"], "dim": n, "action": matrix_json(act), "coaction": matrix_json(co)}

    for name, spec in sections["half_braids"].items():
        p = _ptr("half_braids", name)
        _obj(spec, p, {"datum", "dim", "action", "component"})
        d = _ref(out.yd_data, spec["datum"], p + "/datum", "a YD datum")
        n = _dim(spec["dim"], p + "/dim")
        act = _matrix(F, spec["action"], p + "/action", (n, d.A.dim * n))
        comp = _matrix(F, spec["component"], p + "/component", (n * d.C.dim, d.H.dim * n))
        out.half_braids[name] = HalfBraid(d, n, act, comp, name)
        raw["half_braids"][name] = {"datum": spec["datum"], "dim": n, "action": matrix_json(act), "component": matrix_json(comp)}

    out.raw = {k: v for k, v in raw.items() if v != {} or k in ("schema_version", "field")}
    return out


def serialize(doc: InputDocument) -> str:
    """Deterministic JSON text of the normalized document."""
    return json.dumps(doc.raw, indent=1, sort_keys=True) + "\n"


def load(path) -> InputDocument:
    with open(path, "rb") as fh:
        return parse_input(fh.read(), str(path))


# building documents from structures


class DocumentBuilder:
    """Collects named structures and emits a document in the schema above."""

    def __init__(self, field: Field, description: str = ""):
        self.field = field
        self.doc: dict = {"schema_version": SCHEMA_VERSION, "field": "rationals" if field.prime is None else {"prime_field": field.prime}}
        if description:
            self.doc["description"] = description
        for s in SECTIONS:
            self.doc[s] = {}
        self._hopf_names: dict[int, str] = {}

    def _section(self, s: str) -> dict:
        return self.doc[s]

    def hopf(self, name: str, h: HopfAlgebra, with_antipode: bool = True) -> str:
        entry = {
            "dim": h.dim,
            "mult": matrix_json(h.mult),
            "unit": column_json(h.unit),
            "comult": matrix_json(h.comult),
            "counit": row_json(h.counit),
        }
        if with_antipode and isinstance(h, HopfAlgebra):
            entry["antipode"] = matrix_json(h.S)
        self.doc["hopf_algebras"][name] = entry
        self._hopf_names[id(h)] = name
        return name

    def hopf_name(self, h) -> str:
        try:
            return self._hopf_names[id(h)]
        except KeyError:
            raise KeyError(f"Hopf algebra {h.name!r} was not added to the document") from None

    def automorphism(self, name: str, h: HopfAlgebra, m: Matrix) -> str:
        self.doc["automorphisms"][name] = {"hopf": self.hopf_name(h), "matrix": matrix_json(m)}
        return name

    def twisted(self, section: str, name: str, h: HopfAlgebra, left: str | None = None, right: str | None = None) -> str:
        t = {"hopf": self.hopf_name(h)}
        if left:
            t["left"] = left
        if right:
            t["right"] = right
        self.doc[section][name] = {"twist": t}
        return name

    def bicomodule_algebra(self, name: str, A: BicomoduleAlgebra, algebra: str) -> str:
        self.doc["bicomodule_algebras"][name] = {
            "algebra": algebra,
            "left_over": self.hopf_name(A.H),
            "right_over": self.hopf_name(A.K),
            "left_coaction": matrix_json(A.left_coaction),
            "right_coaction": matrix_json(A.right_coaction),
        }
        return name

    def bimodule_coalgebra(self, name: str, C: BimoduleCoalgebra, coalgebra: str | None = None) -> str:
        cjson = coalgebra or {"dim": C.dim, "comult": matrix_json(C.coalg.comult), "counit": row_json(C.coalg.counit)}
        self.doc["bimodule_coalgebras"][name] = {
            "coalgebra": cjson,
            "left_over": self.hopf_name(C.K),
            "right_over": self.hopf_name(C.H),
            "left_action": matrix_json(C.left_action),
            "right_action": matrix_json(C.right_action),
        }
        return name

    def datum(self, name: str, H, K, A: str, C: str) -> str:
        self.doc["yd_data"][name] = {"H": self.hopf_name(H), "K": self.hopf_name(K), "A": A, "C": C}
        return name

    def module(self, name: str, datum: str, m: GenYDModule) -> str:
        self.doc["yd_modules"][name] = {"datum": datum, "dim": m.dim, "action": matrix_json(m.action), "coaction": matrix_json(m.coaction)}
        return name

    def half_braid(self, name: str, datum: str, b: HalfBraid) -> str:
        self.doc["half_braids"][name] = {"datum": datum, "dim": b.dim, "action": matrix_json(b.action), "component": matrix_json(b.component)}
        return name

    def build(self) -> dict:
        out = copy.deepcopy(self.doc)
        return {k: v for k, v in out.items() if v != {} or k in ("schema_version", "field")}
