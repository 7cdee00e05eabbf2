"""JSON interchange for workspaces of named algebraic objects.

A workspace document is {"field": "Q"|"Fp:<p>", "objects": {name: block}}
where each block wraps exactly one typed body, e.g. {"coring": {...}}.
Scalars are strings in the field's format, matrices are row-major nested
arrays of them, and structure constants nest as tensors (mult[i][j] lists
the coefficients of e_i e_j). Cross references between objects are plain
name strings and must resolve acyclically inside one workspace.

Comultiplications and coactions are written in the quotient coordinates of
the corresponding tensor product. Those coordinates are pinned by shipping
the reduced relation matrix and its pivot columns alongside; loading
recomputes the presentation from the actions and refuses the file if the
pin disagrees, so coordinates can never silently mean something else.

Everything raised on decode is MalformedInput. Decoding never runs axiom
suites; that is what validators are for.
"""

import json

from .algebra import Algebra, AlgebraHom, Bimodule
from .coring import Coring, LeftComodule, RightComodule
from .entwine import Entwining, EntwiningMorphism
from .errors import CoringlabError, MalformedInput, ValidationFailed
from .fields import field_from_name
from .functors import CoringHom
from .matrix import Matrix
from .separability import KINDS, Certificate
from .tensor import balance_relations, tensor_chain


def canonical_json(doc):
    """One canonical byte representation per document."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


# -- scalars and matrices ------------------------------------------------------


def _fail(where, what):
    raise MalformedInput("%s: %s" % (where, what))


def _parse_scalar(field, s, where):
    if not isinstance(s, str):
        _fail(where, "scalar must be a string, got %r" % (s,))
    try:
        return field.parse_scalar(s)
    except CoringlabError as exc:
        _fail(where, str(exc))


def encode_matrix(m):
    fmt = m.field.format_scalar
    return [[fmt(x) for x in row] for row in m.data]


def decode_matrix(field, data, rows, cols, where):
    if not isinstance(data, list) or len(data) != rows:
        _fail(where, "expected %d matrix rows" % rows)
    if rows == 0:
        return Matrix.zero(field, 0, cols)
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            _fail(where, "row %d must have %d entries" % (i, cols))
        out.append([_parse_scalar(field, x, where) for x in row])
    return Matrix(field, out)


def encode_sized(m):
    return {"rows": m.rows, "cols": m.cols, "entries": encode_matrix(m)}


def decode_sized(field, body, where):
    if not isinstance(body, dict):
        _fail(where, "expected a sized matrix object")
    rows, cols = body.get("rows"), body.get("cols")
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        _fail(where, "rows and cols must be nonnegative integers")
    return decode_matrix(field, body.get("entries"), rows, cols, where)


def _column(field, data, dim, where):
    if not isinstance(data, list) or len(data) != dim:
        _fail(where, "expected a list of %d scalars" % dim)
    return Matrix(field, [[_parse_scalar(field, x, where)] for x in data])


# -- structure-constant tensors ------------------------------------------------


def _encode_product_tensor(matrix, d1, d2):
    """matrix column i*d2+j becomes tensor cell [i][j]."""
    fmt = matrix.field.format_scalar
    return [
        [[fmt(matrix.data[k][i * d2 + j]) for k in range(matrix.rows)]
         for j in range(d2)]
        for i in range(d1)
    ]


def _decode_product_tensor(field, data, d1, d2, out, where):
    if not isinstance(data, list) or len(data) != d1:
        _fail(where, "expected %d outer entries" % d1)
    if out == 0:
        return Matrix.zero(field, 0, d1 * d2)
    cells = [[field.zero] * (d1 * d2) for _ in range(out)]
    for i, block in enumerate(data):
        if not isinstance(block, list) or len(block) != d2:
            _fail(where, "entry %d must list %d cells" % (i, d2))
        for j, cell in enumerate(block):
            if not isinstance(cell, list) or len(cell) != out:
                _fail(where, "cell (%d, %d) must list %d coefficients" % (i, j, out))
            for k, s in enumerate(cell):
                cells[k][i * d2 + j] = _parse_scalar(field, s, where)
    return Matrix(field, cells)


# -- tensor presentation pins ---------------------------------------------------


def tensor_pin(m, n):
    """Canonical fingerprint of the quotient presentation of M (x)_A N."""
    rel = balance_relations(m, n)
    reduced, pivots = rel.transpose().rref()
    rows = [list(reduced.data[i]) for i in range(len(pivots))]
    fmt = m.field.format_scalar
    return {
        "relations_rref": [[fmt(x) for x in row] for row in rows],
        "pivots": list(pivots),
    }


def _check_pin(body, m, n, where):
    pin = body.get("tensor_pin")
    if not isinstance(pin, dict):
        _fail(where, "missing tensor_pin")
    field = m.field
    ambient = m.dim * n.dim
    stated_pivots = pin.get("pivots")
    if not isinstance(stated_pivots, list) or not all(
        isinstance(p, int) for p in stated_pivots
    ):
        _fail(where, "tensor_pin.pivots must be a list of integers")
    stated = pin.get("relations_rref")
    rows = len(stated) if isinstance(stated, list) else -1
    if rows != len(stated_pivots):
        _fail(where, "tensor_pin.relations_rref must have one row per pivot")
    stated_rel = decode_matrix(field, stated, rows, ambient, where + ".tensor_pin")
    computed = tensor_pin(m, n)
    computed_rel = decode_matrix(
        field, computed["relations_rref"], len(computed["pivots"]), ambient, where
    )
    if stated_pivots != computed["pivots"] or stated_rel != computed_rel:
        _fail(
            where,
            "tensor_pin does not match the presentation computed here; "
            "the file's quotient coordinates would be misread",
        )


# -- typed blocks ----------------------------------------------------------------


def encode_algebra(a):
    return {
        "algebra": {
            "dim": a.dim,
            "mult": _encode_product_tensor(a.mult, a.dim, a.dim),
            "unit": [a.field.format_scalar(x[0]) for x in a.unit.data],
        }
    }


def encode_bimodule(b, left_ref, right_ref):
    return {
        "bimodule": {
            "left": left_ref,
            "right": right_ref,
            "dim": b.dim,
            "left_action": _encode_product_tensor(
                b.left_action, b.left_algebra.dim, b.dim
            ),
            "right_action": _encode_product_tensor(
                b.right_action, b.dim, b.right_algebra.dim
            ),
        }
    }


def encode_coring(c, base_ref, carrier_ref):
    return {
        "coring": {
            "base": base_ref,
            "carrier": carrier_ref,
            "delta": encode_matrix(c.delta),
            "epsilon": encode_matrix(c.epsilon),
            "tensor_pin": tensor_pin(c.carrier, c.carrier),
        }
    }


def encode_comodule(m, coring_ref, carrier_ref):
    if isinstance(m, RightComodule):
        return {
            "comodule": {
                "coring": coring_ref,
                "carrier": carrier_ref,
                "rho": encode_matrix(m.rho),
                "tensor_pin": tensor_pin(m.carrier, m.coring.carrier),
            }
        }
    return {
        "left_comodule": {
            "coring": coring_ref,
            "carrier": carrier_ref,
            "lam": encode_matrix(m.lam),
            "tensor_pin": tensor_pin(m.coring.carrier, m.carrier),
        }
    }


def encode_coring_hom(h, source_ref, target_ref):
    return {
        "coring_hom": {
            "source": source_ref,
            "target": target_ref,
            "rho": encode_matrix(h.rho.matrix),
            "phi": encode_matrix(h.phi),
        }
    }


def encode_entwining(e, algebra_ref, coalgebra_ref):
    return {
        "entwining": {
            "algebra": algebra_ref,
            "coalgebra": coalgebra_ref,
            "psi": encode_matrix(e.psi),
        }
    }


def encode_entwining_morphism(m, source_ref, target_ref):
    return {
        "entwining_morphism": {
            "source": source_ref,
            "target": target_ref,
            "f": encode_matrix(m.algebra_map.matrix),
            "g": encode_matrix(m.coalgebra_map),
        }
    }


def encode_certificate(cert, ref):
    body = {
        "kind": cert.kind,
        "payload": encode_sized(cert.payload),
        "solution_space_dim": cert.solution_space_dim,
    }
    body["hom" if cert.hom is not None else "coring"] = ref
    return {"certificate": body}


def encode_adjunction_data(ad):
    """All verified triangle data with its named roles."""
    return {
        "adjunction_data": {
            "theta": [encode_sized(theta) for _, theta in ad.units],
            "chi": [encode_sized(chi) for _, chi in ad.counits],
            "delta_bar": encode_sized(ad.regular_unit),
            "phi_hat": encode_sized(ad.collapse),
            "epsilon_hat": encode_sized(ad.counit_ambient),
        }
    }


# -- workspaces -------------------------------------------------------------------


class Workspace:
    """Named, fully decoded objects over one ground field."""

    def __init__(self, field, objects):
        self.field = field
        self.objects = objects

    def __getitem__(self, name):
        try:
            return self.objects[name]
        except KeyError:
            raise MalformedInput("no object named %r in the workspace" % name) from None

    def get(self, name, cls, what):
        obj = self[name]
        if not isinstance(obj, cls):
            raise MalformedInput("%r is not a %s" % (name, what))
        return obj


def _decode_algebra(field, body, ref, where):
    dim = body.get("dim")
    if not isinstance(dim, int) or dim < 1:
        _fail(where, "dim must be a positive integer")
    mult = _decode_product_tensor(field, body.get("mult"), dim, dim, dim, where + ".mult")
    unit = _column(field, body.get("unit"), dim, where + ".unit")
    return Algebra(field, dim, mult, unit)


def _decode_bimodule(field, body, ref, where):
    left = ref(body.get("left"), Algebra, "algebra")
    right = ref(body.get("right"), Algebra, "algebra")
    dim = body.get("dim")
    if not isinstance(dim, int) or dim < 0:
        _fail(where, "dim must be a nonnegative integer")
    la = _decode_product_tensor(
        field, body.get("left_action"), left.dim, dim, dim, where + ".left_action"
    )
    ra = _decode_product_tensor(
        field, body.get("right_action"), dim, right.dim, dim, where + ".right_action"
    )
    return Bimodule(left, right, dim, la, ra)


def _decode_coring(field, body, ref, where):
    base = ref(body.get("base"), Algebra, "algebra")
    carrier = ref(body.get("carrier"), Bimodule, "bimodule")
    _check_pin(body, carrier, carrier, where)
    cc = tensor_chain((carrier, carrier))
    delta = decode_matrix(field, body.get("delta"), cc.dim, carrier.dim, where + ".delta")
    epsilon = decode_matrix(
        field, body.get("epsilon"), base.dim, carrier.dim, where + ".epsilon"
    )
    return Coring(base, carrier, delta, epsilon)


def _decode_comodule(field, body, ref, where):
    coring = ref(body.get("coring"), Coring, "coring")
    carrier = ref(body.get("carrier"), Bimodule, "bimodule")
    _check_pin(body, carrier, coring.carrier, where)
    chain = tensor_chain((carrier, coring.carrier))
    rho = decode_matrix(field, body.get("rho"), chain.dim, carrier.dim, where + ".rho")
    return RightComodule(coring, carrier, rho)


def _decode_left_comodule(field, body, ref, where):
    coring = ref(body.get("coring"), Coring, "coring")
    carrier = ref(body.get("carrier"), Bimodule, "bimodule")
    _check_pin(body, coring.carrier, carrier, where)
    chain = tensor_chain((coring.carrier, carrier))
    lam = decode_matrix(field, body.get("lam"), chain.dim, carrier.dim, where + ".lam")
    return LeftComodule(coring, carrier, lam)


def _decode_coring_hom(field, body, ref, where):
    source = ref(body.get("source"), Coring, "coring")
    target = ref(body.get("target"), Coring, "coring")
    rho = decode_matrix(
        field, body.get("rho"), target.base.dim, source.base.dim, where + ".rho"
    )
    phi = decode_matrix(field, body.get("phi"), target.dim, source.dim, where + ".phi")
    return CoringHom(source, target, AlgebraHom(source.base, target.base, rho), phi)


def _decode_entwining(field, body, ref, where):
    algebra = ref(body.get("algebra"), Algebra, "algebra")
    coalgebra = ref(body.get("coalgebra"), Coring, "coring")
    psi = decode_matrix(
        field,
        body.get("psi"),
        algebra.dim * coalgebra.dim,
        coalgebra.dim * algebra.dim,
        where + ".psi",
    )
    return Entwining(algebra, coalgebra, psi)


def _decode_entwining_morphism(field, body, ref, where):
    source = ref(body.get("source"), Entwining, "entwining")
    target = ref(body.get("target"), Entwining, "entwining")
    f = decode_matrix(
        field, body.get("f"), target.algebra.dim, source.algebra.dim, where + ".f"
    )
    g = decode_matrix(
        field, body.get("g"), target.coalgebra.dim, source.coalgebra.dim, where + ".g"
    )
    return EntwiningMorphism(
        source, target, AlgebraHom(source.algebra, target.algebra, f), g, check=False
    )


def _decode_certificate(field, body, ref, where):
    kind = body.get("kind")
    if kind not in KINDS:
        _fail(where, "unknown certificate kind %r" % (kind,))
    payload = decode_sized(field, body.get("payload"), where + ".payload")
    dim = body.get("solution_space_dim")
    if not isinstance(dim, int) or dim < 0:
        _fail(where, "solution_space_dim must be a nonnegative integer")
    has_hom = "hom" in body
    has_coring = "coring" in body
    if has_hom == has_coring:
        _fail(where, "exactly one of hom and coring must be referenced")
    if kind in ("omega", "nu_hat"):
        if not has_hom:
            _fail(where, "%s certificates must reference a hom" % kind)
        return Certificate(
            kind, payload,
            hom=ref(body["hom"], CoringHom, "coring hom"),
            solution_space_dim=dim,
        )
    if not has_coring:
        _fail(where, "%s certificates must reference a coring" % kind)
    return Certificate(
        kind, payload,
        coring=ref(body["coring"], Coring, "coring"),
        solution_space_dim=dim,
    )


def _decode_matrix_block(field, body, ref, where):
    return decode_sized(field, body, where)


_DECODERS = {
    "algebra": _decode_algebra,
    "bimodule": _decode_bimodule,
    "coring": _decode_coring,
    "comodule": _decode_comodule,
    "left_comodule": _decode_left_comodule,
    "coring_hom": _decode_coring_hom,
    "entwining": _decode_entwining,
    "entwining_morphism": _decode_entwining_morphism,
    "certificate": _decode_certificate,
    "matrix": _decode_matrix_block,
}


def merge_documents(docs, default_field=None):
    """Combine parsed workspace documents into (field, name -> block)."""
    field = None
    blocks = {}
    for doc in docs:
        if not isinstance(doc, dict):
            raise MalformedInput("workspace document must be a JSON object")
        if "field" in doc:
            try:
                named = field_from_name(doc["field"])
            except (CoringlabError, TypeError) as exc:
                raise MalformedInput("bad field name %r" % (doc["field"],)) from exc
            if field is not None and named != field:
                raise MalformedInput("workspace files disagree on the ground field")
            field = named
        objects = doc.get("objects", {})
        if not isinstance(objects, dict):
            raise MalformedInput("objects must be a JSON object")
        for name, block in objects.items():
            if name in blocks:
                raise MalformedInput("duplicate object name %r" % name)
            blocks[name] = block
    if field is None:
        field = default_field
    if field is None:
        raise MalformedInput(
            "no ground field given (set \"field\" in a file or CORINGLAB_FIELD)"
        )
    return field, blocks


def load_workspace(docs, default_field=None, max_dim=None):
    """Decode documents into live objects, resolving references.

    max_dim, when given, rejects any object whose stated carrier dimension
    exceeds it before tensor systems get allocated.
    """
    field, blocks = merge_documents(docs, default_field)
    memo = {}
    building = []

    def resolve(name):
        if not isinstance(name, str):
            raise MalformedInput("object reference must be a name string, got %r" % (name,))
        if name in memo:
            return memo[name]
        if name not in blocks:
            raise MalformedInput("reference to unknown object %r" % name)
        if name in building:
            raise MalformedInput(
                "cyclic references: %s" % " -> ".join(building + [name])
            )
        block = blocks[name]
        if not isinstance(block, dict) or len(block) != 1:
            raise MalformedInput("object %r must have exactly one type key" % name)
        (kind, body), = block.items()
        decoder = _DECODERS.get(kind)
        if decoder is None:
            raise MalformedInput("object %r has unknown type %r" % (name, kind))
        if not isinstance(body, dict):
            raise MalformedInput("object %r body must be a JSON object" % name)
        if max_dim is not None:
            stated = body.get("dim")
            if isinstance(stated, int) and stated > max_dim:
                raise MalformedInput(
                    "object %r has dimension %d over the --max-dim limit %d"
                    % (name, stated, max_dim)
                )
        building.append(name)
        try:
            def ref(target, cls, what):
                obj = resolve(target)
                if not isinstance(obj, cls):
                    raise MalformedInput(
                        "%s: %r is not a %s" % (name, target, what)
                    )
                return obj

            try:
                obj = decoder(field, body, ref, name)
            except MalformedInput:
                raise
            except (ValidationFailed, CoringlabError) as exc:
                raise MalformedInput("%s: %s" % (name, exc)) from exc
        finally:
            building.pop()
        memo[name] = obj
        return obj

    for name in sorted(blocks):
        resolve(name)
    return Workspace(field, memo)


def load_files(paths, default_field=None, max_dim=None):
    docs = []
    for path in paths:
        try:
            with open(path, "r") as fh:
                docs.append(json.load(fh))
        except OSError as exc:
            raise MalformedInput("cannot read %s: %s" % (path, exc)) from exc
        except json.JSONDecodeError as exc:
            raise MalformedInput("%s is not valid JSON: %s" % (path, exc)) from exc
    return load_workspace(docs, default_field=default_field, max_dim=max_dim)


class WorkspaceBuilder:
    """Accumulates named blocks, reusing names for objects already added."""

    def __init__(self, field):
        self.field = field
        self.blocks = {}
        self._named = []

    def _find(self, obj):
        for seen, name in self._named:
            if type(seen) is type(obj) and seen == obj:
                return name
        return None

    def _fresh(self, hint):
        name = hint
        k = 2
        while name in self.blocks:
            name = "%s_%d" % (hint, k)
            k += 1
        return name

    def add(self, obj, hint):
        """Encode obj (and anything it references) under hint; returns its name."""
        existing = self._find(obj)
        if existing is not None:
            return existing
        name = self._fresh(hint)
        # reserve the name first so recursive references cannot steal it
        self.blocks[name] = None
        self._named.append((obj, name))
        self.blocks[name] = self._encode(obj, name)
        return name

    def _encode(self, obj, name):
        if isinstance(obj, Coring):
            base = self.add(obj.base, name + "_base")
            carrier = self.add(_plain(obj.carrier), name + "_carrier")
            return encode_coring(obj, base, carrier)
        if isinstance(obj, RightComodule) or isinstance(obj, LeftComodule):
            coring = self.add(obj.coring, name + "_coring")
            carrier = self.add(_plain(obj.carrier), name + "_carrier")
            return encode_comodule(obj, coring, carrier)
        if isinstance(obj, CoringHom):
            source = self.add(obj.source, name + "_source")
            target = self.add(obj.target, name + "_target")
            return encode_coring_hom(obj, source, target)
        if isinstance(obj, Entwining):
            algebra = self.add(obj.algebra, name + "_algebra")
            coalgebra = self.add(obj.coalgebra, name + "_coalgebra")
            return encode_entwining(obj, algebra, coalgebra)
        if isinstance(obj, EntwiningMorphism):
            source = self.add(obj.source, name + "_source")
            target = self.add(obj.target, name + "_target")
            return encode_entwining_morphism(obj, source, target)
        if isinstance(obj, Certificate):
            anchor = obj.hom if obj.hom is not None else obj.coring
            ref = self.add(anchor, name + ("_hom" if obj.hom is not None else "_coring"))
            return encode_certificate(obj, ref)
        if isinstance(obj, Bimodule):
            left = self.add(obj.left_algebra, name + "_left")
            right = self.add(obj.right_algebra, name + "_right")
            return encode_bimodule(_plain(obj), left, right)
        if isinstance(obj, Algebra):
            return encode_algebra(obj)
        if isinstance(obj, Matrix):
            return {"matrix": encode_sized(obj)}
        raise CoringlabError("cannot serialize %r" % (obj,))

    def prefer(self, obj, name):
        """Encode obj under a caller-chosen name, even if an equal object is
        already present under another name (sub-references still dedup)."""
        if name in self.blocks:
            return
        self.blocks[name] = None
        self._named.append((obj, name))
        self.blocks[name] = self._encode(obj, name)

    def document(self):
        return {"field": self.field.name, "objects": self.blocks}


def _plain(b):
    """Serialize tensor-space carriers by their actions alone."""
    return Bimodule(b.left_algebra, b.right_algebra, b.dim, b.left_action, b.right_action)


def dump_workspace(objects, field):
    """Encode {name: object} into a canonical workspace document string."""
    builder = WorkspaceBuilder(field)
    for name in objects:
        builder.prefer(objects[name], name)
    return canonical_json(builder.document())
