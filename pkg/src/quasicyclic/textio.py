"""Plain-text formats for fields, subspaces, linearized polynomials and codes.

Field spec::

    2 1 8
    1 0 1 1 1 0 0 0 1

Subspace: ``basis: 0 52 71`` or ``elements: 0 52 71 109 135 141 144``
(exponents of gamma). Linearized polynomial: ``lin q-coeffs: 74 z 103 0``
with ``z`` for a zero coefficient. Code file::

    field: gf256.field            # or inline: field: 2 1 8 ; 1 0 1 1 1 0 0 0 1
    m: 1
    elements: 0 52 71 109 135 141 144
    ...
    claimed: 8 3 1275 4           # n k size d
"""

import os
from importlib import resources

from .codes import Code
from .errors import NotASubspace, ParseError
from .gf import field_new
from .linpoly import LinearizedPoly
from .orbits import ORBIT_CAP
from .subspace import from_elements, span


def _strip(line):
    return line.split("#", 1)[0].strip()


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"bad integer in {what}: {' '.join(tokens)}") from None


def parse_field_spec(text, cap_bits=None):
    lines = [ln for ln in (_strip(x) for x in text.replace(";", "\n").splitlines()) if ln]
    if len(lines) != 2:
        raise ParseError("field spec needs two lines: 'p e n' and the modulus coefficients")
    head = _ints(lines[0].split(), "field header")
    if len(head) != 3:
        raise ParseError("field header must be 'p e n'")
    p, e, n = head
    modulus = _ints(lines[1].split(), "modulus")
    kw = {} if cap_bits is None else {"cap_bits": cap_bits}
    return field_new(p, e, n, modulus, **kw)


def format_field_spec(field, inline=False):
    head = f"{field.p} {field.e} {field.n}"
    body = " ".join(str(c) for c in field.modulus)
    return f"{head} ; {body}" if inline else f"{head}\n{body}\n"


def load_field(path, cap_bits=None):
    with open(path) as fh:
        return parse_field_spec(fh.read(), cap_bits)


def _exponents(field, tokens, allow_zero):
    out = []
    for tok in tokens:
        if tok == "z":
            if not allow_zero:
                raise ParseError("'z' is not allowed in a basis")
            out.append(0)
            continue
        try:
            out.append(field.gamma(int(tok)))
        except ValueError:
            raise ParseError(f"bad exponent {tok!r}") from None
    return out


def parse_subspace(field, text, strict=True):
    """Parse ``basis: ...`` or ``elements: ...``."""
    kind, sep, rest = _strip(text).partition(":")
    if not sep:
        raise ParseError(f"expected 'basis:' or 'elements:', got {text!r}")
    kind = kind.strip()
    tokens = rest.split()
    if kind == "basis":
        return span(field, _exponents(field, tokens, allow_zero=False))
    if kind == "elements":
        return from_elements(field, _exponents(field, tokens, allow_zero=True), strict=strict)
    raise ParseError(f"unknown subspace form {kind!r}")


def format_subspace(V, style="basis"):
    if style == "elements":
        return "elements: " + " ".join(str(e) for e in V.nonzero_exponents())
    return "basis: " + " ".join(str(V.field.dlog(b)) for b in V.basis)


def parse_linpoly(field, text):
    kind, sep, rest = _strip(text).partition(":")
    if kind.strip() != "lin q-coeffs" or not sep:
        raise ParseError("linearized polynomial must start with 'lin q-coeffs:'")
    return LinearizedPoly(field, _exponents(field, rest.split(), allow_zero=True))


def format_linpoly(L):
    log = L.field.log_table
    return "lin q-coeffs: " + " ".join("z" if a == 0 else str(log[a]) for a in L.coeffs)


def bundled_path(name):
    return str(resources.files("quasicyclic") / "data" / name)


def parse_code(text, base_dir=".", mode="expand", cap_bits=None, cap_orbit=ORBIT_CAP):
    """Read a code file. ``mode`` is "expand" (lines are orbit generators) or "literal"."""
    if mode not in ("expand", "literal"):
        raise ParseError(f"unknown mode {mode!r}")
    field = None
    m = 1
    claimed = None
    gens = []
    issues = []
    for raw in text.splitlines():
        line = _strip(raw)
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"cannot parse line {raw!r}")
        if key == "field":
            rest = rest.strip()
            if ";" in rest:
                field = parse_field_spec(rest, cap_bits)
            else:
                path = rest if os.path.isabs(rest) else os.path.join(base_dir, rest)
                field = load_field(path, cap_bits)
        elif key == "m":
            m = _ints(rest.split(), "m")[0]
        elif key == "claimed":
            claimed = tuple(_ints(rest.split(), "claimed"))
            if len(claimed) != 4:
                raise ParseError("claimed needs four integers: n k size d")
        elif key in ("basis", "elements"):
            if field is None:
                raise ParseError("'field:' must come before subspaces")
            try:
                gens.append(parse_subspace(field, line, strict=True))
            except NotASubspace as exc:
                V = parse_subspace(field, line, strict=False)
                issues.append(f"generator {len(gens) + 1}: {exc}")
                gens.append(V)
        else:
            raise ParseError(f"unknown key {key!r}")
    if field is None:
        raise ParseError("missing 'field:' line")
    prov = {"generators": gens, "issues": issues, "mode": mode}
    if mode == "expand":
        return Code.from_generators(field, gens, m, cap=cap_orbit, provenance=prov, claimed=claimed)
    return Code(field, gens, m, provenance=prov, claimed=claimed)


def load_code(path, mode="expand", cap_bits=None, cap_orbit=ORBIT_CAP):
    with open(path) as fh:
        return parse_code(fh.read(), os.path.dirname(os.path.abspath(path)), mode, cap_bits, cap_orbit)


def format_code(code, generators=None, claimed=None, style="basis"):
    """Code file text; ``generators`` defaults to the provenance generators."""
    gens = generators if generators is not None else code.provenance.get("generators", code.words)
    lines = [f"field: {format_field_spec(code.field, inline=True)}", f"m: {code.m}"]
    lines.extend(format_subspace(V, style) for V in gens)
    claimed = claimed if claimed is not None else code.claimed
    if claimed:
        lines.append("claimed: " + " ".join(str(c) for c in claimed))
    return "\n".join(lines) + "\n"
