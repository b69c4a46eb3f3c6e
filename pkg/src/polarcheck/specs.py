"""Parsing of group names and the subgroup mini-language.

Groups are named family+n, e.g. 'su3', 'so8', 'sp2'.  Subgroups of L x L
are written as:

    delta(sigma=id|outer_su|outer_so_even)
    product(h1=<factor>, h2=<factor>)
    span(file=path)                       # block-diagonal matrices in l(+)l

Factors (subalgebras of l) are resolved by name against the built-in
embedding catalog (full, zero, cartan, g2, spin7, spin9, soK, soAsoB, suK,
uK, spK, spKsp1, spKu1, s_u_u1) or as span(file=path).
"""

import re

import numpy as np

from . import embeddings as emb
from .catalog import so_in_su
from .errors import InvalidInputError
from .lie_algebras import build_classical, identity_automorphism, \
    make_automorphism
from .spanfile import parse_span_file
from .subalgebras import (Subalgebra, diagonal_sigma, full_subalgebra,
                          product, zero_subalgebra)

_GROUP_RE = re.compile(r"^(su|so|sp|u)(\d+)$")
_CALL_RE = re.compile(r"^([a-z_0-9]+)\((.*)\)$", re.S)


def parse_group(name, form_scale=1.0):
    """Resolve a group name like 'su3' to its Lie algebra."""
    m = _GROUP_RE.match(name.strip().lower())
    if not m:
        raise InvalidInputError(
            f"cannot parse group {name!r} (expected e.g. su3, so8, sp2)")
    algebra = build_classical(m.group(1), int(m.group(2)))
    if form_scale != 1.0:
        algebra = algebra.with_scaled_form(form_scale)
    return algebra


def _split_args(body):
    """Split 'k1=v1, k2=v2' at top-level commas, respecting parentheses."""
    parts, depth, current = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if current:
        parts.append("".join(current))
    args = {}
    for part in parts:
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise InvalidInputError(f"expected key=value, got {part!r}")
        key, value = part.split("=", 1)
        args[key.strip()] = value.strip()
    return args


def _span_factor(path, algebra, tol):
    size, mats = parse_span_file(path)
    if size != algebra.ambient_size:
        raise InvalidInputError(
            f"span file ambient size {size} does not match "
            f"{algebra.name} (size {algebra.ambient_size})")
    return Subalgebra.from_matrices(algebra, mats, tol, name=f"span({path})")


def resolve_factor(spec, algebra, tol):
    """Resolve a subalgebra-of-l spec string."""
    spec = spec.strip()
    call = _CALL_RE.match(spec)
    if call and call.group(1) == "span":
        args = _split_args(call.group(2))
        if set(args) != {"file"}:
            raise InvalidInputError("span takes exactly file=...")
        return _span_factor(args["file"], algebra, tol)
    name = spec.lower()
    if name == "full":
        return full_subalgebra(algebra, tol)
    if name == "zero":
        return zero_subalgebra(algebra)
    if name == "cartan":
        return emb.cartan_subalgebra(algebra, tol)
    if name == "g2":
        return emb.g2_in_so7(algebra, tol)
    if name in ("spin7", "spin9"):
        return emb.spin_subalgebra(algebra, int(name[4:]), tol)
    if name == "s_u_u1":
        return emb.s_u_u1_in_su(algebra, tol)
    m = re.match(r"^so(\d+)so(\d+)$", name)
    if m:
        return emb.block_so(algebra, [int(m.group(1)), int(m.group(2))], tol)
    m = re.match(r"^sp(\d+)(sp1|u1)?$", name)
    if m:
        k = int(m.group(1))
        if algebra.family == "su":
            if m.group(2) or algebra.n != 2 * k:
                raise InvalidInputError(f"{name} does not embed in {algebra.name}")
            return emb.sp_in_su(algebra, tol)
        right = {"sp1": "sp1", "u1": "u1", None: "none"}[m.group(2)]
        if algebra.family != "so" or algebra.n != 4 * k:
            raise InvalidInputError(f"{name} does not embed in {algebra.name}")
        return emb.sp_in_so(algebra, tol, right_factor=right)
    m = re.match(r"^so(\d+)$", name)
    if m:
        k = int(m.group(1))
        if algebra.family == "su":
            if k != algebra.n:
                raise InvalidInputError(
                    f"so({k}) resolves to the real points of su({algebra.n}) "
                    "and needs matching size")
            return so_in_su(algebra, tol)
        return emb.corner_so(algebra, k, tol)
    m = re.match(r"^su(\d+)$", name)
    if m:
        k = int(m.group(1))
        if algebra.family == "su":
            return emb.su_corner_in_su(algebra, k, tol)
        if algebra.family == "so" and algebra.n == 2 * k:
            return emb.u_in_so(algebra, tol, special=True)
        raise InvalidInputError(f"su({k}) does not embed in {algebra.name}")
    m = re.match(r"^u(\d+)$", name)
    if m:
        k = int(m.group(1))
        if algebra.family == "so" and algebra.n == 2 * k:
            return emb.u_in_so(algebra, tol)
        raise InvalidInputError(f"u({k}) does not embed in {algebra.name}")
    raise InvalidInputError(f"unknown subalgebra spec {spec!r}")


def resolve_subgroup(spec, algebra, tol):
    """Resolve a subgroup-of-LxL spec string to a Subalgebra of l(+)l."""
    spec = spec.strip()
    call = _CALL_RE.match(spec)
    if not call:
        raise InvalidInputError(
            f"cannot parse subgroup spec {spec!r}; expected delta(...), "
            "product(...) or span(file=...)")
    head, body = call.group(1), call.group(2)
    args = _split_args(body)
    if head == "delta":
        sigma_name = args.pop("sigma", "id")
        if args:
            raise InvalidInputError(f"delta got unexpected keys {sorted(args)}")
        if sigma_name == "id":
            sigma = identity_automorphism(algebra)
        else:
            sigma = make_automorphism(algebra, sigma_name, tol=tol)
        return diagonal_sigma(algebra, sigma, tol)
    if head == "product":
        if set(args) != {"h1", "h2"}:
            raise InvalidInputError("product takes exactly h1=..., h2=...")
        h1 = resolve_factor(args["h1"], algebra, tol)
        h2 = resolve_factor(args["h2"], algebra, tol)
        return product(h1, h2, tol)
    if head == "span":
        if set(args) != {"file"}:
            raise InvalidInputError("span takes exactly file=...")
        size, mats = parse_span_file(args["file"])
        double = algebra.double()
        if size != double.ambient_size:
            raise InvalidInputError(
                f"span file ambient size {size} must be "
                f"{double.ambient_size} (block-diagonal pairs) for l(+)l")
        return Subalgebra.from_matrices(double, mats, tol, name="span(file)")
    raise InvalidInputError(f"unknown subgroup constructor {head!r}")
