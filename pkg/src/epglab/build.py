"""Evaluate parsed group expressions into enumerated groups."""

from __future__ import annotations

from .epgcore import max_cyclic_catalog
from .expr import (Atom, CentralProduct, ExprSemanticError, Expression,
                   Product, QuotientByCyc, parse)
from .groups import DEFAULT_CAP, GroupHandle, central_product, direct_product, quotient
from .zoo import build_named


def center_ids(G: GroupHandle) -> list[int]:
    gens = G.generator_ids
    return [x for x in range(G.order) if all(G.commutes(x, g) for g in gens)]


def canonical_central_involution(G: GroupHandle) -> int:
    """Lowest-id central element of order 2; the CP combinator's anchor."""
    for x in sorted(center_ids(G)):
        if G.element_order(x) == 2:
            return x
    raise ExprSemanticError(f"{G.name or 'group'} has no central involution")


def build_expression(expr: Expression, cap: int = DEFAULT_CAP) -> GroupHandle:
    if isinstance(expr, Atom):
        return build_named(expr.name, expr.args, cap=cap)  # zoo names match render()
    if isinstance(expr, Product):
        left = build_expression(expr.left, cap)
        right = build_expression(expr.right, cap)
        return direct_product(left, right, cap=cap, name=expr.render())
    if isinstance(expr, CentralProduct):
        left = build_expression(expr.left, cap)
        right = build_expression(expr.right, cap)
        z1 = canonical_central_involution(left)
        z2 = canonical_central_involution(right)
        return central_product(left, right, z1, z2, cap=cap, name=expr.render())
    if isinstance(expr, QuotientByCyc):
        inner = build_expression(expr.inner, cap)
        catalog = max_cyclic_catalog(inner)
        Q, _ = quotient(inner, list(catalog.cyc), cap=cap, name=expr.render())
        return Q
    raise TypeError(f"unknown expression node {expr!r}")


def build_text(text: str, cap: int = DEFAULT_CAP) -> GroupHandle:
    return build_expression(parse(text), cap=cap)
