"""Substitution, degrees and binary forms."""
from ..errors import RingMismatchError
from . import univariate as uni
from .coeffs import ZERO


def substitute(f, images, target=None):
    """Replace each variable of ``f`` by its image.

    ``images`` maps variable names to polynomials of one common ring (or to
    rationals). Variables of ``f`` that do not occur in any term need no image.
    """
    used = f.used_variables()
    missing = [v for v in used if v not in images]
    if missing:
        raise KeyError(f"no image for variable {missing[0]!r}")
    if target is None:
        rings = {p.ring for p in images.values() if hasattr(p, "ring")}
        if len(rings) > 1:
            raise RingMismatchError("images live in different rings")
        target = rings.pop() if rings else f.ring
    values = []
    for name in f.ring.variables:
        img = images.get(name)
        if img is None:
            values.append(None)
        elif hasattr(img, "ring"):
            if img.ring != target:
                raise RingMismatchError(f"image of {name} is not in {target}")
            values.append(img)
        else:
            values.append(target.constant(img))
    powers = [{} for _ in values]
    result = target.zero
    for m, c in f.as_dict().items():
        term = target.constant(c)
        for i, e in enumerate(m):
            if e:
                cache = powers[i]
                if e not in cache:
                    cache[e] = values[i] ** e
                term = term * cache[e]
        result = result + term
    return result


def homogeneous_degree(f, component=0):
    """Weighted degree of ``f`` in one grading component; ``None`` if inhomogeneous."""
    return f.homogeneous_degree(component)


def is_binary_form(f):
    return f.ring.nvars == 2 and f.is_homogeneous() and (
        not f or f.homogeneous_degree(0) is not None)


def _dehomogenize(f):
    """``f(s, 1)`` as a dense list plus the form's degree."""
    deg = f.total_degree
    coeffs = [ZERO] * (deg + 1)
    for (a, b), c in f.as_dict().items():
        if a + b != deg:
            raise ValueError(f"{f} is not a binary form")
        coeffs[a] = c
    return uni.trim(coeffs), deg


def binary_form_to_univariate(f):
    """Dehomogenize at t = 1; returns ``(coefficients, degree, t_order)``."""
    coeffs, deg = _dehomogenize(f)
    return coeffs, deg, deg - uni.degree(coeffs)


def univariate_to_binary_form(coeffs, ring, t_power=0):
    """Homogenize ``coeffs(s)`` and multiply by ``t**t_power``."""
    deg = uni.degree(coeffs)
    return ring.from_dict({(i, deg - i + t_power): c for i, c in enumerate(coeffs) if c})


def binary_form_gcd(forms):
    """Monic gcd of binary forms (leading coefficient 1 under lex with s > t)."""
    forms = [f for f in forms if f]
    if not forms:
        raise ValueError("gcd of zero forms is undefined")
    ring = forms[0].ring
    if ring.nvars != 2:
        raise ValueError("binary forms live in a two-variable ring")
    g = None
    t_order = None
    for f in forms:
        if f.ring != ring:
            raise RingMismatchError("forms in different rings")
        coeffs, _, order = binary_form_to_univariate(f)
        t_order = order if t_order is None else min(t_order, order)
        g = uni.monic(coeffs) if g is None else uni.gcd(g, coeffs)
    return univariate_to_binary_form(g, ring, t_order)


def binary_forms_divide(g, f):
    """True when the binary form ``g`` divides ``f``."""
    if not f:
        return True
    gc, _, gt = binary_form_to_univariate(g)
    fc, _, ft = binary_form_to_univariate(f)
    return gt <= ft and not uni.divmod_(fc, gc)[1]


__all__ = ["substitute", "homogeneous_degree", "binary_form_gcd", "is_binary_form",
           "binary_forms_divide"]
