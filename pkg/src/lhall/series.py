"""Truncated multivariate power series with exact coefficients.

A SeriesContext fixes an ordered tuple of variable names and an inclusive
exponent cap per variable.  A Series over that context maps exponent tuples
to nonzero coefficients; any monomial exceeding a cap in some variable is
discarded on sight.  Since all series handled here have nonnegative
exponents everywhere, dropped monomials can never influence the retained
window, so two series built under the same context agree on that window
exactly or differ at a genuine mismatch.
"""

from __future__ import annotations

from .errors import InternalCheckError, InvalidInputError


def _check_exact(coeff):
    if isinstance(coeff, (float, complex)):
        raise InvalidInputError("coefficients must be exact rationals")
    return coeff


class SeriesContext:
    """Ordered variables with inclusive exponent caps."""

    def __init__(self, caps):
        names = tuple(caps)
        for name in names:
            if not isinstance(name, str) or not name:
                raise InvalidInputError(f"variable name {name!r} must be a string")
        for name in names:
            cap = caps[name]
            if not isinstance(cap, int) or isinstance(cap, bool) or cap < 0:
                raise InvalidInputError(f"cap for {name} must be a nonnegative integer")
        self.names = names
        self.caps = tuple(caps[n] for n in names)
        self.index = {n: i for i, n in enumerate(names)}
        self.zero_key = (0,) * len(names)

    def key_of(self, exps):
        key = [0] * len(self.names)
        for name, e in exps.items():
            if name not in self.index:
                raise InvalidInputError(f"unknown variable {name!r}")
            if not isinstance(e, int) or isinstance(e, bool):
                raise InvalidInputError(f"exponent for {name} must be an integer")
            key[self.index[name]] = e
        return tuple(key)

    def in_cap(self, key):
        return all(e <= c for e, c in zip(key, self.caps))

    def zero(self):
        return Series(self)

    def one(self):
        return Series(self, {self.zero_key: 1})

    def monomial(self, exps, coeff=1):
        """coeff times the stated monomial; silently zero when over a cap."""
        key = self.key_of(exps)
        if any(e < 0 for e in key):
            raise InvalidInputError("monomials cannot carry negative exponents")
        if _check_exact(coeff) == 0 or not self.in_cap(key):
            return Series(self)
        return Series(self, {key: coeff})

    def geometric(self, exps):
        """1 + m + m^2 + ... for the monomial m, out to the caps.

        m must have at least one positive exponent and none negative, so the
        expansion leaves the retained window after finitely many powers.
        """
        key = self.key_of(exps)
        if any(e < 0 for e in key):
            raise InvalidInputError("geometric expansion needs nonnegative exponents")
        if not any(key):
            raise InvalidInputError("geometric expansion of 1 diverges")
        terms = {}
        power = self.zero_key
        while self.in_cap(power):
            terms[power] = 1
            power = tuple(a + b for a, b in zip(power, key))
        return Series(self, terms)


class Series:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = dict(terms) if terms else {}

    def _add_term(self, key, coeff):
        # callers guarantee key is in cap
        new = self.terms.get(key, 0) + coeff
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    def __eq__(self, other):
        return (isinstance(other, Series) and self.ctx is other.ctx
                and self.terms == other.terms)

    def __add__(self, other):
        self._same_ctx(other)
        out = Series(self.ctx, self.terms)
        for key, c in other.terms.items():
            out._add_term(key, c)
        return out

    def __neg__(self):
        return Series(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        self._same_ctx(other)
        out = Series(self.ctx, self.terms)
        for key, c in other.terms.items():
            out._add_term(key, -c)
        return out

    def __mul__(self, other):
        self._same_ctx(other)
        caps = self.ctx.caps
        out = Series(self.ctx)
        terms = out.terms
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                if all(e <= cap for e, cap in zip(key, caps)):
                    new = terms.get(key, 0) + c1 * c2
                    if new:
                        terms[key] = new
                    else:
                        del terms[key]
        return out

    def scale(self, coeff):
        if _check_exact(coeff) == 0:
            return Series(self.ctx)
        return Series(self.ctx, {k: c * coeff for k, c in self.terms.items()})

    def mul_monomial(self, exps, coeff=1):
        """Multiply by coeff * monomial; exponents may be negative.

        A shift below zero would mean the series was not a power series after
        all, which is an internal invariant violation here, not bad input.
        """
        delta = self.ctx.key_of(exps)
        if coeff == 0:
            return Series(self.ctx)
        caps = self.ctx.caps
        out = Series(self.ctx)
        for key, c in self.terms.items():
            shifted = tuple(a + b for a, b in zip(key, delta))
            if any(e < 0 for e in shifted):
                raise InternalCheckError("monomial shift produced a negative exponent")
            if all(e <= cap for e, cap in zip(shifted, caps)):
                out._add_term(shifted, c * coeff)
        return out

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _same_ctx(self, other):
        if not isinstance(other, Series) or other.ctx is not self.ctx:
            raise InvalidInputError("series arithmetic needs one shared context")

    def __repr__(self):
        return f"Series({len(self.terms)} terms over {self.ctx.names})"


def first_mismatch(a, b):
    """Smallest exponent tuple where the two series disagree, or None.

    Returns (exponents-as-dict, coefficient-in-a, coefficient-in-b).
    """
    a._same_ctx(b)
    keys = set(a.terms) | set(b.terms)
    for key in sorted(keys):
        ca = a.terms.get(key, 0)
        cb = b.terms.get(key, 0)
        if ca != cb:
            names = a.ctx.names
            exps = {names[i]: e for i, e in enumerate(key) if e}
            return exps, ca, cb
    return None


def to_records(series):
    """Deterministic [(nonzero-exponent dict, coefficient)] listing."""
    names = series.ctx.names
    out = []
    for key in sorted(series.terms):
        exps = {names[i]: e for i, e in enumerate(key) if e}
        out.append((exps, series.terms[key]))
    return out


def substitute(series, target_ctx, var_map):
    """Map each variable to a monomial of another context and push terms through.

    var_map sends every source variable name to an exponent dict over the
    target context; terms leaving the target caps are dropped.
    """
    images = []
    for name in series.ctx.names:
        if name not in var_map:
            raise InvalidInputError(f"substitute needs an image for {name!r}")
        images.append(target_ctx.key_of(var_map[name]))
    out = Series(target_ctx)
    width = len(target_ctx.names)
    for key, c in series.terms.items():
        acc = [0] * width
        for e, img in zip(key, images):
            if e:
                for i in range(width):
                    acc[i] += e * img[i]
        shifted = tuple(acc)
        if target_ctx.in_cap(shifted):
            out._add_term(shifted, c)
    return out
