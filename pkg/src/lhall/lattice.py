"""Lattice points of lecture hall cones and the theorems about them.

Points are integer maps f on {1, ..., p} stored as tuples (f(1), ..., f(p)).
Membership in a region is always decided on cross-multiplied integers:
f(x)/s(x) <= f(y)/s(y) turns into f(x) s(y) <= f(y) s(x), strict exactly when
the cover descends in labels.  Checking covers is enough, because along any
saturated chain witnessing x < y in labels some cover must descend.
"""

from __future__ import annotations

from .colored import eulerian_polynomial, refined_eulerian, x_order
from .errors import InvalidInputError, ResourceLimitError
from .polys import (Polynomial, compose_linear, gamma_vector, hstar_from_counts,
                    interpolate, is_palindromic)
from .posets import (LabeledPoset, _bits, _cap, disjoint_union,
                     linear_extensions, make_chain, ordinal_sum_of_antichains,
                     sign_rank, validate_smap)
from .reports import VerificationReport
from .roots import interlacing_failure, is_real_rooted

DEFAULT_MAX_POINTS = 2_000_000


def _ceil_div(a, b):
    return -((-a) // b)


def enumerate_points(P, s, lo, hi, max_points=None):
    """Yield the (P, s)-partition points f with lo[x] <= f(x) <= hi[x].

    Points come out in lexicographic order of (f(1), ..., f(p)).  Values are
    assigned in label order; a cover toward a smaller label is then always a
    weak lower bound when it goes up in P and a strict upper bound when it
    goes down, and the remaining constraints wait for the later endpoint.
    """
    s = validate_smap(P, s)
    if len(lo) != P.p or len(hi) != P.p:
        raise InvalidInputError("lo and hi must give one bound per element")
    limit = _cap(max_points, "LHALL_MAX_POINTS", DEFAULT_MAX_POINTS)
    p = P.p
    lower_of = [[] for _ in range(p + 1)]  # u -< x with u < x: weak lower
    upper_of = [[] for _ in range(p + 1)]  # x -< v with v < x: strict upper
    for u, v in P.covers:
        if u < v:
            lower_of[v].append(u)
        else:
            upper_of[u].append(v)
    f = [0] * (p + 1)
    count = 0

    def rec(x):
        nonlocal count
        if x > p:
            count += 1
            if count > limit:
                raise ResourceLimitError(
                    f"more than {limit} lattice points; raise LHALL_MAX_POINTS")
            yield tuple(f[1:])
            return
        a, b = lo[x - 1], hi[x - 1]
        sx = s[x - 1]
        for u in lower_of[x]:
            v = _ceil_div(f[u] * sx, s[u - 1])
            if v > a:
                a = v
        for u in upper_of[x]:
            v = _ceil_div(f[u] * sx, s[u - 1]) - 1
            if v < b:
                b = v
        for val in range(a, b + 1):
            f[x] = val
            yield from rec(x + 1)

    yield from rec(1)


def partitions_leq(P, s, n, max_points=None):
    """Points of the cone with f(x)/s(x) <= n, i.e. 0 <= f(x) <= n s(x)."""
    s = validate_smap(P, s)
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    return enumerate_points(P, s, [0] * P.p, [n * v for v in s], max_points)


def partitions_lt(P, s, n, max_points=None):
    """Points with f(x)/s(x) < n; empty when n = 0."""
    s = validate_smap(P, s)
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    return enumerate_points(P, s, [0] * P.p, [n * v - 1 for v in s], max_points)


def partitions_pos_leq(P, s, n, max_points=None):
    """Strictly positive points with f(x)/s(x) <= n."""
    s = validate_smap(P, s)
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    return enumerate_points(P, s, [1] * P.p, [n * v for v in s], max_points)


def cone_points(P, s, qmax, max_points=None):
    """Nonnegative points whose digit q(f) stays within qmax componentwise.

    q(f)(x) = f(x) // s(x) <= qmax is the same as f(x) <= (qmax + 1) s(x) - 1.
    """
    s = validate_smap(P, s)
    if qmax < 0:
        raise InvalidInputError("qmax must be nonnegative")
    return enumerate_points(P, s, [0] * P.p,
                            [(qmax + 1) * v - 1 for v in s], max_points)


def is_partition_point(P, s, f):
    """Whether f satisfies every cover constraint of (P, s)."""
    s = validate_smap(P, s)
    if len(f) != P.p:
        raise InvalidInputError(f"point has {len(f)} coordinates for p = {P.p}")
    for x, y in P.covers:
        lhs = f[x - 1] * s[y - 1]
        rhs = f[y - 1] * s[x - 1]
        if lhs > rhs or (x > y and lhs == rhs):
            return False
    return True


def qr_decompose(f, s, primed=False):
    """Componentwise digits of f against s, as a (quotients, remainders) pair.

    Unprimed: f = q s + r with 0 <= r < s and f >= 0.  Primed: remainders
    shifted into {1, ..., s}, which needs f >= 1 componentwise.
    """
    qs, rs = [], []
    for v, sv in zip(f, s):
        if primed:
            if v < 1:
                raise InvalidInputError("primed digits need positive values")
            q, r = divmod(v - 1, sv)
            r += 1
        else:
            if v < 0:
                raise InvalidInputError("digits need nonnegative values")
            q, r = divmod(v, sv)
        qs.append(q)
        rs.append(r)
    return tuple(qs), tuple(rs)


def ehrhart_counts(P, s, nmax, max_points=None):
    """[number of points with f(x) <= n s(x) for all x] for n = 0, ..., nmax.

    One depth-first pass in topological order: every constraint from an
    already assigned element is then a lower bound, the prefix knows the
    least n it fits under, and the final element contributes a closed-form
    value count per n instead of being enumerated.
    """
    s = validate_smap(P, s)
    if nmax < 0:
        raise InvalidInputError("nmax must be nonnegative")
    p = P.p
    counts = [0] * (nmax + 1)
    if p == 0:
        return [1] * (nmax + 1)
    limit = _cap(max_points, "LHALL_MAX_POINTS", DEFAULT_MAX_POINTS)
    order = P._topo
    pos = {x: i for i, x in enumerate(order)}
    lower_srcs = [[] for _ in range(p)]
    for u, v in P.covers:
        lower_srcs[pos[v]].append((u, u < v))  # weak when labels ascend
    f = [0] * (p + 1)
    visited = 0

    def rec(i, m_pref):
        nonlocal visited
        visited += 1
        if visited > limit:
            raise ResourceLimitError(
                f"more than {limit} enumeration nodes; raise LHALL_MAX_POINTS")
        x = order[i]
        sx = s[x - 1]
        a = 0
        for u, weak in lower_srcs[i]:
            v = _ceil_div(f[u] * sx, s[u - 1]) if weak else f[u] * sx // s[u - 1] + 1
            if v > a:
                a = v
        if i == p - 1:
            for n in range(max(m_pref, _ceil_div(a, sx)), nmax + 1):
                counts[n] += n * sx - a + 1
            return
        for val in range(a, nmax * sx + 1):
            m2 = max(m_pref, _ceil_div(val, sx))
            if m2 > nmax:
                break
            f[x] = val
            rec(i + 1, m2)

    rec(0, 0)
    return counts


def eulerian_via_ehrhart(P, s, max_points=None):
    """Eulerian polynomial recovered from lattice point counts alone.

    Counts for n = 0, ..., p + 2 leave two spare values beyond what the
    numerator needs, so a non-polynomial count sequence cannot slip through.
    """
    s = validate_smap(P, s)
    counts = ehrhart_counts(P, s, P.p + 2, max_points)
    return hstar_from_counts(counts, P.p)


def bij_u(f, rho):
    """g with g(x*) = f(x) + rho(x), where x* = p + 1 - x."""
    p = len(f)
    g = [0] * p
    for x in range(1, p + 1):
        g[p - x] = f[x - 1] + rho[x - 1]
    return tuple(g)


def bij_eta(g, rho):
    """Inverse shift: f(x) = g(x*) - rho(x)."""
    p = len(g)
    f = [0] * p
    for x in range(1, p + 1):
        f[x - 1] = g[p - x] - rho[x - 1]
    return tuple(f)


def verify_bijection(P, n, max_points=None):
    """Check the rank shift against the dual poset at level n.

    Needs P sign-ranked with nonnegative rank function; uses s = rho + 1.
    Confirms that u(f)(x*) = f(x) + rho(x) lands in the strictly-below-(n+1)
    set of the dual, hits it bijectively, and is undone by the eta shift.
    """
    info = sign_rank(P)
    if not info.ranked or any(v < 0 for v in info.rho):
        return VerificationReport(
            "BIJ", "skip",
            reason="needs a sign-ranked poset with nonnegative rank function")
    rho = info.rho
    s = tuple(v + 1 for v in rho)
    dual = P.dual()
    sd = tuple(reversed(s))
    target = set(partitions_lt(dual, sd, n + 1, max_points))
    images = set()
    compared = 0
    for f in partitions_leq(P, s, n, max_points):
        compared += 1
        g = bij_u(f, rho)
        if g not in target:
            return VerificationReport(
                "BIJ", "fail", compared=compared,
                witness={"f": list(f), "image": list(g)},
                reason="image leaves the dual region")
        if g in images:
            return VerificationReport(
                "BIJ", "fail", compared=compared,
                witness={"image": list(g)}, reason="two points share an image")
        images.add(g)
        if bij_eta(g, rho) != f:
            return VerificationReport(
                "BIJ", "fail", compared=compared,
                witness={"f": list(f)}, reason="eta does not undo u")
    if len(images) != len(target):
        return VerificationReport(
            "BIJ", "fail", compared=compared,
            witness={"images": len(images), "target": len(target)},
            reason="image misses part of the dual region")
    return VerificationReport("BIJ", "pass", caps={"n": n}, compared=compared,
                              details={"points": compared})


def verify_cone_decomposition(P, s, bound, max_points=None):
    """Check that the chains of linear extensions tile the bounded region.

    Every point with f(x)/s(x) <= bound must lie in the region of exactly one
    labeled chain coming from a linear extension of P.
    """
    s = validate_smap(P, s)
    points = list(partitions_leq(P, s, bound, max_points))
    seen = {}
    total = 0
    extensions = 0
    for pi in linear_extensions(P):
        extensions += 1
        chain = make_chain(pi)
        for f in partitions_leq(chain, s, bound, max_points):
            seen[f] = seen.get(f, 0) + 1
            total += 1
    if total != len(points):
        return VerificationReport(
            "CONE", "fail", caps={"bound": bound},
            witness={"chain_total": total, "poset_total": len(points)},
            reason="chain regions do not add up to the poset region")
    for f in points:
        if seen.get(f, 0) != 1:
            return VerificationReport(
                "CONE", "fail", caps={"bound": bound},
                witness={"f": list(f), "covered": seen.get(f, 0)},
                reason="point not covered exactly once")
    return VerificationReport("CONE", "pass", caps={"bound": bound},
                              compared=len(points),
                              details={"extensions": extensions})


def verify_disjoint_union_product(P, sP, Q, sQ, nmax, max_points=None):
    """Counts of a disjoint union must be the product of the factors' counts."""
    sP = validate_smap(P, sP)
    sQ = validate_smap(Q, sQ)
    R = disjoint_union(P, Q)
    a = ehrhart_counts(P, sP, nmax, max_points)
    b = ehrhart_counts(Q, sQ, nmax, max_points)
    c = ehrhart_counts(R, sP + sQ, nmax, max_points)
    for n in range(nmax + 1):
        if a[n] * b[n] != c[n]:
            return VerificationReport(
                "UNION", "fail", caps={"nmax": nmax},
                witness={"n": n, "product": a[n] * b[n], "union": c[n]},
                reason="count mismatch")
    return VerificationReport("UNION", "pass", caps={"nmax": nmax},
                              compared=nmax + 1)


def verify_recipr(P, max_points=None):
    """Palindromicity and the Ehrhart functional equation in the rank regime.

    Needs P sign-ranked with nonnegative rank function; s = rho + 1.  Checks
    t^(p-1) A(1/t) = A(t), and that the degree-p interpolation of the counts
    reproduces the two extra count values and satisfies
    (-1)^p i(-t) = i(t - 2).
    """
    info = sign_rank(P)
    if not info.ranked or any(v < 0 for v in info.rho):
        return VerificationReport(
            "RECIPR", "skip",
            reason="needs a sign-ranked poset with nonnegative rank function")
    s = tuple(v + 1 for v in info.rho)
    p = P.p
    A = eulerian_polynomial(P, s)
    if not is_palindromic(A, p - 1):
        return VerificationReport(
            "RECIPR", "fail", witness={"eulerian": list(A.coeffs)},
            reason=f"Eulerian polynomial is not palindromic with center {p - 1}")
    counts = ehrhart_counts(P, s, p + 2, max_points)
    poly = interpolate(list(enumerate(counts[:p + 1])))
    for n in (p + 1, p + 2):
        if poly(n) != counts[n]:
            return VerificationReport(
                "RECIPR", "fail",
                witness={"n": n, "count": counts[n], "interpolated": poly(n)},
                reason="counts are not polynomial of degree p")
    lhs = compose_linear(poly, -1, 0) * ((-1) ** p)
    rhs = compose_linear(poly, 1, -2)
    if lhs != rhs:
        return VerificationReport(
            "RECIPR", "fail",
            witness={"lhs": list(lhs.coeffs), "rhs": list(rhs.coeffs)},
            reason="functional equation fails")
    return VerificationReport("RECIPR", "pass", compared=p + 3,
                              details={"eulerian": A, "counts": counts})


def verify_ordinal_interlacing(sizes, block_s, max_count=None):
    """Interlacing of the refined Eulerian family over stacked antichains.

    sizes lists the antichain block sizes bottom to top, block_s one color
    count per block (s is constant on blocks).  The family split by the first
    letter, read in X order, must be interlacing; its sum is the Eulerian
    polynomial and must be real-rooted.
    """
    sizes = tuple(sizes)
    block_s = tuple(block_s)
    if len(block_s) != len(sizes):
        raise InvalidInputError("need one color count per block")
    P = ordinal_sum_of_antichains(sizes)
    s = []
    for size, k in zip(sizes, block_s):
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise InvalidInputError("color counts must be positive integers")
        s.extend([k] * size)
    s = tuple(s)
    refined = refined_eulerian(P, s, max_count)
    order = x_order(P, s)
    family = [refined[g] for g in order]
    caps = {"blocks": list(sizes), "s": list(block_s)}
    try:
        failure = interlacing_failure(family)
    except InvalidInputError as e:
        return VerificationReport("ORDINAL", "fail", caps=caps, reason=str(e))
    if failure is not None:
        i, j = failure
        return VerificationReport(
            "ORDINAL", "fail", caps=caps,
            witness={"pair": [list(order[i]), list(order[j])],
                     "polys": [family[i], family[j]]},
            reason="family member fails to interleave a later one")
    total = Polynomial()
    for member in family:
        total = total + member
    if total != eulerian_polynomial(P, s):
        return VerificationReport(
            "ORDINAL", "fail", caps=caps,
            reason="refined family does not sum to the Eulerian polynomial")
    if not is_real_rooted(total):
        return VerificationReport(
            "ORDINAL", "fail", caps=caps, witness={"eulerian": total},
            reason="Eulerian polynomial is not real-rooted")
    return VerificationReport("ORDINAL", "pass", caps=caps,
                              compared=len(family),
                              details={"eulerian": total, "family": family})


def all_labeled_posets(p, max_p=None):
    """Yield every partial order on {1, ..., p}, each exactly once.

    Element k is attached to each poset on {1, ..., k-1} by choosing the set
    of elements below k (a down set) and above k (an up set) with every
    member of the first related to every member of the second.  Distinct
    choices give distinct posets, so nothing needs deduplication.  The counts
    for p = 0, 1, 2, 3, 4, 5 are 1, 1, 3, 19, 219, 4231.
    """
    limit = _cap(max_p, "LHALL_MAX_POSET_ENUM", 6)
    if p > limit:
        raise ResourceLimitError(f"p = {p} exceeds the poset enumeration cap {limit}")
    states = [()]  # tuples of strictly-above masks, one per element
    for k in range(1, p + 1):
        n = k - 1
        full = (1 << n) - 1
        nxt = []
        for up in states:
            down = [0] * n
            for x in range(1, n + 1):
                for y in _bits(up[x - 1]):
                    down[y - 1] |= 1 << (x - 1)
            downsets = [S for S in range(full + 1)
                        if all(down[x - 1] & ~S == 0 for x in _bits(S))]
            upsets = [S for S in range(full + 1)
                      if all(up[x - 1] & ~S == 0 for x in _bits(S))]
            bit_k = 1 << (k - 1)
            for B in downsets:
                for A in upsets:
                    if B & A:
                        continue
                    if any(A & ~up[b - 1] for b in _bits(B)):
                        continue
                    new_up = tuple(
                        (up[x - 1] | bit_k) if B >> (x - 1) & 1 else up[x - 1]
                        for x in range(1, n + 1)) + (A,)
                    nxt.append(new_up)
        states = nxt
    for up in states:
        covers = set()
        for x in range(1, p + 1):
            for y in _bits(up[x - 1]):
                if not any(up[z - 1] >> (y - 1) & 1 for z in _bits(up[x - 1])):
                    covers.add((x, y))
        yield LabeledPoset(p, frozenset(covers))


def sign_ranked_corpus(pmax):
    """All (P, rho) with 1 <= p <= pmax, P sign-ranked and rho nonnegative."""
    out = []
    for p in range(1, pmax + 1):
        for P in all_labeled_posets(p):
            info = sign_rank(P)
            if info.ranked and all(v >= 0 for v in info.rho):
                out.append((P, info.rho))
    return out


def scan_gamma(pmax, max_count=None):
    """Gamma vectors of Eulerian polynomials across the sign-ranked corpus.

    For every sign-ranked P with nonnegative rank function on at most pmax
    elements, take s = rho + 1 and expand A in the basis t^k (1+t)^(p-1-2k).
    Instances with a negative entry are split by regime: rank values within
    {0, 1}, where positivity is proved, versus the general nonnegative case,
    where a negative entry would refute an open conjecture rather than this
    implementation.  Every instance contributes a full record so callers can
    stream the scan; a non-palindromic A always counts against the proven
    regime because the symmetry itself is a theorem here.
    """
    checked = 0
    records = []
    proven_failures = []
    conjecture_failures = []
    for P, rho in sign_ranked_corpus(pmax):
        s = tuple(v + 1 for v in rho)
        A = eulerian_polynomial(P, s, max_count)
        proven = set(rho) <= {0, 1}
        palindromic = is_palindromic(A, P.p - 1)
        gam = gamma_vector(A, P.p - 1) if palindromic else None
        nonneg = palindromic and all(g >= 0 for g in gam)
        checked += 1
        rec = {"p": P.p, "covers": sorted(P.covers), "rho": list(rho),
               "eulerian": A, "palindromic": palindromic,
               "gamma": None if gam is None else list(gam),
               "gamma_nonnegative": nonneg,
               "regime": "proven" if proven else "general"}
        records.append(rec)
        if not palindromic:
            # Reciprocity guarantees the symmetry whenever s = rho + 1, so a
            # miss here is an implementation defect, never an open question.
            proven_failures.append(rec)
        elif not nonneg:
            (proven_failures if proven else conjecture_failures).append(rec)
    return {
        "checked": checked,
        "records": records,
        "proven_regime_failures": proven_failures,
        "conjecture_failures": conjecture_failures,
    }
