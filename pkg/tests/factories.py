"""Random instances and a dense evaluation oracle for the suites."""

import random

from algebra.errors import RetryBudgetExhaustedError
from algebra.linalg import rank
from algebra.liaison import ci_envelope
from algebra.polycore import AffinePoint, Field, PolyRing, evaluate
from algebra.scheme import SchemeComponent, scheme_from_components

PRIME = 32003


def random_points(rng, count, bound=3, n=2):
    """Distinct affine points with integer coordinates in [-bound, bound]."""
    seen = set()
    while len(seen) < count:
        seen.add(tuple(rng.randint(-bound, bound) for _ in range(n)))
    return sorted(seen)


def random_instance(seed, field="Q", double=False, count=None):
    """
    4 to 10 points of P^2; with ``double`` the first one is replaced by the
    double point <(X1 - a1 X0) - c (X2 - a2 X0), (X2 - a2 X0)^2>.

    Returns the scheme and {component index: tangent direction (t1, t2)}.
    """
    rng = random.Random(seed)
    field = Field.parse(field)
    ring = PolyRing(3, field)
    count = count or rng.randint(4, 10)
    components = []
    for k, (a1, a2) in enumerate(random_points(rng, count)):
        point = AffinePoint.from_projective(field, (1, a1, a2))
        components.append(SchemeComponent(point, label=f"p{k + 1}"))
    tangents = {}
    if double:
        a1, a2 = components[0].point.affine
        c = rng.randint(-2, 2)
        x0, x1, x2 = ring.gens()
        u = x2 - x0 * a2
        gens = (x1 - x0 * a1 - u * c, u * u)
        components[0] = SchemeComponent(components[0].point, gens, "p1")
        tangents[0] = (c, 1)
    X = scheme_from_components(ring, components, name=f"random-{seed}")
    return X, tangents


def random_scheme(seed, field="Q", double=False, count=None):
    return random_instance(seed, field, double, count)[0]


def enveloped(X, seed):
    """A complete intersection W around X, raising the degrees once if needed."""
    try:
        return ci_envelope(X, seed)
    except RetryBudgetExhaustedError:
        top = max(X.minimal_generator_degrees) + 1
        return ci_envelope(X, seed, [top] * X.ring.n)


def instances(count, start=0):
    """(seed, field, double) triples alternating fields and double points."""
    out = []
    for k in range(count):
        field = "Q" if k % 2 == 0 else f"Fp:{PRIME}"
        out.append((start + k, field, k % 4 in (1, 2)))
    return out


def _derivative(mono, point, direction):
    """Derivative of a monomial along (0, t1, ..., tn) at the point (1 : a1 : ... : an)."""
    total = 0
    for k, t in enumerate(direction, start=1):
        if not t or not mono[k]:
            continue
        term = point.coords[0] * 0 + mono[k] * t
        for j, e in enumerate(mono):
            power = e - 1 if j == k else e
            if power:
                term = term * point.coords[j] ** power
        total = total + term
    return total


def evaluation_hf(X, d, tangents=None):
    """
    HF_X(d) as the rank of point evaluations, plus one tangent derivative per
    curvilinear double point.
    """
    tangents = tangents or {}
    width = len(X.points)
    rows = []
    for m in X.ring.graded_basis(d):
        mono = X.ring.monomial(m)
        row = {k: v for k, p in enumerate(X.points) if (v := evaluate(mono, p))}
        for pos, (j, direction) in enumerate(sorted(tangents.items())):
            v = _derivative(m, X.points[j], direction)
            if v:
                row[width + pos] = v
        rows.append(row)
    return rank(rows, X.field)


def dense_hf(ring, gens, d):
    """dim P_d minus the rank of all multiples m * g of degree d."""
    monos = ring.graded_basis(d)
    index = {m: k for k, m in enumerate(monos)}
    rows = []
    for g in gens:
        if g.degree > d:
            continue
        for m in ring.graded_basis(d - g.degree):
            rows.append({index[t]: c for t, c in g.shift(m).terms.items()})
    return len(monos) - rank(rows, ring.field)


def points_scheme(ring, coords, name=""):
    """Reduced scheme of the given projective points, labelled p1, p2, ..."""
    components = [SchemeComponent(AffinePoint.from_projective(ring.field, c), label=f"p{k + 1}")
                  for k, c in enumerate(coords)]
    return scheme_from_components(ring, components, name)


COLLINEAR = [(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 0, 1)]
