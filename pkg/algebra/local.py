"""
Local algebras O_{X,p} of a 0-dimensional scheme at K-rational points.

The component ideal is dehomogenized at X0 = 1 and translated so that the
point sits at the origin. The algebra K[y]/J is then computed in truncations
K[y]/(J + m^N) for growing N; once two consecutive truncations have the same
dimension, m^N lies in J and the truncation is the local algebra itself.
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Optional, Sequence

from config import settings
from algebra.errors import NonPrimaryComponentError
from algebra.linalg import EchelonForm, concat, kernel
from algebra.polycore import (
    AffinePoint,
    Poly,
    PolyRing,
    dehomogenize,
    homogenize,
    mono_mul,
    monomials_of_degree,
    translate,
)

logger = logging.getLogger(__name__)


class LocalAlgebra:
    """
    The finite local algebra of a primary component at its point.

    Elements are dict vectors over ``basis``, a tuple of monomials in the
    local coordinates y_k = X_k/X0 - a_k whose first entry is 1.
    """

    def __init__(self, ring: PolyRing, point: AffinePoint, generators: Sequence[Poly],
                 bound: Optional[int] = None):
        if len(point.coords) != ring.nvars:
            raise NonPrimaryComponentError(
                f"point {point} does not lie in P^{ring.n}")
        self.ring = ring
        self.point = point
        self.affine = ring.affine_ring()
        self.local_generators = [translate(dehomogenize(g), point.affine) for g in generators]
        bound = bound if bound is not None else settings.DEGREE_SAFETY_BOUND

        previous = None
        for order in range(1, bound + 2):
            current = self._truncation(order)
            if current[0] == 0:
                raise NonPrimaryComponentError(
                    f"point {point} is not in the zero locus of the component ideal")
            if previous is not None and current[0] == previous[0]:
                break
            previous = current
        else:
            raise NonPrimaryComponentError(
                f"local algebra at {point} does not stabilize below order {bound}; "
                "the component is not 0-dimensional at this point")

        dim, self.order, self._echelon, self._monos, self._columns = previous
        free = [k for k in range(len(self._monos)) if k not in self._echelon.pivots]
        free.sort(key=lambda k: (sum(self._monos[k]), k))
        self.basis = tuple(self._monos[k] for k in free)
        self._position = {col: pos for pos, col in enumerate(free)}
        self._germ_cache: dict = {}
        self._products: dict = {}
        logger.debug("local algebra at %s: dim %d, m^%d = 0", point, dim, self.order)

    def _truncation(self, order: int):
        """Dimension and echelon data of K[y]/(J + m^order)."""
        nvars = self.affine.nvars
        monos = [m for d in reversed(range(order)) for m in monomials_of_degree(nvars, d)]
        columns = {m: k for k, m in enumerate(monos)}
        ech = EchelonForm(field=self.ring.field)
        for t in monos:
            for g in self.local_generators:
                vec = {}
                for m, c in g.terms.items():
                    prod = mono_mul(m, t)
                    if sum(prod) < order:
                        vec[columns[prod]] = c
                if vec:
                    ech.insert(vec)
        return len(monos) - ech.rank, order, ech, monos, columns

    # vectors ---------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def unit_vector(self, pos: int) -> dict:
        return {pos: self.ring.field.one}

    def one(self) -> dict:
        return self.unit_vector(0)

    def reduce_local(self, g: Poly) -> dict:
        """Vector of a polynomial already written in the local coordinates."""
        vec = {}
        for m, c in g.terms.items():
            if sum(m) < self.order:
                vec[self._columns[m]] = c
        rem = self._echelon.reduce(vec)
        return {self._position[col]: c for col, c in rem.items()}

    def germ(self, f: Poly) -> dict:
        """Image of a homogeneous form of P in O_{X,p}."""
        self.ring.check(f.ring)
        out: dict = {}
        zero = self.ring.field.zero
        for mono, c in f.terms.items():
            image = self._germ_cache.get(mono)
            if image is None:
                local = translate(self.affine.monomial(mono[1:]), self.point.affine)
                image = self.reduce_local(local)
                self._germ_cache[mono] = image
            for pos, v in image.items():
                new = out.get(pos, zero) + c * v
                if new:
                    out[pos] = new
                else:
                    out.pop(pos, None)
        return out

    def lift(self, vec: dict) -> Poly:
        """Representative in the local coordinates."""
        return Poly(self.affine, {self.basis[pos]: c for pos, c in vec.items() if c})

    def lift_form(self, vec: dict) -> Poly:
        """Homogeneous form of P whose germ is vec (at this point)."""
        local = self.lift(vec)
        shifted = translate(local, [-a for a in self.point.affine])
        return homogenize(shifted, max(shifted.degree, 0))

    # multiplication --------------------------------------------------------

    def _basis_product(self, i: int, j: int) -> dict:
        key = (i, j) if i <= j else (j, i)
        if key not in self._products:
            prod = mono_mul(self.basis[i], self.basis[j])
            self._products[key] = self.reduce_local(self.affine.monomial(prod))
        return self._products[key]

    def multiply(self, u: dict, v: dict) -> dict:
        out: dict = {}
        zero = self.ring.field.zero
        for i, a in u.items():
            for j, b in v.items():
                for pos, c in self._basis_product(i, j).items():
                    out[pos] = out.get(pos, zero) + a * b * c
        return {pos: c for pos, c in out.items() if c}

    @cached_property
    def mult_table(self) -> dict:
        """Structure constants {(i, j): basis_i * basis_j} for i <= j."""
        return {(i, j): self._basis_product(i, j)
                for i in range(self.dim) for j in range(i, self.dim)}

    def multiply_by_variable(self, k: int, u: dict) -> dict:
        exps = [0] * self.affine.nvars
        exps[k] = 1
        var = self.reduce_local(self.affine.monomial(tuple(exps)))
        return self.multiply(var, u)

    # structure -------------------------------------------------------------

    @property
    def maximal_ideal_basis(self) -> list:
        return [self.unit_vector(pos) for pos in range(1, self.dim)]

    @cached_property
    def socle(self) -> list:
        """Basis of Ann(m), as vectors."""
        nvars = self.affine.nvars
        images = []
        for pos in range(self.dim):
            blocks = [self.multiply_by_variable(k, self.unit_vector(pos)) for k in range(nvars)]
            images.append(concat(blocks, [self.dim] * nvars))
        return kernel(images, self.ring.field)

    @property
    def socle_dimension(self) -> int:
        return len(self.socle)

    @property
    def is_gorenstein(self) -> bool:
        return self.socle_dimension == 1

    def is_socle_element(self, vec: dict) -> bool:
        if not any(vec.values()):
            return False
        return all(not self.multiply_by_variable(k, vec) for k in range(self.affine.nvars))

    def default_socle_direction(self) -> Optional[dict]:
        """The socle generator of a Gorenstein algebra, else None."""
        return self.socle[0] if self.is_gorenstein else None

    def __repr__(self):
        return f"LocalAlgebra(point={self.point}, dim={self.dim})"
